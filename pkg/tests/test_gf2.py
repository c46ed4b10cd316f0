import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpath.gf2 import (
    IRREDUCIBLE,
    FieldElement,
    FieldMismatchError,
    FieldSpec,
    UnsupportedFieldError,
    clmul,
    field_add,
    field_make,
    field_mul,
    is_irreducible,
    poly_mod,
)


def test_field_make_examples():
    assert field_make(4).s == 4 and field_make(4).order == 16
    assert field_make(1).s == 2 and field_make(1).order == 4
    assert field_make(10).s == 6 and field_make(10).order >= 40
    for k in range(1, 300):
        spec = field_make(k)
        assert spec.order >= 4 * k
        assert spec.order < 8 * k or spec.s == 2


def test_field_make_limits():
    assert field_make(2**30).s == 32
    with pytest.raises(UnsupportedFieldError):
        field_make(2**30 + 1)
    with pytest.raises(ValueError):
        field_make(0)


def test_builtin_moduli_are_irreducible():
    for s, m in IRREDUCIBLE.items():
        assert m.bit_length() - 1 == s
        assert is_irreducible(m)


def test_reducible_modulus_rejected():
    assert not is_irreducible(0b101)  # x^2 + 1 = (x + 1)^2
    with pytest.raises(ValueError):
        FieldSpec(2, 0b101)


def test_table_and_shift_xor_agree():
    spec = FieldSpec.of_degree(8)
    rng = random.Random(1)
    for _ in range(2000):
        a, b = rng.getrandbits(8), rng.getrandbits(8)
        assert spec.mul(a, b) == poly_mod(clmul(a, b), spec.modulus)


def test_aes_style_product():
    # 0x53 * 0xCA = 1 modulo x^8 + x^4 + x^3 + x + 1
    assert poly_mod(clmul(0x53, 0xCA), 0x11B) == 1


@pytest.mark.parametrize("k", [1, 2, 4, 8, 10, 1000])
def test_field_axioms(k):
    spec = field_make(k)
    rng = random.Random(k)
    zero, one = spec.zero, spec.one
    for _ in range(1000):
        a, b, c = (spec(spec.random_bits(rng)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + a == zero and a + zero == a and a * one == a
        if a:
            assert a * a.inverse() == one


@pytest.mark.parametrize("s", [2, 5, 9, 16, 32])
def test_frobenius_fixes_every_element(s):
    spec = FieldSpec.of_degree(s)
    rng = random.Random(s)
    for _ in range(100):
        a = spec(spec.random_bits(rng))
        x = a
        for _ in range(s):
            x = x * x
        assert x == a


def test_mixed_fields_rejected():
    a, b = field_make(1)(1), field_make(4)(1)
    with pytest.raises(FieldMismatchError):
        field_add(a, b)
    with pytest.raises(FieldMismatchError):
        field_mul(a, b)


def test_element_range_checked():
    with pytest.raises(ValueError):
        FieldElement(field_make(1), 4)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field_make(3).zero.inverse()


@settings(max_examples=200)
@given(st.integers(1, 32), st.data())
def test_nonzero_elements_have_inverses(s, data):
    spec = FieldSpec.of_degree(max(s, 2))
    a = data.draw(st.integers(1, spec.order - 1))
    assert spec.mul(a, spec.inv(a)) == 1
