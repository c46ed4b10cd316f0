"""Binary extension fields GF(2^s) on packed integers."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

# Lowest-weight irreducible polynomial of each degree (trinomial when one
# exists, else pentanomial), bit i = coefficient of x^i.
IRREDUCIBLE = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x187,
    9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x2027, 14: 0x4021,
    15: 0x8003, 16: 0x10047, 17: 0x20009, 18: 0x40009, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021,
    24: 0x1000087, 25: 0x2000009, 26: 0x4000047, 27: 0x8000027,
    28: 0x10000003, 29: 0x20000005, 30: 0x40000003, 31: 0x80000009,
    32: 0x100400007,
}
MAX_DEGREE = 32
TABLE_DEGREE = 8  # full product table up to 2^8 x 2^8 entries


class UnsupportedFieldError(ValueError):
    pass


class FieldMismatchError(TypeError):
    pass


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


@lru_cache(maxsize=None)
def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(m)/2."""
    s = m.bit_length() - 1
    if s < 1:
        return False
    for d in range(1, s // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if poly_mod(m, p) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    s: int
    modulus: int
    _table: tuple[int, ...] | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.modulus.bit_length() - 1 != self.s:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.s}")
        if self.s > MAX_DEGREE:
            raise UnsupportedFieldError(f"degree {self.s} above {MAX_DEGREE}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")
        if self.s <= TABLE_DEGREE:
            q = 1 << self.s
            table = tuple(poly_mod(clmul(a, b), self.modulus) for a in range(q) for b in range(q))
            object.__setattr__(self, "_table", table)

    @classmethod
    def of_degree(cls, s: int) -> "FieldSpec":
        if s not in IRREDUCIBLE:
            raise UnsupportedFieldError(f"no built-in modulus of degree {s}")
        return _spec_for_degree(s)

    @property
    def order(self) -> int:
        return 1 << self.s

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[(a << self.s) | b]
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def random_bits(self, rng: random.Random) -> int:
        return rng.getrandbits(self.s)

    def __call__(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


@lru_cache(maxsize=None)
def _spec_for_degree(s: int) -> FieldSpec:
    return FieldSpec(s, IRREDUCIBLE[s])


def field_make(k: int) -> FieldSpec:
    """Smallest built-in field with at least ``4k`` elements (and at least 4)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    s = max(2, math.ceil(math.log2(4 * k)))
    if s > MAX_DEGREE:
        raise UnsupportedFieldError(f"k={k} needs a field of degree {s} > {MAX_DEGREE}")
    return FieldSpec.of_degree(s)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.spec.order:
            raise ValueError(f"{self.bits} is not an element of GF(2^{self.spec.s})")

    def _other(self, other: object) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.spec != self.spec:
            raise FieldMismatchError(
                f"operands from GF(2^{self.spec.s}) and GF(2^{other.spec.s})"
            )
        return other.bits

    def __add__(self, other: "FieldElement") -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.bits ^ b)

    __sub__ = __add__

    def __neg__(self) -> "FieldElement":
        return self

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.bits, b))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.bits, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"GF(2^{self.spec.s})({self.bits:#x})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b
