import json

import pytest

from kpath.cli import main
from kpath.generators import complete_graph, path_graph, star_graph
from kpath.graph import parse_graph
from kpath.harness import growth_factors, run_verify
from kpath.homcount import sub_path
from kpath.report import TrialReport

K3 = "3 3 undirected\n0 1\n1 2\n0 2\n"


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text(K3)
    return str(path)


@pytest.fixture
def edgeless_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("6 0 undirected\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report_of(out):
    lines = out.strip().splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


def test_decide_dfs_yes(capsys, k3_file):
    code, out, _ = run(capsys, "decide", "--input", k3_file, "--k", "3", "--algo", "dfs", "--witness")
    report = report_of(out)
    assert code == 0 and report["decision"] == "YES"
    assert sorted(report["witness"]) == [0, 1, 2]
    assert set(report) == {"algorithm", "k", "seed", "trials_run", "decision", "witness", "count", "wall_time"}


def test_decide_algebraic_no(capsys, edgeless_file):
    code, out, _ = run(capsys, "decide", "--input", edgeless_file, "--k", "4", "--algo", "algebraic")
    assert code == 1 and report_of(out)["decision"] == "NO"


@pytest.mark.parametrize("algo", ["dfs", "color-coding", "divide-color", "count-ie", "count-colorful", "algebraic"])
def test_decide_every_engine(capsys, k3_file, edgeless_file, algo):
    code, out, _ = run(capsys, "decide", "--input", edgeless_file, "--k", "2", "--algo", algo)
    assert code == 1 and report_of(out)["algorithm"] == algo
    code, out, _ = run(capsys, "decide", "--input", k3_file, "--k", "2", "--algo", algo, "--seed", "7")
    assert code == 0 and report_of(out)["seed"] == 7


def test_decide_usage_errors(capsys, k3_file, tmp_path):
    assert run(capsys, "decide", "--input", k3_file, "--k", "3", "--algo", "nosuch")[0] == 2
    assert run(capsys, "decide", "--input", k3_file, "--k", "0", "--algo", "dfs")[0] == 2
    assert run(capsys, "decide", "--input", str(tmp_path / "missing"), "--k", "2", "--algo", "dfs")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1 directed\n0 0\n")
    code, _, err = run(capsys, "decide", "--input", str(bad), "--k", "2", "--algo", "dfs")
    assert code == 2 and "line 2" in err
    assert run(capsys, "decide", "--input", k3_file, "--k", "2", "--algo", "dfs", "--seed", str(2**64))[0] == 2


def test_witness_request_on_decision_only_engine(capsys, k3_file):
    code, out, err = run(capsys, "decide", "--input", k3_file, "--k", "3", "--algo", "algebraic", "--witness")
    assert code == 0 and report_of(out)["witness"] is None
    assert "color-coding" in err


def test_count_examples(capsys, k3_file):
    code, out, _ = run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "ie")
    assert code == 0 and report_of(out)["count"] == 3
    code, out, _ = run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "appendix-a", "--colors", "1,2,3")
    assert report_of(out)["count"] == 6
    code, out, _ = run(capsys, "count", "--input", k3_file, "--k", "5", "--algo", "ie")
    assert code == 0 and report_of(out)["count"] == 0
    code, out, _ = run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "dfs")
    assert report_of(out)["count"] == 3
    code, out, _ = run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "colorful-ie", "--colors", "1,2,3")
    assert report_of(out)["count"] == 6


def test_count_drawn_coloring_is_deterministic(capsys, k3_file):
    outs = [run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "colorful-ie", "--seed", "11")[1] for _ in range(2)]
    a, b = (report_of(o) for o in outs)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_count_usage_errors(capsys, k3_file):
    assert run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "ie", "--colors", "1,2")[0] == 2
    assert run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "appendix-a", "--colors", "1,2,4")[0] == 2
    assert run(capsys, "count", "--input", k3_file, "--k", "3", "--algo", "appendix-a", "--colors", "1,x,2")[0] == 2


@pytest.mark.parametrize("algo", ["color-coding", "divide-color", "count-colorful", "algebraic"])
def test_decide_is_deterministic(capsys, tmp_path, algo):
    path = tmp_path / "g.txt"
    path.write_text(path_graph(6).to_text())
    reports = []
    for _ in range(2):
        _, out, _ = run(capsys, "decide", "--input", str(path), "--k", "5", "--algo", algo, "--seed", "123")
        r = report_of(out)
        r.pop("wall_time")
        reports.append(json.dumps(r, sort_keys=True))
    assert reports[0] == reports[1]


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--graphs", "30", "--seed", "1")
    assert code == 0
    assert out.count("pass") == 8 and "FAIL" not in out


def test_verify_catches_injected_fault():
    def broken_sub_path(g, k):
        value = sub_path(g, k)
        return value + 1 if k == 3 and value else value

    result = run_verify(max_n=4, graphs=30, seed=1, engines={"sub_path": broken_sub_path})
    assert not result.ok
    failure = result.failures[0]
    assert failure.invariant == "sub_path equals dfs count"
    dumped = failure.dump()
    graph = parse_graph(dumped.split("\n", 1)[1])
    assert sub_path(graph, failure.k) + 1 == broken_sub_path(graph, failure.k)


def test_verify_cli_exit_code_on_fault(capsys, monkeypatch):
    import kpath.harness as harness

    real = harness.default_engines

    def faulty():
        engines = real()
        engines["dc_search"] = lambda g, k, seed: (True, TrialReport("divide-color", k, seed, 1, "YES"))
        return engines

    monkeypatch.setattr(harness, "default_engines", faulty)
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--graphs", "25")
    assert code == 1
    assert "FAIL  no YES on no-instances" in out
    assert "counterexample" in out


def test_bench_writes_json_lines(capsys, tmp_path):
    out_file = tmp_path / "bench.jsonl"
    code, out, _ = run(capsys, "bench", "--kmax", "4", "--family", "path", "--reps", "2", "--out", str(out_file))
    assert code == 0
    records = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert records
    for r in records:
        assert {"algorithm", "k", "seed", "trials_run", "decision", "wall_time", "n", "m", "family", "rep"} <= set(r)
        assert r["decision"] == "YES" and r["family"] == "path"
    assert {r["rep"] for r in records} == {0, 1}
    assert "growth factor" in out


def test_bench_is_deterministic_modulo_time(capsys, tmp_path):
    rows = []
    for name in ("a.jsonl", "b.jsonl"):
        path = tmp_path / name
        run(capsys, "bench", "--kmax", "4", "--family", "random", "--reps", "2", "--seed", "5", "--out", str(path))
        recs = [json.loads(line) for line in path.read_text().splitlines()]
        for r in recs:
            r.pop("wall_time")
        rows.append(recs)
    assert rows[0] == rows[1]


def test_bench_usage_errors(capsys, tmp_path):
    assert run(capsys, "bench", "--kmax", "4", "--reps", "0", "--out", str(tmp_path / "x"))[0] == 2
    assert run(capsys, "bench", "--kmax", "4", "--out", str(tmp_path / "no" / "dir" / "x"))[0] == 2


def test_growth_factor_is_median_successive_ratio():
    records = [
        {"algorithm": "a", "k": k, "wall_time": t}
        for k, t in [(2, 1.0), (3, 2.0), (4, 8.0), (5, 16.0)]
    ]
    assert growth_factors(records) == {"a": 2.0}


def test_structured_generators():
    assert star_graph(5).m == 4 and complete_graph(5).m == 10


def test_growth_factor_averages_repetitions():
    # one slow outlier at k=3 moves the mean, where a median would hide it
    records = [
        {"algorithm": "a", "k": k, "wall_time": t}
        for k, t in [(2, 1.0), (2, 1.0), (2, 1.0), (3, 1.0), (3, 1.0), (3, 10.0)]
    ]
    assert growth_factors(records) == {"a": 4.0}
