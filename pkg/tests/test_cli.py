import json
import subprocess
import sys

import pytest

from lcthresh import cli
from lcthresh.corpus import shipped_path
from lcthresh.polynomial import parse
from lcthresh.threshold import format_rational, lct_candidate, weight_search


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_cusp(capsys):
    code, out, err = run(capsys, "eval", "--poly", "x^7+y^3+z^2", "--weight", "6,14,21")
    assert code == 0 and err == ""
    assert "c = 41/42" in out
    assert "S = P(1,1,1)" in out
    assert "delta = 6/7, 2/3, 1/2" in out
    assert "t^42" in out


def test_eval_json_matches_library(capsys):
    code, out, _ = run(capsys, "eval", "--poly", "z^2+x^5+y^4", "--weight", "4,5,10", "--json")
    data = json.loads(out)
    report = lct_candidate(parse("z^2+x^5+y^4"), (4, 5, 10))
    assert code == 0
    assert data["threshold"] == report.to_json()
    assert data["k3"]["m"] == 20 and data["k3"]["weight4"] == [4, 5, 10, 1]


def test_eval_json_is_deterministic(capsys):
    argv = ("eval", "--poly", "x^3y+y^2z+xz^2", "--weight", "3,4,5", "--json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_eval_upper_bound_label(capsys):
    code, out, err = run(capsys, "eval", "--poly", "x", "--weight", "1,1,1")
    assert "c = 3" in out and "upper bound only" in out
    assert "warning" in err
    assert code == 1


def test_eval_weight_is_normalized(capsys):
    code, out, _ = run(capsys, "eval", "--poly", "x^5+y^2", "--vars", "xy", "--weight", "4,10")
    assert code == 0 and "c = 7/10" in out and "(2,5)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--poly", "x^^2", "--weight", "1,1,1"),
        ("eval", "--poly", "x", "--weight", "1,a,1"),
        ("eval", "--poly", "x", "--weight", "1,1"),
        ("search", "--poly", "x+", "--max-weight", "3"),
        ("search", "--poly", "x", "--max-weight", "0"),
        ("graph", "--file", "/nonexistent/graph.json", "--op", "klt"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_error_message_has_offset(capsys):
    _, _, err = run(capsys, "eval", "--poly", "x+é", "--weight", "1,1,1")
    assert "at byte 2" in err


def test_search_matches_library(capsys):
    code, out, _ = run(capsys, "search", "--poly", "x^3z+y^4+z^3", "--max-weight", "12", "--json")
    w, c = weight_search(parse("x^3z+y^4+z^3"), 12)
    data = json.loads(out)
    assert code == 0 and data["weight"] == list(w) and data["candidate"] == format_rational(c)


def test_search_bound_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("LCT_MAX_WEIGHT", "5")
    _, out, _ = run(capsys, "search", "--poly", "x^7+y^3+z^2", "--json")
    assert json.loads(out)["maxWeight"] == 5
    monkeypatch.setenv("LCT_MAX_WEIGHT", "many")
    code, _, _ = run(capsys, "search", "--poly", "x^7+y^3+z^2")
    assert code == 2


def test_verdicts(capsys):
    code, out, _ = run(capsys, "verdict", "--poly", "z^3+y^4+x^2y^2+x^3z")
    assert code == 0 and out.startswith("NonExceptional 5/6")
    code, out, _ = run(capsys, "verdict", "--poly", "x^4+y^4+z^3", "--json")
    assert json.loads(out)["kind"] == "Exceptional"


def test_verdict_normalization_required(capsys):
    code, _, err = run(capsys, "verdict", "--poly", "(x+z)^3+y^4+x^5")
    assert code == 1 and "error" in err


def test_graph_ops(capsys):
    path = str(shipped_path("graphs/eq1.json"))
    code, out, _ = run(capsys, "graph", "--file", path, "--op", "invariants")
    assert code == 0 and "d = -Z^2 = 3" in out and "pa(Z) = 1" in out
    code, out, _ = run(capsys, "graph", "--file", path, "--op", "fundamental-cycle", "--json")
    data = json.loads(out)
    assert data["cycle"]["circle"] == 2 and data["selfIntersection"] == -3
    code, out, _ = run(capsys, "graph", "--file", str(shipped_path("graphs/a5_c1.json")), "--op", "discrepancy")
    assert "r[A3] = -3/4" in out
    code, out, _ = run(capsys, "graph", "--file", str(shipped_path("graphs/a4_c1_c2.json")), "--op", "klt")
    assert out.strip() == "klt"


def test_graph_without_marks_fails(capsys):
    code, _, err = run(capsys, "graph", "--file", str(shipped_path("graphs/eq1.json")), "--op", "discrepancy")
    assert code == 1 and "C1" in err


def test_corpus_verify(capsys):
    code, out, _ = run(capsys, "corpus", "verify")
    assert code == 0 and "0 failed" in out and "all rows pass" in out
    code, out, _ = run(capsys, "corpus", "verify", "-v")
    assert "warn T3 IV #64" in out


def test_corpus_verify_reports_failure(capsys, tmp_path):
    rows = json.loads(shipped_path().read_text(encoding="utf-8"))[:2]
    rows[1]["c"] = "1/2"
    path = tmp_path / "rows.json"
    path.write_text(json.dumps(rows), encoding="utf-8")
    code, out, _ = run(capsys, "corpus", "verify", "--file", str(path))
    assert code == 1 and "FAIL T1 #1 Ta: c: expected 1/2, got 29/30" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lcthresh", "search", "--poly", "x^5+y^2", "--vars", "xy", "--max-weight", "9"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "7/10" in proc.stdout
