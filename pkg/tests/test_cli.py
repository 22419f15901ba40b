import json
import subprocess
import sys

import pytest

from shadowcalc.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["op", "--kind", "lower", "--n", "4", "--k", "1"], "4"),
        (["op", "--kind", "upper", "--n", "4", "--k", "1"], "1"),
        (["op", "--kind", "shift", "--n", "4", "--k", "1"], "8"),
        (["op", "--kind", "delta", "--n", "4", "--k", "1"], "1"),
        (["expand", "--n", "4", "--dim", "1"], "C(3,2) + C(1,1)"),
        (["expand", "--n", "0", "--dim", "3"], "0"),
        (["phi", "--beta", "0,1"], "3,3"),
        (["psi", "--f", "3,3"], "0,1"),
        (["compat", "--f", "3,3", "--beta", "0,1"], "true"),
        (["compat", "--f", "3,3", "--beta", "1,1"], "false: chi(-1) = 0"),
        (["compat", "--f", "4,4", "--beta", "0,1", "--mode", "relaxed", "--eps", "0,1"], "true"),
        (["fvec", "--f", "3,3,1"], "true"),
        (["maximal", "--f", "3,3", "--beta", "0,1"], "true"),
        (["minimal", "--f", "4,4", "--beta", "0,1"], "false"),
    ],
)
def test_text_output(capsys, argv, expected):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert out == expected


def test_fvec_names_violation(capsys):
    code, out, _ = call(capsys, "fvec", "--f", "2,3")
    assert code == 0 and out.startswith("false: lower_shadow(f_1, 1) = 3 > f_0 = 2")


def test_betti_json(capsys):
    code, out, _ = call(capsys, "betti", "--vertices", "3", "--facets", "0 1; 1 2; 0 2", "--json")
    assert code == 0
    assert json.loads(out) == {"f": [3, 3], "betti": [0, 1], "cycle_dims": [2, 1], "field": "Q"}


def test_json_is_deterministic(capsys):
    outs = {call(capsys, "exchange", "--n", "1", "--m", "3", "--k", "1", "--eps", "1", "--json")[1] for _ in range(3)}
    assert len(outs) == 1
    payload = json.loads(outs.pop())
    assert payload["b"] == [True, True]


@pytest.mark.parametrize(
    "argv",
    [
        ["compat", "--f", "3,x", "--beta", "0"],
        ["compat", "--f", "3,3", "--beta", "0,1", "--eps", "0"],
        ["exchange", "--n", "1", "--m", "3", "--k", "1", "--eps", "2"],
        ["psi", "--f", "2,3"],
        ["betti", "--vertices", "2", "--facets", "0 5"],
        ["enumerate", "--max-vertices", "7"],
        ["sieve", "--limit", "0"],
        ["sieve", "--limit", "100", "--n", "500"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err.startswith("shadowcalc ")


def test_sieve_budget_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("SHADOWCALC_MEM_LIMIT", "1K")
    code, _, err = call(capsys, "sieve", "--limit", "100000", "--verify")
    assert code == 2 and "SHADOWCALC_MEM_LIMIT" in err


def test_sieve_verify(capsys):
    code, out, _ = call(capsys, "sieve", "--limit", "10000", "--verify")
    assert code == 0 and out.endswith("all hold")
    code, out, _ = call(capsys, "sieve", "--limit", "100", "--n", "30", "--k", "2", "--json")
    assert json.loads(out) == {"n": 30, "k": 2, "sigma": 7, "sigma_odd": 2, "bjorner_ok": True, "corollary_ok": True}


def test_enumerate_counts(capsys):
    code, out, _ = call(capsys, "enumerate", "--max-vertices", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"complexes": {"1": 1, "2": 2, "3": 9, "4": 114}, "total": 126}


def test_enumerate_verify_small(capsys):
    code, out, _ = call(capsys, "enumerate", "--max-vertices", "3", "--verify")
    assert code == 0 and out.endswith("all verified")


def test_scan_f_star(capsys):
    code, out, _ = call(capsys, "scan-f-star", "--max-vertices", "3")
    assert code == 0
    assert "f=2,1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "shadowcalc", "op", "--kind", "lower", "--n", "4", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "4"
