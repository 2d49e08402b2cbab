import json

import pytest

from tautilt.cli import main
from tautilt.specfile import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ["algebra", "check"], ["tau", "list"], ["stt", "list"], ["bongartz"], ["perp"],
    ["seq", "list"], ["seq", "list", "--signed", "--length", "1"], ["cluster", "build"],
])
def test_commands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip()


def test_tau_list_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "tau", "list", "--algebra", "a2-dual-numbers")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert sorted(r["dims"] for r in data["sections"]["modules"]) == ["(0,2)", "(2,0)", "(2,2)"]


def test_stt_counts(capsys):
    for alg, n in [("a2", 5), ("a3", 14), ("example-7", 5), ("a3-dual-numbers", 14), ("a3-rad2", 12)]:
        code, out, _ = run(capsys, "--format", "json", "stt", "list", "--algebra", alg)
        assert code == 0 and json.loads(out)["count"] == n


def test_seq_list_signed(capsys):
    code, out, _ = run(capsys, "seq", "list", "--signed", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 10
    code, out, _ = run(capsys, "seq", "list", "--format", "json")
    labels = {r["sequence"] for r in json.loads(out)["sections"]["sequences"]}
    assert labels == {"(P1, S1)", "(P2, P1)", "(S1, P2)"}


def test_cluster_dot(capsys):
    code, out, _ = run(capsys, "cluster", "build", "--dot", "--algebra", "example-7")
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 11
    code2, out2, _ = run(capsys, "--format", "dot", "cluster", "build", "--algebra", "example-7")
    assert out2 == out


def test_cluster_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "cluster", "build", "--algebra", "example-7")
    data = json.loads(out)
    assert len(data["objects"]) == 5 and data["objects"][0]["label"] == "mod Lambda"


def test_verify_paper_example(capsys):
    code, out, _ = run(capsys, "verify", "paper-example")
    assert code == 0
    assert "FAIL" not in out and out.rstrip().endswith("status: PASS")


def test_verify_bijections(capsys):
    code, out, _ = run(capsys, "verify", "bijections", "--algebra", "a3-dual-numbers", "--seed", "3")
    assert code == 0, out


def test_verification_failure_exit_code(capsys):
    # over the dual numbers the reductions are mod k[x]/(x^2), not 4-dimensional
    code, out, _ = run(capsys, "verify", "paper-example", "--algebra", "a2-dual-numbers")
    assert code == 1
    assert "status: FAIL" in out


@pytest.mark.parametrize("argv", [
    ["nonsense"], ["tau"], ["tau", "frobnicate"], ["--algebra", "nope", "tau", "list"],
    ["--pd-cap", "0", "algebra", "check"], ["--format", "xml", "tau", "list"],
    ["verify", "bijections", "--algebra", "a3"], ["seq", "list", "--length", "-1"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_spec_file(capsys, tmp_path):
    p = tmp_path / "alg.json"
    p.write_text(json.dumps(FIXTURES["a3-rad2"]))
    code, out, _ = run(capsys, "--format", "json", "algebra", "check", "--algebra", str(p))
    assert code == 0
    data = json.loads(out)
    inv = {r["property"]: r["value"] for r in data["sections"]["invariants"]}
    assert inv["dimension"] == "5" and inv["pd of simples"] == "2 1 0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({**FIXTURES["a2"], "extra": 1}))
    assert run(capsys, "tau", "list", "--algebra", str(bad))[0] == 2


def test_pd_cap(capsys):
    code, out, _ = run(capsys, "--pd-cap", "3", "--format", "json", "algebra", "check", "--algebra", "dual-numbers")
    inv = {r["property"]: r["value"] for r in json.loads(out)["sections"]["invariants"]}
    assert inv["pd of simples"] == ">=3"


@pytest.mark.parametrize("argv", [
    ["cluster", "build", "--algebra", "example-7", "--format", "json"],
    ["seq", "list", "--signed", "--algebra", "a3"],
    ["perp", "--algebra", "a3-rad2"],
])
def test_deterministic(capsys, argv):
    outs = [run(capsys, *argv)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_deterministic_across_processes(tmp_path):
    import os
    import subprocess
    import sys
    cmd = [sys.executable, "-m", "tautilt.cli", "--format", "json", "cluster", "build", "--algebra", "a3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": "123"}).stdout
    assert a == b and a
