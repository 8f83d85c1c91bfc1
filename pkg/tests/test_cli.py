import json
import subprocess
import sys

import pytest

from qcpn.cli import main
from qcpn.suites import exit_status, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_leibniz_report(capsys):
    code, out, err = run(capsys, "verify", "leibniz", "--n", "3")
    rows = json.loads(out)
    assert code == 0
    assert {r["witness"].get("lambda") for r in rows} >= {"q^2"}
    assert {r["witness"].get("zeta") for r in rows} >= {"q^-2"}
    for r in rows:
        assert set(r) == {"suite", "item", "paper_ref", "status", "witness", "elapsed_ms"}
        assert r["paper_ref"] and r["elapsed_ms"] is None
    assert "[leibniz]" in err and "[leibniz]" not in out


def test_dims_table(capsys):
    code, out, _ = run(capsys, "dims", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["k,dim,expected", "0,1,1", "1,4,4", "2,6,6", "3,4,4", "4,1,1"]


@pytest.mark.slow
def test_dims_n4(capsys):
    from math import comb
    code, out, _ = run(capsys, "dims", "--n", "4")
    assert code == 0
    assert [int(line.split(",")[1]) for line in out.splitlines()[1:]] == [comb(6, k) for k in range(7)]


def test_branch_table(capsys):
    code, out, _ = run(capsys, "branch", "--partition", "3,2", "--n", "3")
    d = json.loads(out)
    assert code == 0 and len(d["summands"]) == 6
    assert sorted(s["m"] for s in d["summands"]) == [-3, -2, -1, 0, 1, 2]
    code, out, _ = run(capsys, "branch", "--partition", "3,2", "--n", "3", "--format", "csv")
    assert out.splitlines()[1] == "(1),2,2"


def test_bconst_fails_with_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "bconst", "--n", "2", "--format", "text")
    assert code == 1
    assert out.startswith("FAIL")
    assert "PASS      bconst: k=0: B(z, nu_k) = q^-2/(k+1)_{q^2}" in out


def test_solidity_and_q(capsys):
    code, out, _ = run(capsys, "verify", "solidity", "--n", "2", "--q", "2")
    rows = json.loads(out)
    assert code == 0
    assert rows[-1]["witness"]["verdict"] == "positive"
    code, out, _ = run(capsys, "verify", "solidity", "--n", "2", "--q", "1")
    assert code == 2 and json.loads(out)["status"] == "error"


def test_undecided_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "solidity", "--n", "2", "--q", "2", "--degree-bound", "0")
    assert code == 3
    assert any(r["status"] == "undecided" for r in json.loads(out))


def test_spectrum_needs_overrides(capsys, tmp_path):
    code, out, _ = run(capsys, "spectrum", "--n", "2", "--q", "2")
    assert code == 2 and "illustrative inputs, not derived values" in out
    f = tmp_path / "ov.json"
    f.write_text(json.dumps({"A": [1], "mu": [1]}))
    dest = tmp_path / "table.csv"
    code, out, _ = run(capsys, "spectrum", "--n", "2", "--q", "2", "--lmax", "3", "--overrides", str(f), "--out", str(dest))
    assert code == 0 and out == ""
    lines = dest.read_text().splitlines()
    assert lines[0] == "k,l,family,eigenvalue,multiplicity" and len(lines) == 1 + 1 + 8
    code, out, _ = run(capsys, "spectrum", "--n", "2", "--lmax", "1", "--dirac")
    assert "+sqrt(mu_0)" in out


def test_ladder_command(capsys):
    code, out, _ = run(capsys, "ladder", "--n", "2")
    assert code == 0 and json.loads(out)["lambda"] == "q^2"


def test_deterministic_output(capsys):
    _, a, _ = run(capsys, "verify", "hodge", "--n", "3")
    _, b, _ = run(capsys, "verify", "hodge", "--n", "3")
    assert a == b
    _, c, _ = run(capsys, "verify", "hodge", "--n", "3", "--timing")
    assert all(r["elapsed_ms"] is not None for r in json.loads(c))


def test_bad_input(capsys):
    code, out, _ = run(capsys, "dims", "--n", "1")
    assert code == 2
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


@pytest.mark.parametrize("suite", ["relations", "hopf", "nu", "gelfand"])
def test_suites_pass_n3(suite):
    rows = run_suite(suite, 3, lmax=10) if suite == "gelfand" else run_suite(suite, 3)
    assert exit_status(rows) == 0


def test_exit_status_rules():
    assert exit_status([{"status": "pass"}]) == 0
    assert exit_status([{"status": "pass"}, {"status": "undecided"}]) == 3
    assert exit_status([{"status": "undecided"}, {"status": "fail"}]) == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qcpn", "branch", "--partition", "1", "--n", "3", "--format", "csv"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["nubar,m,dim", "(1),0,2", "(),-1,1"]
