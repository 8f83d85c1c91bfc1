import json
import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from qcpn.calculus import AStatus, LadderData, ladder
from qcpn.qarith import Q, qint
from qcpn.spectrum import (B_CONDITION_NOTE, assemble_spectrum, compact_resolvent_verdict, dirac_spectrum,
                           eigenvalue, limit_point, multiplicity, parse_overrides, solidity_verdict)

pos = st.fractions(min_value=Fr(1, 10), max_value=5)


def test_eigenvalue_examples():
    assert eigenvalue(0, 3, 7, Fr(4), 5) == 5
    assert eigenvalue(2, 1, Fr(4, 5), Fr(4), 1) == 12
    for l in range(6):
        assert eigenvalue(l, 2, 3, 1, 1) == (2 * l + 1) * (3 * l + 1)
    with pytest.raises(ValueError):
        eigenvalue(1, 1, 1, 0)


def test_eigenvalue_symbolic():
    assert eigenvalue(1, 1, Q ** -2, Q ** 2) == 2 * (Q ** -2 + 1)


@given(st.integers(0, 30), pos, pos)
def test_one_form_ladder_specialization(l, A, lam):
    # with B = 1/lambda the second factor is (l+1)_{1/lambda}
    assert eigenvalue(l, A, 1 / lam, lam) == (A * qint(l, lam) + 1) * qint(l + 1, 1 / lam)


def test_multiplicity_examples():
    for l in range(5):
        assert multiplicity(2, 0, l, "coexact") == 2 * l + 3
    assert multiplicity(4, 0, 0, "harmonic") == 1
    assert multiplicity(3, 1, 0, "coexact") == 10  # weight 3 w1
    assert multiplicity(3, 1, 0, "exact") == 8     # weight w1 + w2
    with pytest.raises(ValueError):
        multiplicity(3, 2, 0, "coexact")
    with pytest.raises(ValueError):
        multiplicity(3, 1, 0, "harmonic")
    with pytest.raises(ValueError):
        multiplicity(3, 1, 0, "bogus")


def test_solidity_examples():
    nz = ("nonzero", "ne_lambda_minus_1")
    assert solidity_verdict(Fr(4), nz, Fr(4, 5))["verdict"] == "solid+"
    assert solidity_verdict(1, 0, 0)["verdict"] == "not-solid"
    assert solidity_verdict(Fr(1, 4), Fr(-3, 4), 2)["verdict"] == "not-solid"
    assert solidity_verdict(Fr(4), nz, Fr(-3, 4))["verdict"] == "not-solid"
    assert solidity_verdict(Fr(1, 4), nz, 0)["verdict"] == "not-solid"
    assert solidity_verdict(1, AStatus("zero", "ne_lambda_minus_1"), Fr(1, 2))["verdict"] == "solid0"
    assert solidity_verdict(2.0, ("undecided", "undecided"), 1.0)["verdict"] == "undecided"
    with pytest.raises(ValueError):
        solidity_verdict(0, nz, 1)
    assert solidity_verdict(Fr(4), nz, 1)["note"] == B_CONDITION_NOTE


def test_limit_point_examples():
    assert limit_point(Fr(4), 0, Fr(4, 5)) == Fr(31, 15)
    assert limit_point(Fr(3), 0, 0) == 1
    assert limit_point(Fr(4), 1, 1) is None


def test_limit_point_degenerate_second_factor():
    # sympy limit of the eigenvalue formula: 2/3, i.e. A/(lambda - 1)
    assert limit_point(Fr(4), 2, Fr(-3, 4)) == Fr(2, 3)
    assert float(eigenvalue(200, 2, Fr(-3, 4), Fr(4))) == pytest.approx(2 / 3, abs=1e-9)


def test_limit_point_below_one():
    assert limit_point(Fr(1, 4), Fr(-3, 4), 2) == Fr(2, 3)
    assert limit_point(Fr(1, 2), 1, 0) == 3
    assert eigenvalue(200, 1, 0, 0.5) == pytest.approx(3)


@settings(max_examples=50)
@given(st.floats(1.2, 6), st.floats(0, 5))
def test_limit_point_matches_sequence(lam, B):
    lp = limit_point(lam, 0, B)
    assert abs(eigenvalue(200, 0, B, lam) - lp) <= 1e-9 * max(1, lp)


@settings(max_examples=30)
@given(st.floats(1.01, 3), st.floats(0.01, 3), st.floats(0.01, 3))
def test_growth_when_solid_plus(lam, A, B):
    seq = [eigenvalue(l, A, B, lam) for l in range(0, 300)]
    assert all(b > a for a, b in zip(seq, seq[1:]))


@settings(max_examples=60)
@given(st.floats(-0.95, -0.05), st.floats(-5, 5))
def test_sign_alternation_for_negative_lambda(lam, A):
    # lambda in (-1, 0), A != 0: some mu_l with l <= 50 is negative on the one-form ladder,
    # provided 1 + A/(1 - lambda) stays away from 0 (see the next test)
    if abs(1 + A / (1 - lam)) < 0.5 or A == 0:
        return
    B = 1 / lam
    assert any(eigenvalue(l, A, B, lam) < 0 for l in range(51))


@pytest.mark.parametrize("lam", [Fr(-1, 2), Fr(-9, 10), Fr(-1, 20)])
def test_no_sign_change_when_A_is_lambda_minus_one(lam):
    # first factor collapses to lambda^l and every term stays positive
    A = lam - 1
    for l in range(60):
        assert eigenvalue(l, A, 1 / lam, lam) > 0


def synthetic(A_status, B, lam=Q ** 2, n=2):
    return LadderData(n, None, [], lam, lam ** -1, [B] * (n - 1), [A_status] * (n - 1), [],
                      {"H00": "C", "H0k": {str(k): 0 for k in range(1, n)}, "index": 1})


@pytest.mark.parametrize("n,q0", [(2, Fr(2)), (2, Fr(4, 5)), (3, Fr(11, 10))])
def test_verdict_positive(n, q0):
    rep = compact_resolvent_verdict(ladder(n), q0)
    assert rep["verdict"] == "positive" and rep["spectral_triples"] and rep["index"] == 1


def test_verdict_negative_lists_limits():
    rep = compact_resolvent_verdict(synthetic(AStatus("zero", "ne_lambda_minus_1"), Q ** -2), Fr(2))
    assert rep["verdict"] == "negative"
    assert rep["limit_points"] == [str(1 + Fr(1, 4) / (1 - Fr(1, 4)))]


def test_verdict_undecided_and_errors():
    rep = compact_resolvent_verdict(synthetic(AStatus("undecided", "undecided"), Q ** -2), Fr(2))
    assert rep["verdict"] == "undecided"
    for bad in (0, 1, -2):
        with pytest.raises(ValueError):
            compact_resolvent_verdict(ladder(2), bad)


def test_expression_table():
    t = assemble_spectrum(2, l_max=2)
    assert t.rows[0] == {"k": 0, "l": 0, "family": "harmonic", "eigenvalue": 0, "multiplicity": 1}
    csv = t.to_csv().splitlines()
    assert csv[0] == "k,l,family,eigenvalue,multiplicity"
    assert "0,1,coexact,(A_0*(1) + 1)*(q^-2 + 1)*mu_0,5" in csv


def test_numeric_table_and_pairing():
    t = assemble_spectrum(3, "2", 3, {"A": [1, 2], "mu": ["1/2", 3]})
    assert t.meta["overrides"]["label"] == "illustrative inputs, not derived values"
    coexact = {(r["k"], r["l"]): r for r in t.rows if r["family"] == "coexact"}
    exact = {(r["k"] - 1, r["l"]): r for r in t.rows if r["family"] == "exact"}
    assert coexact.keys() == exact.keys()
    for key in coexact:
        assert coexact[key]["eigenvalue"] == exact[key]["eigenvalue"]
        assert coexact[key]["multiplicity"] == exact[key]["multiplicity"]
    for key, m in t.delta_multiplicities().items():
        assert m == 2 * coexact[key]["multiplicity"]


def test_numeric_table_needs_positive_overrides():
    with pytest.raises(ValueError):
        assemble_spectrum(2, "2", 3)
    with pytest.raises(ValueError):
        assemble_spectrum(2, "2", 3, {"A": [0], "mu": [1]})
    assert parse_overrides({"A_0": 2, "mu_0": "1/3"}) == {"A": {0: 2}, "mu": {0: Fr(1, 3)}}


def test_n2_eigenvalues_increase():
    q0 = Fr(3, 2)
    t = assemble_spectrum(2, q0, 200, {"A": [1], "mu": [1]})
    ev = [r["eigenvalue"] for r in t.rows if r["family"] == "coexact"]
    assert all(b > a for a, b in zip(ev, ev[1:]))
    lam = q0 ** 2
    assert ev[5] == (qint(5, lam) + 1) * (q0 ** -2 * qint(5, 1 / lam) + 1)


def test_dirac_spectrum():
    t = assemble_spectrum(2, "2", 2, {"A": [1], "mu": [4]})
    d = dirac_spectrum(t)
    assert d.rows[0]["eigenvalue"] == 0 and d.rows[0]["multiplicity"] == 1
    plus = [r for r in d.rows if r["family"] == "plus"]
    minus = [r for r in d.rows if r["family"] == "minus"]
    assert plus[0]["eigenvalue"] == 2.0 and minus[0]["eigenvalue"] == -2.0
    assert [r["multiplicity"] for r in plus] == [3, 5, 7]
    assert "+sqrt(" in dirac_spectrum(assemble_spectrum(2, l_max=1)).to_csv()


def test_table_output_deterministic():
    a = assemble_spectrum(3, "11/10", 4, {"A": [1, 1], "mu": [1, 1]})
    b = assemble_spectrum(3, "11/10", 4, {"A": [1, 1], "mu": [1, 1]})
    assert a.to_csv() == b.to_csv() and a.to_json() == b.to_json()
    assert json.loads(a.to_json())["n"] == 3
