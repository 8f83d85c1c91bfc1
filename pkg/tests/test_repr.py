from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qcpn.representations import (SPHERICAL_WEIGHTS, LevWeight, Partition, WeightA, branch,
                                  branch_table_json, count_ssyt, frobenius_mult, fundamental, gelfand_check,
                                  hsc, omega_weights, spherical_weights, weyl_dim)

P = lambda *parts: Partition(parts)
V = lambda s: LevWeight.parse(s)

partitions = st.lists(st.integers(0, 4), max_size=4).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_partition_normalizes_and_rejects():
    assert P(3, 2, 0, 0).parts == (3, 2)
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, -1)
    assert str(P(3, 2)) == "(3,2)"
    assert Partition.parse("(3,2)") == P(3, 2)


@given(partitions)
def test_conjugate_involution(mu):
    assert mu.conjugate().conjugate() == mu
    assert mu.conjugate().size == mu.size


@given(partitions, st.integers(5, 7))
def test_weight_partition_roundtrip(mu, n):
    assert mu.to_weight(n).to_partition() == mu


def test_hsc_examples():
    assert hsc(P(3, 2)) == [P(3, 2), P(3, 1), P(3), P(2, 2), P(2, 1), P(2)]
    assert hsc(P()) == [P()]
    assert hsc(P(1)) == [P(1), P()]


@given(partitions)
def test_hsc_contains_extremes(mu):
    out = hsc(mu)
    assert mu in out
    assert Partition(tuple(mu[i + 1] for i in range(len(mu)))) in out


def test_weyl_dim_examples():
    assert weyl_dim(fundamental(3, 1)) == 3
    assert weyl_dim(WeightA.zero(5)) == 1
    assert weyl_dim(fundamental(3, 2)) == comb(3, 1)  # w_{n-k-1} at rank n-1, n=4, k=1
    with pytest.raises(ValueError):
        weyl_dim(WeightA(3, (1, -1)))


@settings(max_examples=60, deadline=None)
@given(partitions, st.integers(1, 5))
def test_weyl_dim_matches_tableau_count(mu, n):
    if len(mu) > n:
        return
    assert weyl_dim(mu, n) == count_ssyt(mu, n)


def test_branch_example_six_summands():
    got = branch(P(3, 2), 3)
    want = ["V[(1)](m=2)", "V[(2)](m=0)", "V[(3)](m=-2)", "V[()](m=1)", "V[(1)](m=-1)", "V[(2)](m=-3)"]
    assert [str(v) for v in got] == want
    assert sorted(v.m for v in got) == sorted([2, 0, -2, 1, -1, -3])


def test_branch_small_cases():
    assert branch(P(), 4) == [V("V[()](m=0)")]
    assert set(branch(P(1), 3)) == {V("V[(1)](m=0)"), V("V[()](m=-1)")}
    with pytest.raises(ValueError):
        branch(P(1, 1, 1), 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5), st.lists(st.integers(0, 6), max_size=4))
def test_dimension_conservation_and_multiplicity_free(n, xs):
    mu = Partition(tuple(sorted(xs, reverse=True)))
    if len(mu) > n - 1 or mu.size > 6:
        return
    parts = branch(mu, n)
    assert len(set(parts)) == len(parts)
    assert sum(weyl_dim(v.nubar, n - 1) for v in parts) == count_ssyt(mu, n)


def test_frobenius_mult_examples():
    assert frobenius_mult(P(3), V("V[(1)](m=-2)"), 3) == 1
    assert frobenius_mult(P(), V("V[()](m=0)"), 5) == 1
    assert frobenius_mult(P(3, 2), V("V[(1)](m=5)"), 3) == 0


def test_levweight_roundtrip_and_json():
    v = V("V[(3,1)](m=-2)")
    assert str(v) == "V[(3,1)](m=-2)"
    with pytest.raises(ValueError):
        V("W[(1)]")
    assert '"dim": 4' in branch_table_json(P(3, 2), 3)


def test_omega_weights_families():
    fam = {(f, l): w for f, l, w in omega_weights(3, 1, 1)}
    w1, w2 = fundamental(3, 1), fundamental(3, 2)
    # (l+k) w1 + w_{n-k} + l w_{n-1} with n=3, k=1
    assert fam[("exact", 0)] == w1 + w2
    assert fam[("exact", 1)] == 2 * w1 + 2 * w2
    assert fam[("coexact", 0)] == 3 * w1
    assert [f for f, _, _ in omega_weights(5, 0, 0)] == ["harmonic", "coexact"]
    assert {f for f, _, _ in omega_weights(4, 3, 0)} == {"exact"}
    assert omega_weights(4, 3, 0)[0][2] == 4 * fundamental(4, 1)
    with pytest.raises(ValueError):
        omega_weights(3, 3, 0)


def test_exact_and_coexact_pair_up():
    # exact forms in degree k+1 carry the weights of coexact forms in degree k
    for n in range(2, 7):
        for k in range(n - 1):
            co = [w for f, l, w in omega_weights(n, k, 5) if f == "coexact"]
            ex = [w for f, l, w in omega_weights(n, k + 1, 5) if f == "exact"]
            assert co == ex


@pytest.mark.parametrize("n,k,lmax", [(3, 1, 20), (2, 0, 20), (6, 3, 50)])
def test_gelfand_examples(n, k, lmax):
    assert gelfand_check(n, k, lmax)["ok"]


def test_spherical_data():
    assert "Cayley plane OP2" in SPHERICAL_WEIGHTS
    assert spherical_weights("grassmannian", r=2, s=3) == [{1: 1, 4: 1}, {2: 1, 3: 1}]
    assert spherical_weights("lagrangian", n=3) == [{1: 2}, {2: 2}, {3: 2}]
