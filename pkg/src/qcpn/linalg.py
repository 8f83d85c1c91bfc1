"""Exact Gauss-Jordan elimination over Q(q), its Gaussian extension, or Q.

Matrices are lists of rows; entries only need ring operations, division
and truthiness for zero tests.  `sparse_nullspace` handles the tall
systems produced by FRT normal forms: a modular pass at a random point
selects a candidate set of independent rows, the nullspace is computed
exactly from those rows, and every exact vector is then checked against
all rows.  A failed check enlarges the row set and repeats, so the result
never depends on the random point.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .qarith import QRational, GaussQ

_P = (1 << 61) - 1


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int, zero, one):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, piv):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, zero, one):
    """One solution x of rows . x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [zero] * ncols
    for row, pc in zip(red, piv):
        x[pc] = row[ncols]
    return x


# --- modular prefilter -------------------------------------------------

def _mod_frac(c, p):
    if isinstance(c, Fraction):
        return c.numerator % p * pow(c.denominator % p, p - 2, p) % p
    return c % p


def _mod_lp(poly, q0, qinv, p):
    acc = 0
    base = q0 if poly.lo >= 0 else qinv
    acc_pow = pow(base, abs(poly.lo), p)
    for c in poly.c:
        acc = (acc + _mod_frac(c, p) * acc_pow) % p
        acc_pow = acc_pow * q0 % p
    return acc


def mod_eval(x, q0, p=_P):
    """Image of a QRational (or rational) in Z/p at q = q0."""
    if isinstance(x, QRational):
        qinv = pow(q0, p - 2, p)
        d = _mod_lp(x.den, q0, qinv, p)
        if d == 0:
            raise ZeroDivisionError("modular evaluation hit a pole")
        return _mod_lp(x.num, q0, qinv, p) * pow(d, p - 2, p) % p
    return _mod_frac(Fraction(x), p)


def _mod_independent_rows(rows, ncols, q0, p=_P):
    """Indices of a maximal set of rows independent mod p at q0."""
    basis = {}  # pivot col -> reduced row (dict)
    chosen = []
    for idx, row in enumerate(rows):
        v = {c: mod_eval(x, q0, p) for c, x in row.items()}
        v = {c: x for c, x in v.items() if x}
        for pc in sorted(basis):
            if pc in v:
                f = v[pc]
                for c, y in basis[pc].items():
                    v[c] = (v.get(c, 0) - f * y) % p
                v = {c: x for c, x in v.items() if x}
        if v:
            pc = min(v)
            inv = pow(v[pc], p - 2, p)
            v = {c: x * inv % p for c, x in v.items()}
            for k in list(basis):
                if pc in basis[k]:
                    f = basis[k][pc]
                    r = dict(basis[k])
                    for c, y in v.items():
                        r[c] = (r.get(c, 0) - f * y) % p
                    basis[k] = {c: x for c, x in r.items() if x}
            basis[pc] = v
            chosen.append(idx)
            if len(chosen) == ncols:
                break
    return chosen


def sparse_nullspace(rows, ncols: int, zero, one, seed: int = 12345):
    """Exact nullspace of a tall sparse system given as dict rows."""
    rows = [r for r in rows if r]
    rng = random.Random(seed)
    q0 = rng.randrange(2, _P - 1)
    sel = _mod_independent_rows(rows, ncols, q0)
    while True:
        dense = [[r.get(c, zero) for c in range(ncols)] for r in (rows[i] for i in sel)]
        ns = nullspace(dense, ncols, zero, one)
        bad = None
        for i, r in enumerate(rows):
            for v in ns:
                acc = zero
                for c, x in r.items():
                    if v[c]:
                        acc = acc + x * v[c]
                if acc:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is None:
            return ns
        sel.append(bad)
