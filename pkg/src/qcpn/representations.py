"""Type-A weight combinatorics: partitions, horizontal strips, branching.

Weights of U_q(sl_n) are written in the fundamental-weight basis
(WeightA) or as partitions with at most n-1 rows.  Irreducibles of the
Levi factor U_q(l_{n-1}) are labelled V_nubar(m), where nubar is an
sl_{n-1} weight and m is the K_{n-1} weight.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from math import prod

__all__ = [
    "Partition",
    "WeightA",
    "LevWeight",
    "fundamental",
    "hsc",
    "weyl_dim",
    "count_ssyt",
    "branch",
    "branch_table_json",
    "frobenius_mult",
    "antiholomorphic_module",
    "omega_weights",
    "gelfand_check",
    "SPHERICAL_WEIGHTS",
    "spherical_weights",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in p):
            raise ValueError(f"negative part in {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts must be weakly decreasing: {p}")
        while p and p[-1] == 0:
            p = p[:-1]
        object.__setattr__(self, "parts", p)

    @classmethod
    def parse(cls, s: str) -> "Partition":
        s = s.strip().strip("()")
        if not s:
            return cls(())
        return cls(tuple(int(x) for x in s.split(",") if x.strip()))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        # zero beyond the last row, 0-based
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def to_weight(self, n: int) -> "WeightA":
        if len(self.parts) > n - 1:
            raise ValueError(f"{self} has more than {n - 1} rows")
        return WeightA(n, tuple(self[i] - self[i + 1] for i in range(n - 1)))


@dataclass(frozen=True)
class WeightA:
    """Weight sum a_i * w_i of sl_n (coefficients a_1..a_{n-1})."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if self.n < 1 or len(c) != self.n - 1:
            raise ValueError(f"rank {self.n} weight needs {self.n - 1} coefficients, got {c}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n: int) -> "WeightA":
        return cls(n, (0,) * (n - 1))

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def to_partition(self) -> Partition:
        if not self.is_dominant():
            raise ValueError(f"{self} is not dominant")
        return Partition(tuple(sum(self.coeffs[i:]) for i in range(self.n - 1)))

    def __add__(self, other: "WeightA") -> "WeightA":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return WeightA(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightA") -> "WeightA":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "WeightA":
        return WeightA(self.n, tuple(k * a for a in self.coeffs))

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coeffs, 1):
            if a:
                terms.append(f"w{i}" if a == 1 else f"{a}*w{i}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def fundamental(n: int, k: int) -> WeightA:
    """w_k of sl_n; w_0 and w_n are the zero weight."""
    if not 0 <= k <= n:
        raise ValueError(f"no fundamental weight w_{k} for sl_{n}")
    c = [0] * (n - 1)
    if 1 <= k <= n - 1:
        c[k - 1] = 1
    return WeightA(n, tuple(c))


@dataclass(frozen=True)
class LevWeight:
    """Irreducible V_nubar(m) of the Levi factor."""

    nubar: Partition
    m: int

    _RE = re.compile(r"^\s*V\[(\([\d,\s]*\))\]\(m=(-?\d+)\)\s*$")

    @classmethod
    def parse(cls, s: str) -> "LevWeight":
        mt = cls._RE.match(s)
        if not mt:
            raise ValueError(f"bad LevWeight string {s!r}")
        return cls(Partition.parse(mt.group(1)), int(mt.group(2)))

    def __str__(self):
        return f"V[{self.nubar}](m={self.m})"


def hsc(mu: Partition) -> list:
    """Partitions nu with mu_1 >= nu_1 >= mu_2 >= nu_2 >= ... (lex descending)."""
    mu = Partition(tuple(mu.parts)) if not isinstance(mu, Partition) else mu
    ranges = [range(mu[i + 1], mu[i] + 1) for i in range(len(mu))]
    out = {Partition(tuple(c)) for c in itertools.product(*ranges)}
    return sorted(out, key=lambda p: p.parts, reverse=True)


def weyl_dim(mu, n: int | None = None) -> int:
    """Dimension of the sl_n irreducible of highest weight mu."""
    if isinstance(mu, WeightA):
        if not mu.is_dominant():
            raise ValueError(f"{mu} is not dominant")
        n, part = mu.n, mu.to_partition()
    else:
        if n is None:
            raise ValueError("rank needed for a partition")
        part = mu
        if len(part) > n:
            raise ValueError(f"{part} has more than {n} rows")
    num = prod(part[i] - part[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def count_ssyt(shape: Partition, n: int) -> int:
    """Brute-force count of semistandard tableaux with entries in 1..n."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    filling = {}

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            total += rec(idx + 1)
        return total

    return rec(0)


def branch(mu: Partition, n: int) -> list:
    """Restriction of V_mu from U_q(sl_n) to U_q(l_{n-1})."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    if len(mu) > n - 1:
        raise ValueError(f"{mu} has more than {n - 1} rows")
    out = []
    for nu in hsc(mu):
        last = nu[n - 2]
        nubar = Partition(tuple(nu[i] - last for i in range(n - 1)))
        out.append(LevWeight(nubar, last - (mu.size - nu.size)))
    return out


def branch_table_json(mu: Partition, n: int) -> str:
    rows = [{"nubar": str(v.nubar), "m": v.m, "module": str(v), "dim": weyl_dim(v.nubar, n - 1)}
            for v in branch(mu, n)]
    return json.dumps({"mu": str(mu), "n": n, "summands": rows}, indent=2)


def frobenius_mult(mu: Partition, v: LevWeight, n: int) -> int:
    return sum(1 for w in branch(mu, n) if w == v)


def antiholomorphic_module(n: int, k: int) -> LevWeight:
    """The Levi module underlying antiholomorphic k-forms at the base point."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0:
        return LevWeight(Partition(()), 0)
    return LevWeight(Partition((1,) * (n - k - 1)), -k - 1)


def omega_weights(n: int, k: int, l_max: int) -> list:
    """Highest weights of the irreducible summands of the antiholomorphic k-forms.

    Returns (family, l, WeightA) triples, family in {harmonic, exact, coexact}.
    """
    if n < 2 or not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for n={n}")
    w = lambda i: fundamental(n, i)
    out = []
    if k == 0:
        out.append(("harmonic", 0, WeightA.zero(n)))
    for l in range(l_max + 1):
        if k <= n - 2:
            out.append(("coexact", l, (l + k + 1) * w(1) + w(n - k - 1) + l * w(n - 1)))
        if k >= 1:
            out.append(("exact", l, (l + k) * w(1) + w(n - k) + l * w(n - 1)))
    return out


def gelfand_check(n: int, k: int, l_max: int) -> dict:
    seen = {}
    collisions = []
    for fam, l, wt in omega_weights(n, k, l_max):
        if wt in seen:
            collisions.append({"weight": str(wt), "first": seen[wt], "second": (fam, l)})
        else:
            seen[wt] = (fam, l)
    return {"n": n, "k": k, "l_max": l_max, "ok": not collisions, "count": len(seen), "collisions": collisions}


# Spherical weights of the irreducible quantum flag manifolds, kept as data.
# Keys name the family; values list generators as {fundamental index: coefficient}.
SPHERICAL_WEIGHTS = {
    "Grassmannian Gr(r,s)": "w1 + w(r+s-1), w2 + w(r+s-2), ..., wr + ws",
    "odd quadric Q(2n+1)": "2*w1, w2",
    "Lagrangian Grassmannian L(n)": "2*w1, 2*w2, ..., 2*wn",
    "even quadric Q(2n)": "2*w1, w2",
    "spinor variety S(2m)": "w2, w4, ..., w(2m-2), and 2*w(2m-1) or 2*w(2m)",
    "spinor variety S(2m+1)": "w2, w4, ..., w(2m-2), w(2m) + w(2m+1)",
    "Cayley plane OP2": "w1 + w5, w6",
    "Freudenthal variety F": "2*w1, w2, w6",
}


def spherical_weights(family: str, **params) -> list:
    """Generators of the spherical monoid as {index: coeff} dicts."""
    def w(*pairs):
        d = {}
        for i, c in pairs:
            d[i] = d.get(i, 0) + c
        return d

    if family == "grassmannian":
        r, s = params["r"], params["s"]
        return [w((i, 1), (r + s - i, 1)) for i in range(1, r + 1)]
    if family in ("odd_quadric", "even_quadric"):
        return [w((1, 2)), w((2, 1))]
    if family == "lagrangian":
        return [w((i, 2)) for i in range(1, params["n"] + 1)]
    if family == "spinor_even":
        m = params["m"]
        last = w((2 * m - 1, 2)) if params.get("variant", 0) == 0 else w((2 * m, 2))
        return [w((2 * i, 1)) for i in range(1, m)] + [last]
    if family == "spinor_odd":
        m = params["m"]
        return [w((2 * i, 1)) for i in range(1, m)] + [w((2 * m, 1), (2 * m + 1, 1))]
    if family == "cayley_plane":
        return [w((1, 1), (5, 1)), w((6, 1))]
    if family == "freudenthal":
        return [w((1, 2)), w((2, 1)), w((6, 1))]
    raise KeyError(f"unknown family {family!r}")
