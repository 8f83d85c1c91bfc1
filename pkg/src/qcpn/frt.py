"""The FRT algebra O_q(M_n), its quotient O_q(SU_n), and the pairing with U_q(sl_n).

Normal forms
    Generators u^i_j are ordered row-major, u^1_1 < u^1_2 < ... < u^n_n,
    and a monomial is normal when its letters are weakly increasing.  Each
    descending adjacent pair is rewritten by one of the four straightening
    relations; every right-hand side is lexicographically smaller, so
    reduction terminates, and the normal monomials form a PBW basis.

Equality in O_q(SU_n)
    det_q is central and homogeneous of degree n, and O_q(M_n) is a
    domain.  Hence x lies in <det_q - 1> iff, in each residue class of
    degrees mod n, sum_d x_d det_q^((top - d)/n) vanishes in O_q(M_n).
    This decides the quotient exactly.  The degree-bounded linear solve for
    a cofactor f with x = f (det_q - 1) is kept as a second method.

Pairing and action
    <X, u^{i_1}_{j_1} ... u^{i_k}_{j_k}> is the (i, j) matrix entry of X in
    the k-th tensor power of the vector representation, where E_a, F_a,
    K_a act through their iterated coproducts.  The left action
    X |> a = <S(X), a_(1)> a_(2) changes upper indices only.
"""
from __future__ import annotations

import itertools
import json
import re
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .qarith import ONE, ZERO, Q, QRational, as_qr, parse_qr
from .representations import WeightA

__all__ = [
    "Undecided",
    "FrtAlgebra",
    "FrtElement",
    "UqElement",
    "algebra",
    "u",
    "E",
    "F",
    "K",
    "normalize",
    "parse_frt",
    "det_q",
    "quantum_minor",
    "antipode",
    "star",
    "is_zero",
    "is_identity",
    "in_ideal",
    "equal",
    "pair",
    "act",
    "z_gen",
    "highest_weight",
    "weight_of_monomial",
]


class Undecided(Exception):
    """Raised when a query exceeds the configured degree bound."""


QINV = Q ** -1
QDIFF = Q - QINV


class FrtAlgebra:
    """Straightening data and memo tables for O_q(M_n) at a fixed rank."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.rules = {}
        for x in range(n * n):
            for g in range(x):
                self.rules[(x, g)] = self._rule(x, g)
        self._mg = {}
        self._det_pow = {}
        self._S = {}
        self._star = {}

    def gen(self, i: int, j: int) -> int:
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"generator u[{i}][{j}] out of range for n={n}")
        return (i - 1) * n + (j - 1)

    def ij(self, g: int):
        return divmod(g, self.n)[0] + 1, g % self.n + 1

    def _rule(self, x: int, g: int):
        # x > g in row-major order; returns rewrite of the word x*g
        a, b = self.ij(x)
        c, d = self.ij(g)
        if a == c:                       # same row, b > d
            return ((QINV, g, x),)
        if b == d:                       # same column, c < a
            return ((QINV, g, x),)
        if b < d:                        # u^a_b u^c_d with c<a, b<d commute
            return ((ONE, g, x),)
        # c < a, d < b
        return ((ONE, g, x), (-QDIFF, self.gen(c, b), self.gen(a, d)))

    # -- multiplication of normal monomials ------------------------------
    def mul_gen(self, m: tuple, g: int) -> dict:
        key = (m, g)
        r = self._mg.get(key)
        if r is not None:
            return r
        if not m or m[-1] <= g:
            r = {m + (g,): ONE}
        else:
            prefix, x = m[:-1], m[-1]
            acc = {}
            for coeff, a, b in self.rules[(x, g)]:
                for m1, c1 in self.mul_gen(prefix, a).items():
                    c1 = coeff * c1
                    for m2, c2 in self.mul_gen(m1, b).items():
                        v = acc.get(m2)
                        acc[m2] = c1 * c2 if v is None else v + c1 * c2
            r = {k: v for k, v in acc.items() if v}
        self._mg[key] = r
        return r

    def mul_mono(self, m1: tuple, m2: tuple) -> dict:
        cur = {m1: ONE}
        for g in m2:
            nxt = {}
            for m, c in cur.items():
                for mm, cc in self.mul_gen(m, g).items():
                    v = nxt.get(mm)
                    nxt[mm] = c * cc if v is None else v + c * cc
            cur = {k: v for k, v in nxt.items() if v}
        return cur

    def word(self, letters) -> "FrtElement":
        """Normal form of an arbitrary word of generator indices."""
        return FrtElement(self, self.mul_mono((), tuple(letters)))

    def det_power(self, k: int) -> "FrtElement":
        if k not in self._det_pow:
            if k == 0:
                self._det_pow[k] = FrtElement(self, {(): ONE})
            else:
                self._det_pow[k] = self.det_power(k - 1) * det_q(self.n)
        return self._det_pow[k]


@lru_cache(maxsize=None)
def algebra(n: int) -> FrtAlgebra:
    return FrtAlgebra(n)


class FrtElement:
    """Linear combination of normal monomials with QRational coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FrtAlgebra, terms: dict | None = None):
        self.alg = alg
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @property
    def n(self) -> int:
        return self.alg.n

    @classmethod
    def scalar(cls, n: int, c) -> "FrtElement":
        return cls(algebra(n), {(): as_qr(c)})

    def is_zero_mn(self) -> bool:
        """Zero in O_q(M_n) (normal forms are unique)."""
        return not self.terms

    def __bool__(self):
        raise TypeError("use is_zero() for O_q(SU_n) or is_zero_mn() for O_q(M_n)")

    def degrees(self) -> set:
        return {len(m) for m in self.terms}

    def homogeneous_part(self, d: int) -> "FrtElement":
        return FrtElement(self.alg, {m: c for m, c in self.terms.items() if len(m) == d})

    def _coerce(self, other):
        if isinstance(other, FrtElement):
            if other.alg.n != self.alg.n:
                raise ValueError("rank mismatch")
            return other
        return FrtElement(self.alg, {(): as_qr(other)})

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            t[m] = c if v is None else v + c
        return FrtElement(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return FrtElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "FrtElement":
        c = as_qr(c)
        if not c:
            return FrtElement(self.alg)
        return FrtElement(self.alg, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FrtElement):
            return self.scale(other)
        if other.alg.n != self.alg.n:
            raise ValueError("rank mismatch")
        alg = self.alg
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in alg.mul_mono(m1, m2).items():
                    v = acc.get(m)
                    acc[m] = c12 * c if v is None else v + c12 * c
        return FrtElement(alg, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = FrtElement(self.alg, {(): ONE})
        for _ in range(k):
            out = out * self
        return out

    def map_coeffs(self, f) -> "FrtElement":
        return FrtElement(self.alg, {m: f(c) for m, c in self.terms.items()})

    def counit(self) -> QRational:
        out = ZERO
        for m, c in self.terms.items():
            if all(self.alg.ij(g)[0] == self.alg.ij(g)[1] for g in m):
                out = out + c
        return out

    def coproduct(self) -> dict:
        """Delta as {(left monomial, right monomial): coeff}, both sides normal."""
        alg, n = self.alg, self.alg.n
        acc = {}
        for m, c in self.terms.items():
            idx = [alg.ij(g) for g in m]
            for ks in itertools.product(range(1, n + 1), repeat=len(m)):
                left = alg.mul_mono((), tuple(alg.gen(i, k) for (i, _), k in zip(idx, ks)))
                right = alg.mul_mono((), tuple(alg.gen(k, j) for (_, j), k in zip(idx, ks)))
                for ml, cl in left.items():
                    for mr, cr in right.items():
                        key = (ml, mr)
                        v = c * cl * cr
                        acc[key] = acc[key] + v if key in acc else v
        return {k: v for k, v in acc.items() if v}

    def is_zero(self, degree_bound: int | None = None, method: str = "homogenize") -> bool:
        return in_ideal(self, degree_bound, method)

    def __eq__(self, other):
        if isinstance(other, (FrtElement, int, Fraction, QRational)):
            return (self - other).is_zero_mn()
        return NotImplemented

    __hash__ = None

    def monomial_str(self, m: tuple) -> str:
        return "*".join("u[%d][%d]" % self.alg.ij(g) for g in m) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            mono = self.monomial_str(m)
            if c == 1:
                parts.append(("+", mono))
            elif c == -1:
                parts.append(("-", mono))
            elif m:
                parts.append(("+", f"({c})*{mono}"))
            else:
                parts.append(("+", f"({c})"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    __repr__ = __str__

    def to_json(self) -> str:
        terms = [{"word": [list(self.alg.ij(g)) for g in m], "coeff": str(c)}
                 for m, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]
        return json.dumps({"n": self.n, "terms": terms})

    @classmethod
    def from_json(cls, s: str) -> "FrtElement":
        d = json.loads(s)
        alg = algebra(d["n"])
        out = FrtElement(alg)
        for t in d["terms"]:
            out = out + alg.word(alg.gen(i, j) for i, j in t["word"]).scale(parse_qr(t["coeff"]))
        return out


def u(i: int, j: int, n: int) -> FrtElement:
    alg = algebra(n)
    return FrtElement(alg, {(alg.gen(i, j),): ONE})


def normalize(expr, n: int | None = None) -> FrtElement:
    """Normal form of a free combination of words.

    `expr` is a string such as "u[1][1]*u[2][1] - (q)*u[2][1]*u[1][1]" or an
    iterable of (coeff, [(i, j), ...]) pairs (then `n` is required).
    """
    if isinstance(expr, str):
        return parse_frt(expr, n)
    if n is None:
        raise ValueError("rank n required")
    alg = algebra(n)
    out = FrtElement(alg)
    for coeff, word in expr:
        out = out + alg.word(alg.gen(i, j) for i, j in word).scale(coeff)
    return out


_GEN = re.compile(r"^u\[(\d+)\]\[(\d+)\]$")


def _split_top(s: str, seps: str):
    """Split at top-level separators; '-' right after '^' is not a separator."""
    out, depth, cur = [], 0, ""
    for idx, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            prev = s[:idx].rstrip()[-1:] if s[:idx].strip() else ""
            if ch in "+-" and prev in ("^", "*", "/", "("):
                cur += ch
                continue
            out.append((cur, ch))
            cur = ""
            continue
        cur += ch
    out.append((cur, None))
    return out


def parse_frt(s: str, n: int | None = None) -> FrtElement:
    gens = [(int(a), int(b)) for a, b in re.findall(r"u\[(\d+)\]\[(\d+)\]", s)]
    if n is None:
        if not gens:
            raise ValueError("cannot infer rank from a scalar; pass n")
        n = max(max(a, b) for a, b in gens)
    alg = algebra(n)
    out = FrtElement(alg)
    sign = 1
    for term, sep in _split_top(s, "+-"):
        term = term.strip()
        if term:
            coeff, letters = ONE * sign, []
            for fac, _ in _split_top(term, "*"):
                fac = fac.strip()
                mt = _GEN.match(fac)
                if mt:
                    letters.append(alg.gen(int(mt.group(1)), int(mt.group(2))))
                else:
                    coeff = coeff * parse_qr(fac)
            out = out + alg.word(letters).scale(coeff)
        sign = -1 if sep == "-" else 1
    return out


def quantum_minor(rows, cols, n: int, permute: str = "upper") -> FrtElement:
    """sum_sigma (-q)^len(sigma) u^{r_sigma(1)}_{c_1} ... (or permuting columns)."""
    alg = algebra(n)
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    acc = {}
    for perm in itertools.permutations(range(len(rows))):
        inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
        coeff = (-Q) ** inv
        if permute == "upper":
            letters = [alg.gen(rows[perm[t]], cols[t]) for t in range(len(rows))]
        else:
            letters = [alg.gen(rows[t], cols[perm[t]]) for t in range(len(rows))]
        for m, c in alg.mul_mono((), tuple(letters)).items():
            v = coeff * c
            acc[m] = acc[m] + v if m in acc else v
    return FrtElement(alg, acc)


@lru_cache(maxsize=None)
def det_q(n: int) -> FrtElement:
    return quantum_minor(range(1, n + 1), range(1, n + 1), n)


def _S_gen(alg: FrtAlgebra, g: int) -> FrtElement:
    r = alg._S.get(g)
    if r is None:
        n = alg.n
        i, j = alg.ij(g)
        rows = [k for k in range(1, n + 1) if k != j]
        cols = [l for l in range(1, n + 1) if l != i]
        r = quantum_minor(rows, cols, n).scale((-Q) ** (i - j))
        alg._S[g] = r
    return r


def antipode(a: FrtElement) -> FrtElement:
    """Anti-multiplicative extension of the quantum-minor formula."""
    alg = a.alg
    out = FrtElement(alg)
    for m, c in a.terms.items():
        t = FrtElement(alg, {(): c})
        for g in reversed(m):
            t = t * _S_gen(alg, g)
        out = out + t
    return out


def star(a: FrtElement) -> FrtElement:
    """Conjugate-linear anti-multiplicative map with (u^i_j)* = S(u^j_i)."""
    alg = a.alg
    out = FrtElement(alg)
    for m, c in a.terms.items():
        t = FrtElement(alg, {(): c.conj()})
        for g in reversed(m):
            s = alg._star.get(g)
            if s is None:
                i, j = alg.ij(g)
                s = alg._star[g] = _S_gen(alg, alg.gen(j, i))
            t = t * s
        out = out + t
    return out


def z_gen(i: int, j: int, n: int) -> FrtElement:
    """z_ij = u^i_n S(u^n_j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"z[{i},{j}] out of range for n={n}")
    return u(i, n, n) * antipode(u(n, j, n))


# --- equality modulo det_q - 1 ---------------------------------------------

def homogenize(x: FrtElement) -> dict:
    """Residue class mod n -> homogeneous representative in O_q(M_n)."""
    alg, n = x.alg, x.alg.n
    by_class = {}
    for d in sorted(x.degrees()):
        by_class.setdefault(d % n, []).append(d)
    out = {}
    for r, ds in by_class.items():
        top = max(ds)
        h = FrtElement(alg)
        for d in ds:
            part = x.homogeneous_part(d)
            h = h + (part if d == top else part * alg.det_power((top - d) // n))
        out[r] = h
    return out


def in_ideal(x: FrtElement, degree_bound: int | None = None, method: str = "homogenize") -> bool:
    """Is x in <det_q - 1>, i.e. zero in O_q(SU_n)?"""
    if not x.terms:
        return True
    top = max(x.degrees())
    if degree_bound is not None and top > degree_bound:
        raise Undecided(f"query degree {top} exceeds bound {degree_bound}")
    if method == "homogenize":
        return all(h.is_zero_mn() for h in homogenize(x).values())
    if method == "linear":
        return _in_ideal_linear(x, top if degree_bound is None else degree_bound)
    raise ValueError(f"unknown method {method!r}")


def _normal_monomials(n: int, d: int):
    return list(itertools.combinations_with_replacement(range(n * n), d))


def _in_ideal_linear(x: FrtElement, bound: int) -> bool:
    # x = f (det_q - 1) with deg f <= bound - n; complete once bound >= deg x
    alg, n = x.alg, x.alg.n
    D = det_q(n) - 1
    unknowns = [m for d in range(0, bound - n + 1) for m in _normal_monomials(n, d)]
    cols = [FrtElement(alg, {m: ONE}) * D for m in unknowns]
    keys = sorted({m for c in cols for m in c.terms} | set(x.terms))
    rows = [[c.terms.get(k, ZERO) for c in cols] for k in keys]
    rhs = [x.terms.get(k, ZERO) for k in keys]
    if not cols:
        return False
    sol = linalg.solve(rows, rhs, ZERO, ONE)
    return sol is not None


def is_zero(x: FrtElement, degree_bound: int | None = None, method: str = "homogenize") -> bool:
    return in_ideal(x, degree_bound, method)


def is_identity(a: FrtElement, degree_bound: int | None = None, method: str = "homogenize") -> bool:
    return in_ideal(a - 1, degree_bound, method)


def equal(a: FrtElement, b, degree_bound: int | None = None) -> bool:
    return in_ideal(a - b, degree_bound)


# --- U_q(sl_n) ---------------------------------------------------------------

def _simplify_word(w: tuple) -> tuple:
    out = []
    for letter in w:
        if letter[0] == "K" and out and out[-1][0] == "K" and out[-1][1] == letter[1]:
            e = out[-1][2] + letter[2]
            out.pop()
            if e:
                out.append(("K", letter[1], e))
        elif letter[0] == "K" and letter[2] == 0:
            continue
        else:
            out.append(letter)
    return tuple(out)


class UqElement:
    """Combination of words in E_i, F_i, K_i^e (letters ('E',i), ('F',i), ('K',i,e))."""

    __slots__ = ("n", "terms")
    _coproduct_cache: dict = {}

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        acc = {}
        for w, c in (terms or {}).items():
            w = _simplify_word(tuple(w))
            acc[w] = acc[w] + c if w in acc else as_qr(c)
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def one(cls, n: int) -> "UqElement":
        return cls(n, {(): ONE})

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] + c if w in t else c
        return UqElement(self.n, t)

    def __neg__(self):
        return UqElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UqElement):
            c = as_qr(other)
            return UqElement(self.n, {w: v * c for w, v in self.terms.items()})
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = _simplify_word(w1 + w2)
                t[w] = t[w] + c1 * c2 if w in t else c1 * c2
        return UqElement(self.n, t)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = UqElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def antipode(self) -> "UqElement":
        out = UqElement(self.n)
        for w, c in self.terms.items():
            t = UqElement(self.n, {(): c})
            for letter in reversed(w):
                t = t * _S_letter(self.n, letter)
            out = out + t
        return out

    def counit(self) -> QRational:
        return sum((c for w, c in self.terms.items() if all(l[0] == "K" for l in w)), ZERO)

    def coproduct(self) -> dict:
        """Delta as {(word1, word2): coeff}; memoized per word."""
        out = {}
        for w, c in self.terms.items():
            for key, v in _coproduct_word(self.n, w).items():
                out[key] = out[key] + c * v if key in out else c * v
        return {k: v for k, v in out.items() if v}

    def __str__(self):
        def letter(l):
            if l[0] == "K":
                return f"K{l[1]}" if l[2] == 1 else f"K{l[1]}^{l[2]}"
            return f"{l[0]}{l[1]}"
        parts = [f"({c})*" + ("*".join(letter(l) for l in w) or "1") for w, c in self.terms.items()]
        return " + ".join(parts) or "0"

    __repr__ = __str__


def _check_index(n, i, kind):
    if not 1 <= i <= n - 1:
        raise ValueError(f"{kind}{i} is not a generator of U_q(sl_{n})")


def E(i: int, n: int) -> UqElement:
    _check_index(n, i, "E")
    return UqElement(n, {(("E", i),): ONE})


def F(i: int, n: int) -> UqElement:
    _check_index(n, i, "F")
    return UqElement(n, {(("F", i),): ONE})


def K(i: int, n: int, e: int = 1) -> UqElement:
    _check_index(n, i, "K")
    return UqElement(n, {(("K", i, e),): ONE})


def _S_letter(n, letter) -> UqElement:
    kind, i = letter[0], letter[1]
    if kind == "E":
        return UqElement(n, {(("E", i), ("K", i, -1)): -ONE})
    if kind == "F":
        return UqElement(n, {(("K", i, 1), ("F", i)): -ONE})
    return UqElement(n, {(("K", i, -letter[2]),): ONE})


def _delta_letter(letter):
    kind, i = letter[0], letter[1]
    if kind == "E":
        return {((letter,), (("K", i, 1),)): ONE, ((), (letter,)): ONE}
    if kind == "F":
        return {((letter,), ()): ONE, ((("K", i, -1),), (letter,)): ONE}
    return {((letter,), (letter,)): ONE}


def _coproduct_word(n, w):
    key = (n, w)
    r = UqElement._coproduct_cache.get(key)
    if r is None:
        r = {((), ()): ONE}
        for letter in w:
            nxt = {}
            for (a, b), c in r.items():
                for (x, y), d in _delta_letter(letter).items():
                    k2 = (_simplify_word(a + x), _simplify_word(b + y))
                    nxt[k2] = nxt[k2] + c * d if k2 in nxt else c * d
            r = {k: v for k, v in nxt.items() if v}
        UqElement._coproduct_cache[key] = r
    return r


def _kexp(i: int, j: int) -> int:
    # exponent of q in <K_i, u^j_j>
    return (1 if j == i + 1 else 0) - (1 if j == i else 0)


def _apply_letter(letter, vec: dict, transpose: bool) -> dict:
    """Apply the k-fold tensor representation of a letter (or its transpose)."""
    kind, i = letter[0], letter[1]
    out = {}
    for t, c in vec.items():
        if kind == "K":
            e = letter[2] * sum(_kexp(i, x) for x in t)
            key = t
            v = c * Q ** e if e else c
            out[key] = out[key] + v if key in out else v
            continue
        for m, x in enumerate(t):
            if kind == "E":
                src, dst = (i + 1, i) if transpose else (i, i + 1)
                if x != src:
                    continue
                e = sum(_kexp(i, y) for y in t[m + 1:])
            else:
                src, dst = (i, i + 1) if transpose else (i + 1, i)
                if x != src:
                    continue
                e = -sum(_kexp(i, y) for y in t[:m])
            key = t[:m] + (dst,) + t[m + 1:]
            v = c * Q ** e if e else c
            out[key] = out[key] + v if key in out else v
    return {k: v for k, v in out.items() if v}


def _pair_word_mono(alg: FrtAlgebra, w: tuple, m: tuple) -> QRational:
    upper = tuple(alg.ij(g)[0] for g in m)
    lower = tuple(alg.ij(g)[1] for g in m)
    vec = {lower: ONE}
    for letter in reversed(w):
        vec = _apply_letter(letter, vec, transpose=False)
        if not vec:
            return ZERO
    return vec.get(upper, ZERO)


def pair(X: UqElement, a: FrtElement) -> QRational:
    if X.n != a.n:
        raise ValueError("rank mismatch")
    out = ZERO
    for w, cw in X.terms.items():
        for m, cm in a.terms.items():
            v = _pair_word_mono(a.alg, w, m)
            if v:
                out = out + cw * cm * v
    return out


def act(X: UqElement, a: FrtElement) -> FrtElement:
    """Left action X |> a = <S(X), a_(1)> a_(2)."""
    if X.n != a.n:
        raise ValueError("rank mismatch")
    alg = a.alg
    SX = X.antipode()
    acc = FrtElement(alg)
    for m, cm in a.terms.items():
        upper = tuple(alg.ij(g)[0] for g in m)
        lower = tuple(alg.ij(g)[1] for g in m)
        for w, cw in SX.terms.items():
            vec = {upper: ONE}
            for letter in w:
                vec = _apply_letter(letter, vec, transpose=True)
                if not vec:
                    break
            for up, cv in vec.items():
                acc = acc + alg.word(alg.gen(i, j) for i, j in zip(up, lower)).scale(cm * cw * cv)
    return acc


def weight_of_monomial(alg: FrtAlgebra, m: tuple) -> tuple:
    """K-weight (fundamental-basis coefficients) of a monomial."""
    n = alg.n
    cnt = [0] * (n + 2)
    for g in m:
        cnt[alg.ij(g)[0]] += 1
    return tuple(cnt[k] - cnt[k + 1] for k in range(1, n))


def highest_weight(a: FrtElement, degree_bound: int | None = None):
    """Weight of a if it is a highest weight vector, else None."""
    if in_ideal(a, degree_bound):
        raise ValueError("highest_weight of the zero element")
    alg, n = a.alg, a.alg.n
    groups = {}
    for m, c in a.terms.items():
        groups.setdefault(weight_of_monomial(alg, m), {})[m] = c
    live = [w for w, t in groups.items() if not in_ideal(FrtElement(alg, t), degree_bound)]
    if len(live) != 1:
        return None
    for k in range(1, n):
        if not in_ideal(act(E(k, n), a), degree_bound):
            return None
    return WeightA(n, live[0])
