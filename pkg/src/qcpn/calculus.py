"""Differential forms on quantum projective space through the Takeuchi unit.

Forms are written as ZExpr words in z[i,j], dz[i,j] (del z), dbz[i,j]
(delbar z) and ddbz[i,j] (del delbar z).  `realize` sends a word to a
CotensorForm: a map from Lambda basis monomials to elements of
O_q(SU_n).  Every question about forms (vanishing, proportionality,
primitivity, weights) is answered on realized forms, so it reduces to
finitely many identity tests in the FRT algebra.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache

from . import qext
from .frt import (FrtElement, UqElement, Undecided, E, K, act, algebra, antipode, det_q,
                  in_ideal, u, weight_of_monomial)
from .qarith import ONE, ZERO, Q, QRational, as_qr, parse_qr, qint
from .realization import legs, z as zgen
from .representations import WeightA, fundamental

__all__ = [
    "ZExpr",
    "CotensorForm",
    "LadderData",
    "AStatus",
    "parse_zexpr",
    "zsym",
    "realize",
    "differentiate",
    "uq_act_form",
    "form_weight",
    "is_highest_weight",
    "proportionality",
    "leibniz_constants",
    "nu_k",
    "verify_nu",
    "wedge_identities",
    "b_constant",
    "a_status",
    "ladder",
]

_DEG = {"z": (0, 0), "d": (1, 0), "db": (0, 1), "ddb": (1, 1)}
_PREFIX = {"z": "z", "d": "dz", "db": "dbz", "ddb": "ddbz"}


class HypothesisViolation(ValueError):
    """A structural hypothesis (proportionality, self-conjugacy) failed."""


# --- formal expressions ------------------------------------------------------

class ZExpr:
    """Noncommutative polynomial in z, dz, dbz, ddbz symbols with Q(q) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        acc = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            c = as_qr(c)
            acc[w] = acc[w] + c if w in acc else c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def one(cls) -> "ZExpr":
        return cls({(): ONE})

    def degrees(self) -> set:
        out = set()
        for w in self.terms:
            a = sum(_DEG[s[0]][0] for s in w)
            b = sum(_DEG[s[0]][1] for s in w)
            out.add((a, b))
        return out

    def bidegree(self):
        d = self.degrees()
        if len(d) > 1:
            raise ValueError(f"ZExpr is not bihomogeneous: {sorted(d)}")
        return d.pop() if d else None

    def rank_hint(self) -> int:
        return max((max(s[1], s[2]) for w in self.terms for s in w), default=0)

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in _as_z(other).terms.items():
            t[w] = t[w] + c if w in t else c
        return ZExpr(t)

    __radd__ = __add__

    def __neg__(self):
        return ZExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_z(other))

    def __mul__(self, other):
        if not isinstance(other, ZExpr):
            c = as_qr(other)
            return ZExpr({w: v * c for w, v in self.terms.items()})
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                t[w] = t[w] + c1 * c2 if w in t else c1 * c2
        return ZExpr(t)

    def __rmul__(self, other):
        return self * other

    # wedge and product coincide on forms
    __xor__ = __mul__

    def __pow__(self, k: int):
        out = ZExpr.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, ZExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            body = ""
            for idx, s in enumerate(w):
                if idx:
                    body += "^" if _DEG[s[0]] != (0, 0) and _DEG[w[idx - 1][0]] != (0, 0) else "*"
                body += f"{_PREFIX[s[0]]}[{s[1]},{s[2]}]"
            if not body:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"({c})*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def _as_z(x) -> ZExpr:
    return x if isinstance(x, ZExpr) else ZExpr({(): as_qr(x)})


def zsym(kind: str, i: int, j: int) -> ZExpr:
    """Single symbol: kind in {'z', 'd', 'db', 'ddb'}."""
    if kind not in _DEG:
        raise ValueError(f"unknown symbol kind {kind!r}")
    return ZExpr({((kind, i, j),): ONE})


_SYM = re.compile(r"^(ddbz|dbz|dz|z)\[(\d+),(\d+)\]$")
_KIND = {"z": "z", "dz": "d", "dbz": "db", "ddbz": "ddb"}


def parse_zexpr(s: str) -> ZExpr:
    """Parse e.g. "z[1,3]*dbz[1,3]^dbz[1,2] - (q^-1)*dz[1,3]"."""
    from .frt import _split_top
    out = ZExpr()
    sign = 1
    for term, sep in _split_top(s, "+-"):
        term = term.strip()
        if term:
            coeff, word = ONE * sign, []
            for fac, _ in _split_top(term, "*"):
                fac = fac.strip()
                if "z[" in fac:
                    for sym, _ in _split_top(fac, "^"):
                        mt = _SYM.match(sym.strip())
                        if not mt:
                            raise ValueError(f"bad symbol {sym!r}")
                        word.append((_KIND[mt.group(1)], int(mt.group(2)), int(mt.group(3))))
                else:
                    coeff = coeff * parse_qr(fac)
            out = out + ZExpr({tuple(word): coeff})
        sign = -1 if sep == "-" else 1
    return out


_DIFF = {
    "del": {"z": ("d", 1), "db": ("ddb", 1)},
    "delbar": {"z": ("db", 1), "d": ("ddb", -1)},  # delbar del = - del delbar
}


def differentiate(e: ZExpr, kind: str) -> ZExpr:
    """Graded Leibniz extension of del ('del') or delbar ('delbar')."""
    kind = {"∂": "del", "∂̄": "delbar", "d+": "del", "d-": "delbar"}.get(kind, kind)
    if kind not in _DIFF:
        raise ValueError(f"unknown differential {kind!r}")
    rules = _DIFF[kind]
    acc = {}
    for w, c in e.terms.items():
        deg = 0
        for p, s in enumerate(w):
            r = rules.get(s[0])
            if r is not None:
                new = w[:p] + ((r[0], s[1], s[2]),) + w[p + 1:]
                v = c * (r[1] * (-1) ** deg)
                acc[new] = acc[new] + v if new in acc else v
            deg += sum(_DEG[s[0]])
    return ZExpr(acc)


# --- realized forms ----------------------------------------------------------

class CotensorForm:
    """Sum over Lambda basis monomials of (FRT element) (x) monomial."""

    __slots__ = ("n", "comps")

    def __init__(self, n: int, comps: dict | None = None):
        self.n = n
        self.comps = {k: v for k, v in (comps or {}).items() if not v.is_zero_mn()}

    def __add__(self, other):
        t = dict(self.comps)
        for k, v in other.comps.items():
            t[k] = t[k] + v if k in t else v
        return CotensorForm(self.n, t)

    def __neg__(self):
        return CotensorForm(self.n, {k: -v for k, v in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CotensorForm":
        return CotensorForm(self.n, {k: v.scale(c) for k, v in self.comps.items()})

    def bidegrees(self) -> set:
        return {(len(a), len(b)) for a, b in self.comps}

    def is_zero(self, degree_bound: int | None = None) -> bool:
        """Every Lambda coefficient vanishes in O_q(SU_n)."""
        return all(in_ideal(v, degree_bound) for v in self.comps.values())

    def max_degree(self) -> int:
        return max((max(v.degrees()) for v in self.comps.values()), default=0)

    def class_at_base(self) -> dict:
        """Counit applied to the algebra legs."""
        return {k: v.counit() for k, v in self.comps.items() if v.counit()}

    def __str__(self):
        if not self.comps:
            return "0"
        return " + ".join(f"[{v}] (x) {qext.mono_str(k)}" for k, v in sorted(self.comps.items(), key=lambda t: qext._order(t[0])))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "components": [
            {"monomial": qext.mono_str(k), "coefficient": json.loads(v.to_json())}
            for k, v in sorted(self.comps.items(), key=lambda t: qext._order(t[0]))]})


@lru_cache(maxsize=None)
def _ddb_legs(k: int, l: int, n: int) -> dict:
    # [del delbar z_ab] is e+_a ^ e-_b for a, b < n, sum_c e-_c ^ e+_c for a = b = n,
    # and 0 otherwise; this follows from z = z z and sum_c q^(2(c-n)) z_cc = 1
    out = {}
    S = lambda i, j: antipode(u(i, j, n))
    for a in range(1, n):
        for b in range(1, n):
            out[(("+", a), ("-", b))] = u(k, a, n) * S(b, l)
    top = u(k, n, n) * S(n, l)
    for c in range(1, n):
        key = (("+", c), ("-", c))
        out[key] = out[key] - top.scale(Q ** (2 * (c - n)))
    return {w: v for w, v in out.items() if not v.is_zero_mn()}


def _symbol_legs(s, n: int) -> dict:
    kind, i, j = s
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"symbol {s} out of range for n={n}")
    if kind == "z":
        return {(): zgen(i, j, n)}
    if kind == "ddb":
        return _ddb_legs(i, j, n)
    return {(key,): v for key, v in legs(i, j, n, "+" if kind == "d" else "-").items()}


def realize(e: ZExpr, n: int, T: qext.CrossTable | None = None) -> CotensorForm:
    """Takeuchi realization; products multiply componentwise."""
    if T is None:
        T = qext.derive_cross_table(n)
    alg = algebra(n)
    comps = {}
    for w, c in e.terms.items():
        acc = {(): FrtElement(alg, {(): c})}
        for s in w:
            nxt = {}
            for w1, f1 in acc.items():
                for w2, f2 in _symbol_legs(s, n).items():
                    key = w1 + w2
                    v = f1 * f2
                    nxt[key] = nxt[key] + v if key in nxt else v
            acc = {k: v for k, v in nxt.items() if not v.is_zero_mn()}
        for word, f in acc.items():
            for key, x in qext._reduce(word, T).items():
                v = f.scale(x)
                comps[key] = comps[key] + v if key in comps else v
    return CotensorForm(n, comps)


def uq_act_form(X: UqElement, f: CotensorForm) -> CotensorForm:
    """U_q(sl_n) acts on the algebra leg only."""
    return CotensorForm(f.n, {k: act(X, v) for k, v in f.comps.items()})


def lefschetz_form(f: CotensorForm, T: qext.CrossTable, m: int = 1) -> CotensorForm:
    """id (x) L^m, using the real part of kappa (zero tests are insensitive to i^m)."""
    kr = qext._real_kappa(T)
    comps = {}
    for key, v in f.comps.items():
        x = qext.ExtElement(f.n, {key: ONE})
        for _ in range(m):
            x = qext.wedge_ext(kr, x, T)
        for k2, c in x.terms.items():
            w = v.scale(c.re)
            comps[k2] = comps[k2] + w if k2 in comps else w
    return CotensorForm(f.n, comps)


# --- weights and proportionality ---------------------------------------------

def _lift(x: FrtElement, tops: dict) -> FrtElement:
    alg, n = x.alg, x.alg.n
    out = FrtElement(alg)
    for d in x.degrees():
        part = x.homogeneous_part(d)
        out = out + part * alg.det_power((tops[d % n] - d) // n)
    return out


def _vectors(forms, n):
    tops = {}
    for f in forms:
        for v in f.comps.values():
            for d in v.degrees():
                tops[d % n] = max(tops.get(d % n, d), d)
    out = []
    for f in forms:
        vec = {}
        for key, v in f.comps.items():
            for m, c in _lift(v, tops).terms.items():
                vec[(key, m)] = c
        out.append({k: c for k, c in vec.items() if c})
    return out


def proportionality(f1: CotensorForm, f2: CotensorForm):
    """The scalar c with f1 = c f2 in A (x) Lambda, or None if there is none."""
    v1, v2 = _vectors([f1, f2], f1.n)
    if not v2:
        raise HypothesisViolation("proportionality against a zero form")
    pivot = min(v2)
    c = v1.get(pivot, ZERO) / v2[pivot]
    keys = set(v1) | set(v2)
    if all(v1.get(k, ZERO) == c * v2.get(k, ZERO) for k in keys):
        return c
    return None


def form_weight(f: CotensorForm):
    """Fundamental-basis weight of a realized weight vector (None if not a weight vector)."""
    n = f.n
    alg = algebra(n)
    groups = {}
    for key, v in f.comps.items():
        for m, c in v.terms.items():
            groups.setdefault(weight_of_monomial(alg, m), {}).setdefault(key, {})[m] = c
    live = []
    for w, comp in groups.items():
        part = CotensorForm(n, {k: FrtElement(alg, t) for k, t in comp.items()})
        if not part.is_zero():
            live.append(w)
    if len(live) != 1:
        return None
    return WeightA(n, live[0])


def is_highest_weight(f: CotensorForm) -> bool:
    return all(uq_act_form(E(i, f.n), f).is_zero() for i in range(1, f.n))


# --- Leibniz constants, nu_k, B and A ----------------------------------------

def leibniz_constants(zexpr: ZExpr, n: int, T: qext.CrossTable | None = None):
    """(lambda, zeta) with (del z) z = lambda z del z and (delbar z) z = zeta z delbar z."""
    if zexpr.bidegree() not in (None, (0, 0)):
        raise ValueError("leibniz_constants needs a zero-form")
    out = []
    for kind in ("del", "delbar"):
        dz = differentiate(zexpr, kind)
        right = realize(zexpr * dz, n, T)
        if right.is_zero():
            if realize(dz, n, T).is_zero():
                raise ValueError("zero-form has vanishing differential (harmonic input)")
            raise HypothesisViolation("z dz vanishes although z and dz are non-zero: internal inconsistency")
        c = proportionality(realize(dz * zexpr, n, T), right)
        if c is None:
            raise HypothesisViolation(f"({kind} z) z is not proportional to z {kind} z: "
                                      "Gelfand/self-conjugacy hypothesis violated")
        out.append(c)
    lam, zeta = out
    if lam * zeta != 1:
        raise HypothesisViolation(f"zeta = {zeta} is not lambda^-1 = {1 / lam}")
    return lam, zeta


def nu_k(n: int, k: int) -> ZExpr:
    """sum_l (-q)^l z[1,n-l] * dbz[1,n] ^ ... (dbz[1,n-l] omitted) ... ^ dbz[1,n-k]."""
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} out of range 0..{n - 2}")
    out = ZExpr()
    for l in range(k + 1):
        word = [("z", 1, n - l)] + [("db", 1, n - t) for t in range(k + 1) if t != l]
        out = out + ZExpr({tuple(word): (-Q) ** l})
    return out


def _dbz_chain(n: int, k: int) -> ZExpr:
    return ZExpr({tuple(("db", 1, n - t) for t in range(k + 1)): ONE})


def _row(check, status, witness, ref):
    return {"check": check, "status": status, "witness": witness, "paper_ref": ref}


def verify_nu(n: int, k: int, T: qext.CrossTable | None = None) -> list:
    """Highest weight, weight value, and the delbar nu_k identity."""
    T = T or qext.derive_cross_table(n)
    nu = nu_k(n, k)
    r = realize(nu, n, T)
    rows = []
    hw = is_highest_weight(r)
    rows.append(_row("nu_k highest weight", "pass" if hw else "fail",
                     {"E_i kills": hw}, "nu_k is a highest weight vector"))
    w = form_weight(r)
    want = (k + 1) * fundamental(n, 1) + fundamental(n, n - k - 1)
    rows.append(_row("nu_k weight", "pass" if w == want else "fail",
                     {"computed": str(w), "expected": str(want)}, "weight of nu_k"))
    dnu = realize(differentiate(nu, "delbar"), n, T)
    chain = realize(_dbz_chain(n, k), n, T)
    factor = qint(k + 1, Q * Q)
    ok = (dnu - chain.scale(factor)).is_zero()
    rows.append(_row("delbar nu_k = (k+1)_{q^2} chain", "pass" if ok else "fail",
                     {"factor": str(factor)}, "delbar nu_k formula"))
    nz = not dnu.is_zero()
    rows.append(_row("delbar nu_k nonzero", "pass" if nz else "fail",
                     {"components": len(dnu.comps)}, "delbar nu_k is non-zero"))
    return rows


def wedge_identities(n: int, T: qext.CrossTable | None = None) -> list:
    """Wedge squares of delbar z_1j vanish; neighbours -q^-1 commute."""
    T = T or qext.derive_cross_table(n)
    rows = []
    for j in range(2, n + 1):
        sq = realize(zsym("db", 1, j) * zsym("db", 1, j), n, T)
        rows.append(_row(f"dbz[1,{j}]^dbz[1,{j}] = 0", "pass" if sq.is_zero() else "fail", {},
                         "wedge squares of delbar z_1j"))
    for j in range(3, n + 1):
        a = realize(zsym("db", 1, j) * zsym("db", 1, j - 1), n, T)
        b = realize(zsym("db", 1, j - 1) * zsym("db", 1, j), n, T)
        ok = (a + b.scale(Q ** -1)).is_zero()
        rows.append(_row(f"dbz[1,{j}]^dbz[1,{j - 1}] = -q^-1 dbz[1,{j - 1}]^dbz[1,{j}]",
                         "pass" if ok else "fail", {}, "q-commutation of delbar z_1j"))
    return rows


def b_constant(zexpr: ZExpr, eta: ZExpr, n: int, T: qext.CrossTable | None = None) -> QRational:
    """B with (delbar z) ^ eta = B z delbar(eta)."""
    T = T or qext.derive_cross_table(n)
    rhs = realize(zexpr * differentiate(eta, "delbar"), n, T)
    if rhs.is_zero():
        raise HypothesisViolation("z delbar(eta) vanishes; B is undefined")
    B = proportionality(realize(differentiate(zexpr, "delbar") * eta, n, T), rhs)
    if B is None:
        raise HypothesisViolation("(delbar z) ^ eta is not proportional to z delbar(eta)")
    return B


@dataclass(frozen=True)
class AStatus:
    nonzero: str            # nonzero | zero | undecided
    ne_lambda_minus_1: str  # ne_lambda_minus_1 | eq_lambda_minus_1 | undecided

    def as_tuple(self):
        return (self.nonzero, self.ne_lambda_minus_1)


def _nonprimitive(f: CotensorForm, T, degree_bound):
    if not f.comps:
        return False
    bd = f.bidegrees()
    if len(bd) != 1:
        raise ValueError(f"primitivity needs a bihomogeneous form, got {sorted(bd)}")
    a, b = next(iter(bd))
    e = (T.n - 1) - (a + b) + 1
    if e <= 0:
        # above the middle degree only the zero form is primitive
        return not f.is_zero(degree_bound)
    return not lefschetz_form(f, T, e).is_zero(degree_bound)


def a_status(zexpr: ZExpr, omega: ZExpr, n: int, T: qext.CrossTable | None = None,
             degree_bound: int | None = None) -> AStatus:
    """Non-primitivity of del z ^ omega (A != 0) and of omega ^ del z (A != lambda - 1)."""
    T = T or qext.derive_cross_table(n)
    dz = differentiate(zexpr, "del")
    out = []
    for form, labels in ((dz * omega, ("nonzero", "zero")),
                         (omega * dz, ("ne_lambda_minus_1", "eq_lambda_minus_1"))):
        try:
            out.append(labels[0] if _nonprimitive(realize(form, n, T), T, degree_bound) else labels[1])
        except Undecided:
            out.append("undecided")
    return AStatus(*out)


@dataclass
class LadderData:
    n: int
    z: ZExpr
    theta: list
    lam: QRational
    zeta: QRational
    B: list
    A_status: list
    mu: list = field(default_factory=list)
    harmonic: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "z": str(self.z),
            "theta": [str(t) for t in self.theta],
            "lambda": str(self.lam),
            "zeta": str(self.zeta),
            "B": [str(b) for b in self.B],
            "A_status": [list(a.as_tuple()) for a in self.A_status],
            "mu": self.mu,
            "harmonic": self.harmonic,
        }


def ladder(n: int, T: qext.CrossTable | None = None, degree_bound: int | None = None) -> LadderData:
    """The ladder (z_1n, {delbar nu_k}) with its Leibniz, B and A data."""
    if n < 2:
        raise ValueError("need n >= 2")
    T = T or qext.derive_cross_table(n)
    z = zsym("z", 1, n)
    lam, zeta = leibniz_constants(z, n, T)
    theta, B, A = [], [], []
    for k in range(n - 1):
        nu = nu_k(n, k)
        theta.append(differentiate(nu, "delbar"))
        B.append(b_constant(z, nu, n, T))
        A.append(a_status(z, theta[-1], n, T, degree_bound))
    harmonic = {"H00": "C", "H0k": {str(k): 0 for k in range(1, n)}, "euler_characteristic": 1, "index": 1}
    mu = [f"mu_{k}" for k in range(n - 1)]
    return LadderData(n, z, theta, lam, zeta, B, A, mu, harmonic)
