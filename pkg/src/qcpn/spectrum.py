"""Eigenvalues of the Dolbeault Laplacian from ladder data.

On the highest weight vector z^l w of a ladder (z, Theta) the Laplacian
acts by

    mu_l = (A (l)_lam + 1) (B (l)_{1/lam} + 1) mu_0,

and the eigenspace is the irreducible module of the matching highest
weight, counted once among the exact forms and once among the coexact
forms.  Values work over Q(q) (QRational), exact rationals (Fraction) or
floats; A and mu_0 are free positive parameters unless overridden.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .qarith import QRational, Q, as_qr, eval_at, qint
from .representations import omega_weights, weyl_dim

__all__ = [
    "B_CONDITION_NOTE",
    "eigenvalue",
    "eigenvalue_expr",
    "family_weight",
    "multiplicity",
    "solidity_verdict",
    "limit_point",
    "compact_resolvent_verdict",
    "SpectrumTable",
    "assemble_spectrum",
    "dirac_spectrum",
    "parse_overrides",
]

B_CONDITION_NOTE = ("solid+ uses B != 1/lambda - 1, the value at which the second factor of the "
                    "eigenvalue formula tends to zero; the condition B != lambda - 1 would not "
                    "match that limit")


def _inv(x):
    if isinstance(x, QRational):
        return x ** -1
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def eigenvalue(l: int, A, B, lam, mu0=1):
    """(A (l)_lam + 1)(B (l)_{1/lam} + 1) mu0."""
    if lam == 0:
        raise ValueError("lambda must be non-zero")
    return (A * qint(l, lam) + 1) * (B * qint(l, _inv(lam)) + 1) * mu0


def eigenvalue_expr(l: int, B: QRational, lam: QRational, A="A", mu="mu") -> str:
    """Exact Q(q) form of the eigenvalue with A and mu kept as symbols."""
    second = as_qr(B) * qint(l, _inv(lam)) + 1
    if l == 0:
        return f"{mu}"
    return f"({A}*({qint(l, lam)}) + 1)*({second})*{mu}"


# --- multiplicities ------------------------------------------------------------

def family_weight(n: int, k: int, l: int, family: str):
    for fam, ll, w in omega_weights(n, k, l):
        if fam == family and ll == l:
            return w
    raise ValueError(f"no {family} summand at n={n}, k={k}, l={l}")


def multiplicity(n: int, k: int, l: int, family: str) -> int:
    """Dimension of the irreducible summand of the given family in degree k."""
    if family == "harmonic":
        if k == 0 and l == 0:
            return 1
        raise ValueError("harmonic forms occur only in degree 0 (l = 0)")
    if family not in ("exact", "coexact"):
        raise ValueError(f"unknown family {family!r}")
    return weyl_dim(family_weight(n, k, l, family))


# --- solidity ------------------------------------------------------------------

def _status_pair(A_status, lam):
    """Normalize an A-status pair or a numeric A into (nonzero?, ne_lambda_minus_1?) flags."""
    if isinstance(A_status, (int, float, Fraction)):
        A = A_status
        return ("zero" if A == 0 else "nonzero",
                "eq_lambda_minus_1" if _close(A, lam - 1) else "ne_lambda_minus_1")
    if hasattr(A_status, "as_tuple"):
        return A_status.as_tuple()
    return tuple(A_status)


def _close(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-15)
    return a == b


def solidity_verdict(lam, A_status, B) -> dict:
    """Classify one ladder element; returns {verdict, conditions}."""
    if lam <= 0:
        raise ValueError("lambda must be positive for a connected calculus")
    a_nz, a_ne = _status_pair(A_status, lam)
    conds = {}

    def flag(value, yes, no):
        return None if value == "undecided" else value == yes

    if _close(lam, 1):
        kind = "solid0"
        conds["A != 0"] = flag(a_nz, "nonzero", "zero")
        conds["B != 0"] = not _close(B, 0)
        ok = True if conds["B != 0"] else conds["A != 0"]
    elif lam > 1:
        kind = "solid+"
        conds["A != 0"] = flag(a_nz, "nonzero", "zero")
        conds["B != 1/lambda - 1"] = not _close(B, _inv(lam) - 1)
        ok = None if conds["A != 0"] is None else (conds["A != 0"] and conds["B != 1/lambda - 1"])
        if conds["B != 1/lambda - 1"] is False:
            ok = False
    else:
        kind = "solid-"
        conds["A != lambda - 1"] = flag(a_nz and a_ne, "ne_lambda_minus_1", "eq_lambda_minus_1")
        conds["B != 0"] = not _close(B, 0)
        ok = None if conds["A != lambda - 1"] is None else (conds["A != lambda - 1"] and conds["B != 0"])
        if conds["B != 0"] is False:
            ok = False
    verdict = "undecided" if ok is None else (kind if ok else "not-solid")
    return {"verdict": verdict, "regime": kind, "conditions": conds, "note": B_CONDITION_NOTE}


def limit_point(lam, A, B):
    """Finite limit of mu_l / mu_0 when the sequence does not diverge, else None.

    For lam > 1: A = 0 gives 1 + B/(1 - 1/lam); B = 1/lam - 1 gives A/(lam - 1).
    For lam < 1 the roles swap: B = 0 gives 1 + A/(1 - lam); A = lam - 1 gives
    B/(1/lam - 1).
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if _close(lam, 1):
        return 1 if _close(A, 0) and _close(B, 0) else None
    if lam < 1:
        return limit_point(_inv(lam), B, A)
    if _close(A, 0):
        return 1 + B / (1 - _inv(lam))
    if _close(B, _inv(lam) - 1):
        return A / (lam - 1)
    return None


def _eval(x, q0):
    return eval_at(x, q0) if isinstance(x, QRational) else x


def compact_resolvent_verdict(lad, q0, A_values: dict | None = None) -> dict:
    """Spectral-triple verdict for a ladder at q = q0.

    A_values optionally supplies numeric A_k, used only to list limit
    points when a ladder element fails to be solid.
    """
    if isinstance(q0, str):
        q0 = Fraction(q0)
    if q0 <= 0 or q0 == 1:
        raise ValueError("q0 must be positive and different from 1")
    lam = _eval(lad.lam, q0)
    rows, verdicts, limits = [], [], []
    for k, (B, st) in enumerate(zip(lad.B, lad.A_status)):
        b = _eval(B, q0)
        v = solidity_verdict(lam, st, b)
        row = {"k": k, "B": str(b), "A_status": list(_status_pair(st, lam)), **v}
        if v["verdict"] == "not-solid":
            A = (A_values or {}).get(k, 0 if _status_pair(st, lam)[0] == "zero" else None)
            if A is not None:
                lp = limit_point(lam, A, b)
                row["limit_point"] = None if lp is None else str(lp)
                limits.append(lp)
        rows.append(row)
        verdicts.append(v["verdict"])
    harmonic = lad.harmonic
    finite_cohomology = harmonic.get("H00") == "C" and all(v == 0 for v in harmonic.get("H0k", {}).values())
    if "undecided" in verdicts:
        overall = "undecided"
    elif all(v.startswith("solid") for v in verdicts) and finite_cohomology:
        overall = "positive"
    else:
        overall = "negative"
    return {
        "n": lad.n,
        "q0": str(q0),
        "lambda": str(lam),
        "rows": rows,
        "finite_cohomology": finite_cohomology,
        "harmonic": harmonic,
        "verdict": overall,
        "spectral_triples": overall == "positive",
        "index": harmonic.get("index") if overall == "positive" else None,
        "limit_points": [str(x) for x in limits if x is not None],
        "note": B_CONDITION_NOTE,
    }


# --- tables --------------------------------------------------------------------

@dataclass
class SpectrumTable:
    n: int
    rows: list
    meta: dict = field(default_factory=dict)

    COLUMNS = ("k", "l", "family", "eigenvalue", "multiplicity")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.COLUMNS)
        for r in self.rows:
            w.writerow([_fmt(r[c]) for c in self.COLUMNS])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "meta": self.meta,
                           "rows": [{c: _fmt(r[c]) for c in self.COLUMNS} for r in self.rows]},
                          indent=2, sort_keys=True)

    def delta_multiplicities(self) -> dict:
        """Total multiplicity of each non-zero eigenspace (ladder index j, l)."""
        out = {}
        for r in self.rows:
            if r["family"] == "harmonic":
                continue
            j = r["k"] if r["family"] == "coexact" else r["k"] - 1
            out[(j, r["l"])] = out.get((j, r["l"]), 0) + r["multiplicity"]
        return out


def _fmt(x):
    if isinstance(x, float):
        return repr(x)
    return str(x) if not isinstance(x, (int, str)) else x


def parse_overrides(obj) -> dict:
    """Accept {"A": [...], "mu": [...]} or flat {"A_0": .., "mu_0": ..}; values exact where possible."""
    if obj is None:
        return {"A": {}, "mu": {}}
    out = {"A": {}, "mu": {}}
    for key in ("A", "mu"):
        v = obj.get(key)
        if isinstance(v, list):
            out[key] = {i: x for i, x in enumerate(v)}
        elif isinstance(v, dict):
            out[key] = {int(i): x for i, x in v.items()}
    for k, v in obj.items():
        if "_" in k and k.split("_")[0] in ("A", "mu"):
            name, idx = k.split("_", 1)
            out[name][int(idx)] = v
    for name in out:
        for i, x in out[name].items():
            x = Fraction(x) if isinstance(x, (int, str)) else x
            if x <= 0:
                raise ValueError(f"override {name}_{i} = {x} must be positive")
            out[name][i] = x
    return out


def assemble_spectrum(n: int, q0=None, l_max: int = 5, overrides=None, lad=None) -> SpectrumTable:
    """All rows k <= n-1, l <= l_max.

    With q0 given, numeric A_k and mu_k must come from `overrides`
    (they are free parameters, not computed values).  Without q0 the
    eigenvalues are exact Q(q) expressions in the symbols A_k, mu_k.
    """
    from .calculus import ladder as build_ladder
    lad = lad or build_ladder(n)
    ov = parse_overrides(overrides)
    if isinstance(q0, str):
        q0 = Fraction(q0)
    if q0 is not None:
        for j in range(n - 1):
            if j not in ov["A"] or j not in ov["mu"]:
                raise ValueError(f"numeric spectrum needs overrides A_{j} and mu_{j} (illustrative inputs, not derived values)")
        lam = _eval(lad.lam, q0)
    rows = [{"k": 0, "l": 0, "family": "harmonic", "eigenvalue": 0, "multiplicity": 1}]
    for k in range(n):
        for l in range(l_max + 1):
            for family in ("coexact", "exact"):
                j = k if family == "coexact" else k - 1
                if not 0 <= j <= n - 2:
                    continue
                if q0 is None:
                    ev = eigenvalue_expr(l, lad.B[j], lad.lam, A=_sym(ov["A"], j, "A"), mu=_sym(ov["mu"], j, "mu"))
                else:
                    ev = eigenvalue(l, ov["A"][j], _eval(lad.B[j], q0), lam, ov["mu"][j])
                rows.append({"k": k, "l": l, "family": family, "eigenvalue": ev,
                             "multiplicity": multiplicity(n, k, l, family)})
    meta = {"q0": None if q0 is None else str(q0), "l_max": l_max,
            "B": [str(b) for b in lad.B], "lambda": str(lad.lam)}
    if ov["A"] or ov["mu"]:
        meta["overrides"] = {"A": {str(k): str(v) for k, v in ov["A"].items()},
                             "mu": {str(k): str(v) for k, v in ov["mu"].items()},
                             "label": "illustrative inputs, not derived values"}
    return SpectrumTable(n, rows, meta)


def _sym(d, j, name):
    return f"({d[j]})" if j in d else f"{name}_{j}"


def dirac_spectrum(table: SpectrumTable) -> SpectrumTable:
    """Each coexact eigenvalue mu of multiplicity d gives +-sqrt(mu), each of multiplicity d."""
    rows = []
    for r in table.rows:
        if r["family"] == "harmonic":
            rows.append(dict(r))
            continue
        if r["family"] != "coexact":
            continue
        ev = r["eigenvalue"]
        for sign in (1, -1):
            if isinstance(ev, str):
                val = f"{'+' if sign > 0 else '-'}sqrt({ev})"
            else:
                val = sign * math.sqrt(ev)
            rows.append({"k": r["k"], "l": r["l"], "family": "plus" if sign > 0 else "minus",
                         "eigenvalue": val, "multiplicity": r["multiplicity"]})
    return SpectrumTable(table.n, rows, dict(table.meta, operator="dirac"))
