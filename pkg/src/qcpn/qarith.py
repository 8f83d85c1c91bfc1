"""Exact arithmetic in the rational function field Q(q).

Elements are stored as a quotient of two Laurent polynomials with
rational coefficients.  The canonical form keeps numerator and
denominator coprime, the denominator monic with lowest exponent 0, so
that equal values compare equal structurally.

Laurent polynomials with denominator 1 take a fast path through every
operation; they are what the FRT and exterior-algebra code produces in
bulk.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "LaurentPoly",
    "QRational",
    "GaussQ",
    "Q",
    "ONE",
    "ZERO",
    "I",
    "as_qr",
    "qint",
    "qbracket",
    "qfactorial",
    "qbinom",
    "eval_at",
    "parse_qr",
]


def _coef(c):
    # exact type check: isinstance against the numbers ABCs is slow on hot paths
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Laurent polynomial sum c[i] q^(lo+i) with exact coefficients."""

    __slots__ = ("lo", "c")

    def __init__(self, lo: int = 0, c=()):
        c = tuple(_coef(x) for x in c)
        a, b = 0, len(c)
        while a < b and c[a] == 0:
            a += 1
        while b > a and c[b - 1] == 0:
            b -= 1
        if a == b:
            self.lo, self.c = 0, ()
        else:
            self.lo, self.c = lo + a, c[a:b]

    @classmethod
    def _raw(cls, lo, c):
        # caller guarantees canonical (c trimmed, nonzero ends)
        p = object.__new__(cls)
        p.lo, p.c = lo, c
        return p

    @classmethod
    def monomial(cls, coeff, exp: int) -> "LaurentPoly":
        return cls(exp, (coeff,))

    @classmethod
    def from_dict(cls, d: dict) -> "LaurentPoly":
        d = {k: v for k, v in d.items() if v != 0}
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls(lo, [d.get(e, 0) for e in range(lo, hi + 1)])

    def to_dict(self) -> dict:
        return {self.lo + i: x for i, x in enumerate(self.c) if x != 0}

    @property
    def hi(self) -> int:
        return self.lo + len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.lo == 0 and self.c == (1,)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.lo == other.lo and self.c == other.c
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.c
            return self.lo == 0 and self.c == (other,)
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.c))

    def __neg__(self):
        return LaurentPoly._raw(self.lo, tuple(-x for x in self.c))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.c:
            return self
        if not self.c:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, x in enumerate(self.c):
            out[self.lo - lo + i] += x
        for i, x in enumerate(other.c):
            out[other.lo - lo + i] += x
        return LaurentPoly(lo, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            a, b = self.c, other.c
            if not a or not b:
                return LaurentPoly()
            if len(b) == 1:
                y = b[0]
                return LaurentPoly._raw(self.lo + other.lo, tuple(_coef(x * y) for x in a))
            if len(a) == 1:
                x = a[0]
                return LaurentPoly._raw(self.lo + other.lo, tuple(_coef(x * y) for y in b))
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    out[i + j] += x * y
            return LaurentPoly(self.lo + other.lo, out)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._raw(self.lo, tuple(_coef(x * other) for x in self.c))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        if not self.c:
            return self
        return LaurentPoly._raw(self.lo + k, self.c)

    def __call__(self, x):
        """Evaluate at x (Horner, exact for rational x)."""
        acc = 0
        for coeff in reversed(self.c):
            acc = acc * x + coeff
        if self.lo:
            acc = acc * (x ** self.lo if isinstance(x, float) else Fraction(x) ** self.lo)
        return acc

    def __repr__(self):
        return f"LaurentPoly({self.lo}, {self.c!r})"


ONE_LP = LaurentPoly._raw(0, (1,))
ZERO_LP = LaurentPoly()


# --- univariate polynomial helpers over Q, ascending coefficient lists ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        s = len(a) - len(b)
        q[s] = f
        for i, y in enumerate(b):
            a[s + i] -= f * y
        a.pop()
        _trim(a)
    return q, a


def _pgcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def _lp_div_exact(p: LaurentPoly, g) -> LaurentPoly:
    """Divide p by the ordinary polynomial g (exact division assumed)."""
    q, r = _pdivmod(list(p.c), g)
    assert not r, "inexact polynomial division"
    return LaurentPoly(p.lo, q)


class QRational:
    """Element of Q(q) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, QRational) and den is None:
            self.num, self.den = num.num, num.den
            return
        num = _to_lp(num)
        den = ONE_LP if den is None else _to_lp(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _canon(num, den)

    @classmethod
    def _lp(cls, p: LaurentPoly) -> "QRational":
        r = object.__new__(cls)
        r.num, r.den = p, ONE_LP
        return r

    # -- predicates --
    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num.c)

    def is_zero(self) -> bool:
        return not self.num.c

    def __eq__(self, other):
        if isinstance(other, QRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.is_one() and (not self.num.c or (self.num.lo == 0 and len(self.num.c) == 1)):
            return hash(self.num.c[0] if self.num.c else 0)
        return hash((self.num, self.den))

    # -- arithmetic --
    def __neg__(self):
        r = object.__new__(QRational)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other):
        if not isinstance(other, QRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRational._lp(self.num + other.num)
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        return QRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, QRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRational):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ZERO
                r = object.__new__(QRational)
                r.num, r.den = self.num * other, self.den
                return r
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRational._lp(self.num * other.num)
        return QRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRational":
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRational(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, QRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not other.num.c:
            raise ZeroDivisionError("division by zero in Q(q)")
        if other.den.is_one() and len(other.num.c) == 1:
            # monomial divisor keeps Laurent form
            c, e = other.num.c[0], other.num.lo
            num = self.num.shift(-e) * (Fraction(1) / c)
            r = object.__new__(QRational)
            r.num, r.den = num, self.den
            return r
        return QRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if len(self.num.c) == 1 and self.den.is_one():
            return QRational._lp(LaurentPoly._raw(self.num.lo * e, (_coef(Fraction(self.num.c[0]) ** e),)))
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "QRational":
        # q is a real parameter, so conjugation is trivial on Q(q)
        return self

    def subs_q_inverse(self) -> "QRational":
        """The bar involution q -> 1/q."""
        def flip(p):
            return LaurentPoly(-p.hi, tuple(reversed(p.c))) if p.c else p
        return QRational(flip(self.num), flip(self.den))

    def __call__(self, q0):
        return eval_at(self, q0)

    def __str__(self):
        if self.den.is_one():
            return _lp_str(self.num)
        return f"({_lp_str(self.num)})/({_lp_str(self.den)})"

    def __repr__(self):
        return f"QRational('{self}')"


def _lp_str(p: LaurentPoly) -> str:
    if not p.c:
        return "0"
    parts = []
    for i, c in enumerate(p.c):
        if c == 0:
            continue
        e = p.lo + i
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if e == 0:
            body = str(a)
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            body = qpart if a == 1 else f"{a}*{qpart}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _to_lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly(0, (x,))
    raise TypeError(f"cannot build a Laurent polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, QRational):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return QRational._lp(LaurentPoly(0, (x,)))
    if isinstance(x, Rational):
        return QRational._lp(LaurentPoly(0, (Fraction(x),)))
    return None


def _canon(num: LaurentPoly, den: LaurentPoly):
    if not num.c:
        return ZERO_LP, ONE_LP
    if den.is_one():
        return num, den
    # move powers of q out of the denominator
    num = num.shift(-den.lo)
    den = LaurentPoly._raw(0, den.c)
    if len(den.c) > 1:
        g = _pgcd(list(num.c), list(den.c))
        if len(g) > 1:
            num = _lp_div_exact(num, g)
            den = _lp_div_exact(den, g)
    lead = den.c[-1]
    if lead != 1:
        inv = Fraction(1) / Fraction(lead)
        num, den = num * inv, den * inv
    return num, den


def as_qr(x) -> QRational:
    """Coerce int, Fraction, str or QRational into QRational."""
    if isinstance(x, str):
        return parse_qr(x)
    r = _coerce(x)
    if r is None:
        raise TypeError(f"cannot coerce {x!r} to QRational")
    return r


ONE = QRational._lp(ONE_LP)
ZERO = QRational._lp(ZERO_LP)
Q = QRational._lp(LaurentPoly._raw(1, (1,)))


# --- parsing -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(q)|(\S))")


def _tokenize(s: str):
    out = []
    pos = 0
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad QRational syntax near {s[pos:]!r}")
        pos = m.end()
        if m.group(1):
            out.append(("num", Fraction(m.group(1))))
        elif m.group(2):
            out.append(("q", None))
        else:
            out.append(("op", m.group(3)))
    return out


class _Parser:
    def __init__(self, s: str):
        self.toks = _tokenize(s)
        self.i = 0
        self.src = s

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, op=None):
        t = self.peek()
        if op is not None and t != ("op", op):
            raise ValueError(f"expected {op!r} in {self.src!r}")
        self.i += 1
        return t

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        t = self.peek()
        if t in (("op", "-"), ("op", "+")):
            self.take()
            v = self.factor()
            return -v if t[1] == "-" else v
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            kind, val = self.take()
            if kind != "num" or val.denominator != 1:
                raise ValueError(f"exponent must be an integer in {self.src!r}")
            base = base ** (sign * int(val))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return as_qr(val)
        if kind == "q":
            return Q
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.take(")")
            return v
        raise ValueError(f"unexpected token {val!r} in {self.src!r}")


def parse_qr(s: str) -> QRational:
    """Parse strings such as "1 - 1/2*q^-2 + 3*q^3" or "(q)/(1 + q^2)"."""
    p = _Parser(s)
    if not p.toks:
        raise ValueError("empty QRational string")
    v = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {s!r}")
    return v


# --- Gaussian extension --------------------------------------------------

class GaussQ:
    """re + i*im with re, im in Q(q); i commutes with q and conj(i) = -i."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = as_qr(re)
        self.im = as_qr(im)

    @staticmethod
    def lift(x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        return GaussQ(as_qr(x), ZERO)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, GaussQ):
            try:
                other = GaussQ.lift(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __add__(self, other):
        o = GaussQ.lift(other)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussQ.lift(other)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussQ.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, GaussQ):
            return GaussQ(self.re * other.re - self.im * other.im,
                          self.re * other.im + self.im * other.re)
        o = as_qr(other)
        return GaussQ(self.re * o, self.im * o)

    __rmul__ = __mul__

    def conj(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def norm2(self) -> QRational:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussQ":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussQ(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussQ.lift(other).inverse()

    def __rtruediv__(self, other):
        return GaussQ.lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = GaussQ(ONE)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"i*({self.im})"
        return f"({self.re}) + i*({self.im})"

    def __repr__(self):
        return f"GaussQ('{self}')"


I = GaussQ(ZERO, ONE)


# --- quantum integers -------------------------------------------------------

def qint(m: int, lam=Q):
    """(m)_lam = 1 + lam + ... + lam^(m-1)."""
    if m < 0:
        raise ValueError("qint needs m >= 0")
    if not isinstance(lam, QRational):
        # plain numbers stay plain (floats for the analytic code paths)
        acc, p = 0, 1
        for _ in range(m):
            acc += p
            p *= lam
        return acc
    acc, p = ZERO, ONE
    for _ in range(m):
        acc = acc + p
        p = p * lam
    return acc


def qbracket(m: int) -> QRational:
    """[m]_q = q^(1-m) + q^(3-m) + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("qbracket needs m >= 0")
    if m == 0:
        return ZERO
    return QRational._lp(LaurentPoly(1 - m, [1 if i % 2 == 0 else 0 for i in range(2 * m - 1)]))


def qfactorial(m: int) -> QRational:
    out = ONE
    for k in range(2, m + 1):
        out = out * qbracket(k)
    return out


def qbinom(n: int, r: int) -> QRational:
    if r < 0 or n < 0 or r > n:
        raise ValueError(f"qbinom({n},{r}): need 0 <= r <= n")
    return qfactorial(n) / (qfactorial(r) * qfactorial(n - r))


def eval_at(f, q0):
    """Evaluate f at q = q0; exact for rational q0, float for float q0."""
    f = as_qr(f)
    if isinstance(q0, str):
        q0 = Fraction(q0)
    elif isinstance(q0, int):
        q0 = Fraction(q0)
    if q0 == 0:
        if f.num.lo < 0:
            raise ValueError("cannot evaluate at q = 0: negative exponents present")
    d = f.den(q0)
    if d == 0:
        raise ValueError(f"pole at q = {q0}")
    v = f.num(q0) / d
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v
