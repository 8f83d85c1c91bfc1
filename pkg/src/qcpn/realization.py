"""Takeuchi unit of the Heckenberger-Kolb first-order calculus.

A one-form on quantum projective space is realized as an element of
O_q(SU_n) (x) V with V = span{e+_x, e-_x : x < n}:

    d z_kl  ->  sum_x u^k_x S(u^n_l) (x) e+_x  +  u^k_n S(u^x_l) (x) e-_x

(first sum is the holomorphic part, second the antiholomorphic part).
Products of realized forms multiply componentwise, so a k-form becomes a
dict {letter word: FrtElement}.  The class [omega] at the base point is the
image under the counit of the left legs.
"""
from __future__ import annotations

from functools import lru_cache

from .frt import FrtElement, antipode, u, z_gen

__all__ = ["letters", "legs", "z", "form_class"]


def letters(n: int) -> list:
    """The one-form letters ('+', x), ('-', x) for x < n."""
    return [("+", x) for x in range(1, n)] + [("-", x) for x in range(1, n)]


@lru_cache(maxsize=None)
def _S(i: int, j: int, n: int) -> FrtElement:
    return antipode(u(i, j, n))


@lru_cache(maxsize=None)
def z(i: int, j: int, n: int) -> FrtElement:
    return z_gen(i, j, n)


@lru_cache(maxsize=None)
def legs(k: int, l: int, n: int, part: str = "d") -> dict:
    """Realization of d z_kl (part 'd'), del z_kl ('+') or delbar z_kl ('-')."""
    out = {}
    for x in range(1, n):
        if part in ("d", "+"):
            out[("+", x)] = u(k, x, n) * _S(n, l, n)
        if part in ("d", "-"):
            out[("-", x)] = u(k, n, n) * _S(x, l, n)
    return {key: v for key, v in out.items() if not v.is_zero_mn()}


def form_class(realized: dict) -> dict:
    """Counit of the left legs: {letter word: coefficient}."""
    out = {}
    for word, a in realized.items():
        c = a.counit()
        if c:
            out[word] = c
    return out
