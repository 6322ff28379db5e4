"""Monomial bases of graded pieces of k[x_1, ..., x_n]."""

from __future__ import annotations

from functools import lru_cache
from math import comb

Exponent = tuple[int, ...]


def dim_r(n: int, t: int) -> int:
    """dim of the degree-t piece of a polynomial ring in n variables."""
    if t < 0 or n <= 0:
        return 1 if (t == 0 and n == 0) else 0
    return comb(t + n - 1, n - 1)


@lru_cache(maxsize=None)
def monomials(n: int, t: int) -> tuple[Exponent, ...]:
    """Exponent vectors of degree t in lex-descending order (x_1 > ... > x_n)."""
    if t < 0:
        return ()
    if n == 0:
        return ((),) if t == 0 else ()
    if n == 1:
        return ((t,),)
    out = []
    for a in range(t, -1, -1):
        for rest in monomials(n - 1, t - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, t: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(n, t))}


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))
