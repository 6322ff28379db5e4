"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from sympy import GF
from sympy.polys.matrices import DomainMatrix


def all_binomial_representations(c, i):
    """Every c = C(m_i, i) + ... + C(m_j, j) with m_i > ... > m_j >= j >= 1."""
    found = []

    def walk(rest, k, upper, acc):
        if rest == 0:
            found.append(tuple(acc))
            return
        if k == 0:
            return
        for m in range(k, upper):
            v = comb(m, k)
            if v > rest:
                break
            walk(rest - v, k - 1, m, acc + [(m, k)])

    walk(c, i, c + i + 1, [])
    return found


def monomials_of_degree(n, t):
    out = []
    for combo in combinations_with_replacement(range(n), t):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def count_standard(gens, n, t):
    """Monomials of degree t divisible by no generator."""
    return sum(
        1
        for e in monomials_of_degree(n, t)
        if not any(all(a >= b for a, b in zip(e, g)) for g in gens)
    )


def rank_gf(rows, p):
    if not rows or not rows[0]:
        return 0
    return DomainMatrix([[GF(p)(c) for c in r] for r in rows], (len(rows), len(rows[0])), GF(p)).rank()


def rank_exact(rows):
    """Rank over Q by fraction-valued elimination."""
    m = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def points_hilbert(points, t):
    """h_Z(t) as the rank of the exact evaluation matrix."""
    n = len(points[0])
    mons = monomials_of_degree(n, t)
    rows = []
    for pt in points:
        row = []
        for e in mons:
            v = Fraction(1)
            for c, a in zip(pt, e):
                v *= Fraction(c) ** a
            row.append(v)
        rows.append(row)
    return rank_exact(rows)
