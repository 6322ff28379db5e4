"""Monomial ideals: Hilbert functions, lex segments, Eliahou-Kervaire Betti
numbers, socles and distraction to reduced point sets.

Monomials are exponent tuples; variables are ordered x_1 > x_2 > ... > x_n.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from hilbgeom.basis import dim_r, divides, monomials
from hilbgeom.errors import DomainError, InputError
from hilbgeom.macaulay import is_o_sequence
from hilbgeom.seqcore import HilbertSeq, as_seq

Monomial = tuple[int, ...]


def _order_key(e: Monomial):
    return (sum(e), tuple(-a for a in e))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal given by its minimal monomial generators (see :func:`minimalize`)."""

    n: int
    gens: tuple[Monomial, ...]

    def contains(self, e: Monomial) -> bool:
        return any(divides(g, e) for g in self.gens)

    def is_artinian(self) -> bool:
        return all(
            any(g[i] > 0 and sum(g) == g[i] for g in self.gens) for i in range(self.n)
        )

    def max_gen_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def top_degree(self) -> int:
        """Degree bound for standard monomials of an Artinian ideal."""
        if not self.is_artinian():
            raise DomainError("needs an Artinian monomial ideal")
        powers = [
            min(g[i] for g in self.gens if g[i] > 0 and sum(g) == g[i]) for i in range(self.n)
        ]
        return sum(a - 1 for a in powers)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj) -> "MonomialIdeal":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            n = obj["n"]
            gens = [tuple(int(a) for a in g) for g in obj["gens"]]
            if "all_of_degree" in obj:
                gens += monomials(n, int(obj["all_of_degree"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"monomial ideal needs 'n' and 'gens': {exc}") from None
        return minimalize(gens, n)


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Drop duplicates and generators divisible by others; sort degree-then-lex."""
    gens = [tuple(int(a) for a in g) for g in gens]
    if n is None:
        if not gens:
            raise DomainError("cannot infer the variable count of an empty generator list")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DomainError(f"exponent vector {g} has length {len(g)}, expected {n}")
        if any(a < 0 for a in g):
            raise DomainError(f"negative exponent in {g}")
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=_order_key):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(kept))


def standard_monomials(ideal: MonomialIdeal, t: int) -> list[Monomial]:
    return [e for e in monomials(ideal.n, t) if not ideal.contains(e)]


def hilbert_function(ideal: MonomialIdeal, t_max: int) -> HilbertSeq:
    """dim (R/I)_t for t = 0..t_max by counting standard monomials."""
    if t_max < 0:
        raise DomainError("t_max must be non-negative")
    return HilbertSeq(tuple(len(standard_monomials(ideal, t)) for t in range(t_max + 1)))


def _lex_target(s: HilbertSeq) -> list[int]:
    vals = list(s.values)
    if s.tail == "zero":
        vals.append(0)
    elif s.tail == "constant":
        # growth c -> c is maximal once the degree reaches c, after which the
        # lex ideal acquires no new generators
        last = vals[-1]
        while len(vals) < last + 2:
            vals.append(last)
    return vals


def lex_ideal(s: HilbertSeq | Sequence[int], n: int) -> MonomialIdeal:
    """The lex-segment ideal with Hilbert function ``s``.

    Degree t of the ideal is spanned by the first dim R_t - s[t] monomials in
    lex order. Without a tail, generators are produced only through the last
    stored degree.
    """
    s = as_seq(s)
    verdict = is_o_sequence(s)
    if not verdict:
        raise DomainError(f"not an O-sequence (degree {verdict.violation}): {verdict.reason}")
    if len(s.values) > 1 and s.values[1] > n:
        raise DomainError(f"value {s.values[1]} in degree 1 exceeds the variable count {n}")
    gens = []
    for t, v in enumerate(_lex_target(s)):
        gens.extend(monomials(n, t)[: dim_r(n, t) - v])
    if not gens:
        return MonomialIdeal(n, ())
    return minimalize(gens, n)


def _max_index(e: Monomial) -> int:
    """1-based index of the last variable dividing e (0 for the unit)."""
    for i in range(len(e) - 1, -1, -1):
        if e[i] > 0:
            return i + 1
    return 0


def is_stable(ideal: MonomialIdeal) -> bool:
    """x_j * u / x_max(u) lies in I for every generator u and j < max(u)."""
    for u in ideal.gens:
        m = _max_index(u)
        for j in range(m - 1):
            v = list(u)
            v[m - 1] -= 1
            v[j] += 1
            if not ideal.contains(tuple(v)):
                return False
    return True


@dataclass(frozen=True)
class BettiDiagram:
    """Graded Betti numbers of R/I keyed by (column i, row j - i)."""

    entries: dict
    columns: int

    @property
    def rows(self) -> int:
        return max((r for (_, r) in self.entries), default=0) + 1

    def get(self, col: int, row: int) -> int:
        return self.entries.get((col, row), 0)

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(
            sum(v for (c, _), v in self.entries.items() if c == col) for col in range(self.columns)
        )

    def table(self) -> list[list[int]]:
        return [[self.get(c, r) for c in range(self.columns)] for r in range(self.rows)]

    def render(self) -> str:
        width = max(5, *(len(str(t)) + 1 for t in self.totals))
        lines = ["total:" + "".join(f"{t:>{width}}" for t in self.totals)]
        lines.append("-" * len(lines[0]))
        for r in range(self.rows):
            cells = "".join(f"{(self.get(c, r) or '-'):>{width}}" for c in range(self.columns))
            lines.append(f"{r:>5}:" + cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"totals": list(self.totals), "table": self.table()}


def ek_betti(ideal: MonomialIdeal) -> BettiDiagram:
    """Eliahou-Kervaire Betti diagram of R/I for a stable ideal I.

    A generator u contributes C(max(u) - 1, i) to beta_{i, deg u + i}(I),
    which lands in column i + 1, row deg u - 1 of the diagram of R/I.
    """
    if not is_stable(ideal):
        raise DomainError("Eliahou–Kervaire requires stable")
    entries: Counter = Counter({(0, 0): 1})
    columns = 1
    for u in ideal.gens:
        m = _max_index(u)
        for i in range(m):
            b = comb(m - 1, i)
            if b:
                entries[(i + 1, sum(u) - 1)] += b
                columns = max(columns, i + 2)
    return BettiDiagram(dict(entries), columns)


def socle_degrees(ideal: MonomialIdeal) -> list[tuple[int, Monomial]]:
    """Standard monomials killed by every variable, as (degree, witness) pairs."""
    if not ideal.is_artinian():
        raise DomainError("socle computation needs an Artinian monomial ideal")
    out = []
    for t in range(ideal.top_degree() + 1):
        for u in standard_monomials(ideal, t):
            if all(ideal.contains(_times(u, j)) for j in range(ideal.n)):
                out.append((t, u))
    return out


def _times(u: Monomial, j: int) -> Monomial:
    v = list(u)
    v[j] += 1
    return tuple(v)


def distraction_points(ideal: MonomialIdeal):
    """Lift an Artinian monomial ideal to a reduced set of points.

    Returns ``(points, lifted)``: one point [1 : a_1 : ... : a_n] per standard
    monomial x^a, and the lifted generators, where x^a maps to
    prod_i prod_{k < a_i} (x_i - k x_0) in k[x_0, x_1, ..., x_n].
    """
    from hilbgeom.points import PointSet

    if not ideal.is_artinian():
        raise DomainError("distraction needs an Artinian monomial ideal")
    coords = []
    for t in range(ideal.top_degree() + 1):
        for u in standard_monomials(ideal, t):
            coords.append((Fraction(1),) + tuple(Fraction(a) for a in u))
    lifted = [lift_monomial(g) for g in ideal.gens]
    return PointSet(ideal.n, tuple(coords)), lifted


def lift_monomial(e: Monomial):
    """prod_i prod_{k < e_i} (x_i - k x_0) as a form in n + 1 variables."""
    from hilbgeom.modla.forms import Form

    n = len(e) + 1
    result = Form.constant(n, 1)
    for i, a in enumerate(e):
        for k in range(a):
            lin = {_unit(n, i + 1): Fraction(1)}
            if k:
                lin[_unit(n, 0)] = Fraction(-k)
            result = result * Form(n, 1, lin)
    return result


def _unit(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))
