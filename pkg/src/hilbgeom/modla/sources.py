"""Degreewise spanning sets of ideals over a prime field.

A slice source answers ``rows(t, p)``: sparse vectors (exponent -> residue
mod p) spanning the degree-t piece of an ideal in the monomial basis.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from hilbgeom.basis import dim_r, monomial_index, monomials
from hilbgeom.errors import DomainError
from hilbgeom.modla import backend
from hilbgeom.modla.forms import Form, shift, substitute

Row = dict


class SliceSource:
    """Base class; subclasses implement :meth:`rows`."""

    n: int

    def rows(self, t: int, p: int) -> list[Row]:
        raise NotImplementedError

    def dim(self, t: int, p: int) -> int:
        """dim I_t over F_p."""
        if t < 0:
            return 0
        return backend.rank(self.rows(t, p), monomial_index(self.n, t), p)

    def truncate(self, d: int) -> "SliceSource":
        """The ideal generated by the pieces of degree <= d."""
        return TruncatedSource(self, d)

    def restrict(self, images: list[Row], m: int, p: int) -> "SliceSource":
        """Image under x_i -> images[i], a map onto a ring with m variables."""
        return RestrictedSource(self, images, m, p)


class GeneratorSource(SliceSource):
    """Ideal generated by explicit forms; I_t is spanned by {g * m}."""

    def __init__(self, n: int, forms: Sequence[Form]):
        self.n = n
        self.forms = [f for f in forms if not f.is_zero()]
        for f in self.forms:
            if f.n != n:
                raise DomainError(f"generator in {f.n} variables, expected {n}")
        self._reduced: dict[int, list[tuple[int, dict]]] = {}

    @classmethod
    def from_monomial_ideal(cls, ideal) -> "GeneratorSource":
        return cls(ideal.n, [Form.monomial(g) for g in ideal.gens])

    def _gens(self, p: int) -> list[tuple[int, dict]]:
        if p not in self._reduced:
            self._reduced[p] = [(f.degree, f.mod_terms(p)) for f in self.forms]
        return self._reduced[p]

    def rows(self, t: int, p: int) -> list[Row]:
        out = []
        for deg, g in self._gens(p):
            if deg <= t:
                out.extend(shift(g, m) for m in monomials(self.n, t - deg))
        return out

    def truncate(self, d: int) -> "GeneratorSource":
        return GeneratorSource(self.n, [f for f in self.forms if f.degree <= d])

    def restrict(self, images: list[Row], m: int, p: int) -> "GeneratorSource":
        cache: dict = {}
        forms = []
        for deg, g in self._gens(p):
            img = substitute(g, images, m, p, cache)
            if img:
                forms.append(Form(m, deg, img, p))
        return GeneratorSource(m, forms)


class TruncatedSource(SliceSource):
    """<I_{<=d}>: agrees with the parent through degree d, then I_d * R_{t-d}."""

    def __init__(self, parent: SliceSource, d: int):
        self.parent = parent
        self.n = parent.n
        self.d = d

    def rows(self, t: int, p: int) -> list[Row]:
        if t <= self.d:
            return self.parent.rows(t, p)
        base = self.parent.rows(self.d, p)
        return [shift(f, m) for f in base for m in monomials(self.n, t - self.d)]

    def restrict(self, images, m, p):
        return TruncatedSource(self.parent.restrict(images, m, p), self.d)


class RestrictedSource(SliceSource):
    def __init__(self, parent: SliceSource, images: list[Row], m: int, p: int):
        self.parent = parent
        self.images = images
        self.n = m
        self.p = p
        self._cache: dict = {}
        self._rows: dict[int, list[Row]] = {}

    def rows(self, t: int, p: int) -> list[Row]:
        if p != self.p:
            raise DomainError(f"source was restricted over F_{self.p}, asked for F_{p}")
        if t not in self._rows:
            imgs = (substitute(r, self.images, self.n, p, self._cache) for r in self.parent.rows(t, p))
            self._rows[t] = [r for r in imgs if r]
        return self._rows[t]


def integral_coordinates(point: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a projective point by the lcm of its denominators."""
    den = lcm(*(Fraction(c).denominator for c in point))
    return tuple(int(Fraction(c) * den) for c in point)


class PointSource(SliceSource):
    """Ideal of a finite point set; I_t is the kernel of evaluation in degree t."""

    def __init__(self, points):
        self.points = points
        self.n = points.ambient + 1
        self._coords = [integral_coordinates(pt) for pt in points.points]
        self._rows: dict[tuple[int, int], list[Row]] = {}

    def evaluation_rows(self, t: int, p: int) -> list[Row]:
        mons = monomials(self.n, t)
        out = []
        for pt in self._coords:
            red = [c % p for c in pt]
            if not any(red):
                raise DomainError(f"point {pt} vanishes modulo {p}")
            powers = [[pow(c, k, p) for k in range(t + 1)] for c in red]
            row = {}
            for e in mons:
                v = 1
                for i, a in enumerate(e):
                    if a:
                        v = v * powers[i][a] % p
                if v:
                    row[e] = v
            out.append(row)
        return out

    def evaluation_rank(self, t: int, p: int) -> int:
        if t < 0:
            return 0
        return backend.rank(self.evaluation_rows(t, p), monomial_index(self.n, t), p)

    def dim(self, t: int, p: int) -> int:
        if t < 0:
            return 0
        return dim_r(self.n, t) - self.evaluation_rank(t, p)

    def rows(self, t: int, p: int) -> list[Row]:
        key = (t, p)
        if key not in self._rows:
            mons = monomials(self.n, t)
            kernel = backend.nullspace(self.evaluation_rows(t, p), monomial_index(self.n, t), p)
            self._rows[key] = [{mons[j]: c for j, c in enumerate(v) if c} for v in kernel]
        return self._rows[key]
