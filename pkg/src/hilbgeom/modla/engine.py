"""Ideal-theoretic computations on slice sources.

Quotients by m general linear forms are computed by restricting the ideal
to a random linear subspace of codimension m (x_i -> random linear form in
n - m variables); for a general subspace this is the same algebra as
R / (I + (L_1, ..., L_m)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from hilbgeom.basis import dim_r, monomial_index, monomials
from hilbgeom.errors import DomainError
from hilbgeom.gotzmann import Polynomial
from hilbgeom.modla import backend
from hilbgeom.modla.field import RankEngineConfig
from hilbgeom.modla.forms import shift
from hilbgeom.modla.sources import SliceSource
from hilbgeom.seqcore import HilbertSeq

DEFAULT = RankEngineConfig()


def slice_dim(src: SliceSource, t: int, config: RankEngineConfig = DEFAULT) -> int:
    """dim I_t, confirmed across independent primes."""
    return config.confirm(lambda p, rng: src.dim(t, p))


def _random_form(m: int, d: int, p: int, rng: random.Random) -> dict:
    return {e: rng.randrange(1, p) for e in monomials(m, d)}


def generic_section(src: SliceSource, m: int, p: int, rng: random.Random) -> SliceSource:
    """Image of ``src`` in the quotient by m random linear forms."""
    if not 0 <= m <= src.n:
        raise DomainError(f"cannot cut {src.n} variables by {m} linear forms")
    if m == 0:
        return src
    k = src.n - m
    images = [_random_form(k, 1, p, rng) for _ in range(src.n)]
    return src.restrict(images, k, p)


def quotient_by_generic_linears(
    src: SliceSource, m: int, t_max: int, config: RankEngineConfig = DEFAULT
) -> HilbertSeq:
    """Hilbert function of R / (I + (L_1..L_m)) in degrees 0..t_max.

    Once a value is 0 every later one is, and the result gets a zero tail.
    """

    def run(p, rng):
        q = generic_section(src, m, p, rng)
        return tuple(dim_r(q.n, t) - q.dim(t, p) for t in range(t_max + 1))

    values = config.confirm(run)
    return HilbertSeq(values, "zero" if 0 in values else None)


def reduction_number(src: SliceSource, m: int, config: RankEngineConfig = DEFAULT) -> int:
    """Least k with R / (I + (L_1..L_m)) zero in degree k + 1."""

    def run(p, rng):
        q = generic_section(src, m, p, rng)
        for t in range(config.cap + 1):
            if dim_r(q.n, t) - q.dim(t, p) == 0:
                return t - 1
        return None

    r = config.confirm(run)
    if r is None:
        raise DomainError("dimension too large or cap too low")
    return r


def initial_degree(src: SliceSource, config: RankEngineConfig = DEFAULT) -> int:
    """Least t with I_t nonzero."""

    def run(p, rng):
        for t in range(config.cap + 1):
            if src.dim(t, p) > 0:
                return t
        return None

    a = config.confirm(run)
    if a is None:
        raise DomainError(f"ideal is zero through degree {config.cap}")
    return a


@dataclass(frozen=True)
class LefschetzStep:
    degree: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def expected(self) -> int:
        return min(self.dim_source, self.dim_target)

    @property
    def ok(self) -> bool:
        return self.rank == self.expected

    def to_json(self) -> dict:
        return {
            "t": self.degree,
            "dim_t": self.dim_source,
            "dim_t_plus_d": self.dim_target,
            "rank": self.rank,
            "max_rank": self.expected,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class LefschetzReport:
    form_degree: int
    hilbert: tuple[int, ...]
    steps: tuple[LefschetzStep, ...]

    @property
    def passed(self) -> bool:
        return all(s.ok for s in self.steps)

    def failures(self) -> list[LefschetzStep]:
        return [s for s in self.steps if not s.ok]

    def to_json(self) -> dict:
        return {
            "form_degree": self.form_degree,
            "hilbert_function": list(self.hilbert),
            "verdict": "PASS" if self.passed else "FAIL",
            "steps": [s.to_json() for s in self.steps],
        }


def _lefschetz(src, m, d, t_max, config) -> LefschetzReport:
    if d < 1:
        raise DomainError("form degree must be >= 1")
    limit = config.cap if t_max is None else t_max

    def run(p, rng):
        q = generic_section(src, m, p, rng)
        k = q.n
        form = _random_form(k, d, p, rng)
        dims = []
        for t in range(limit + 1):
            dims.append(dim_r(k, t) - q.dim(t, p))
            if dims[-1] == 0:
                break
        else:
            return None
        top = len(dims) - 1
        steps = []
        for t in range(top):
            target = t + d
            dim_target = dims[target] if target <= top else 0
            if dim_target == 0 or dims[t] == 0:
                steps.append(LefschetzStep(t, dims[t], dim_target, 0))
                continue
            ideal_rows = q.rows(target, p)
            index = monomial_index(k, target)
            base = backend.rank(ideal_rows, index, p)
            products = [shift(form, mono) for mono in monomials(k, t)]
            together = backend.rank(products + ideal_rows, index, p)
            steps.append(LefschetzStep(t, dims[t], dim_target, together - base))
        return LefschetzReport(d, tuple(dims), tuple(steps))

    report = config.confirm(run)
    if report is None:
        raise DomainError(f"quotient is not Artinian through degree {limit}")
    return report


def wlp_test(
    src: SliceSource, m: int, t_max: Optional[int] = None, config: RankEngineConfig = DEFAULT
) -> LefschetzReport:
    """Maximal-rank test for multiplication by a general linear form.

    The algebra is R / (I + m general linear forms), which must be Artinian
    by degree ``t_max`` (default: the configured cap).
    """
    return _lefschetz(src, m, 1, t_max, config)


def slp_test(
    src: SliceSource, m: int, form_degree: int, t_max: Optional[int] = None,
    config: RankEngineConfig = DEFAULT,
) -> LefschetzReport:
    """As :func:`wlp_test`, multiplying by a general form of ``form_degree``."""
    return _lefschetz(src, m, form_degree, t_max, config)


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> Polynomial:
    """Exact Lagrange interpolation."""
    total = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            total[k] += c * yi / denom
    return Polynomial(tuple(total))


@dataclass(frozen=True)
class FitReport:
    truncation_degree: int
    samples: tuple[tuple[int, int], ...]
    polynomial: Polynomial
    fit_from: int

    @property
    def dimension(self) -> int:
        return self.polynomial.degree

    @property
    def leading_coefficient(self) -> Fraction:
        return self.polynomial.leading

    @property
    def scheme_degree(self) -> int:
        lead = self.polynomial.leading * factorial(max(self.dimension, 0))
        return int(lead)

    def to_json(self) -> dict:
        return {
            "truncation_degree": self.truncation_degree,
            "samples": [list(s) for s in self.samples],
            "polynomial": str(self.polynomial),
            "coefficients": self.polynomial.to_json(),
            "dimension": self.dimension,
            "degree": self.scheme_degree,
            "fit_from": self.fit_from,
        }


CONFIRMING_POINTS = 3


def fit_hilbert_polynomial(ts: Sequence[int], values: Sequence[int], max_degree: int) -> tuple[Polynomial, int]:
    """Minimal-degree polynomial matching the tail of the samples.

    The polynomial of degree e passes through the last e + 1 samples and must
    also match the CONFIRMING_POINTS samples before them. Returns the
    polynomial and the first sampled degree from which it matches.
    """
    for e in range(max_degree + 1):
        need = e + 1 + CONFIRMING_POINTS
        if need > len(ts):
            break
        poly = interpolate(ts[-(e + 1):], values[-(e + 1):])
        if all(poly(t) == v for t, v in zip(ts[-need:], values[-need:])):
            start = len(ts) - need
            while start > 0 and poly(ts[start - 1]) == values[start - 1]:
                start -= 1
            return poly, ts[start]
    raise DomainError("range too small or not yet polynomial")


def truncated_ideal_polynomial(
    src: SliceSource,
    d: int,
    t_range: Optional[Sequence[int]] = None,
    config: RankEngineConfig = DEFAULT,
) -> FitReport:
    """Hilbert polynomial of R / <I_{<=d}>, fitted exactly from sampled values.

    ``t_range`` defaults to d, d + 1, ..., d + n + 2, enough samples for any
    polynomial of degree below n plus the confirming points.
    """
    ts = list(t_range) if t_range is not None else list(range(d, d + src.n + 3))
    trunc = src.truncate(d)

    def run(p, rng):
        return tuple(dim_r(src.n, t) - trunc.dim(t, p) for t in ts)

    values = config.confirm(run)
    poly, start = fit_hilbert_polynomial(ts, values, src.n - 1)
    return FitReport(d, tuple(zip(ts, values)), poly, start)
