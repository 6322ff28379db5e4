"""Gotzmann persistence: the forced continuation after maximal growth."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from hilbgeom.errors import DomainError
from hilbgeom.macaulay import BinomialExpansion, binomial_expansion, growth
from hilbgeom.seqcore import HilbertSeq, as_seq


def persistence_value(c_d: int, d: int, l: int) -> int:
    """Value in degree d + l forced by maximal growth from degree d."""
    if c_d < 1 or d < 1 or l < 0:
        raise DomainError("persistence needs c_d >= 1, d >= 1, l >= 0")
    return binomial_expansion(c_d, d).shifted(l)


def _binomial_poly(a: int, b: int) -> list[Fraction]:
    """Monomial-basis coefficients (low degree first) of C(x + a, b)."""
    coeffs = [Fraction(1)]
    for k in range(b):
        # multiply by (x + a - k)
        shift = a - k
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += c * shift
            new[i + 1] += c
        coeffs = new
    fb = factorial(b)
    return [c / fb for c in coeffs]


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact rational coefficients, low degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in cs))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True)
class GotzmannPolynomial:
    """Hilbert polynomial forced by maximal growth from ``anchor_degree``.

    ``binomial_terms`` holds pairs (a, b) for the summands C(x + a, b).
    """

    anchor_degree: int
    expansion: BinomialExpansion
    binomial_terms: tuple[tuple[int, int], ...]
    polynomial: Polynomial

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self.expansion.terms

    @property
    def dimension(self) -> int:
        return self.polynomial.degree

    @property
    def degree_of_scheme(self) -> int:
        lead = self.polynomial.leading * factorial(self.dimension)
        assert lead.denominator == 1
        return int(lead)

    def to_json(self) -> dict:
        return {
            "anchor_degree": self.anchor_degree,
            "terms": [list(t) for t in self.terms],
            "binomial_basis": [list(t) for t in self.binomial_terms],
            "dimension": self.dimension,
            "degree": self.degree_of_scheme,
            "coefficients": self.polynomial.to_json(),
            "polynomial": str(self.polynomial),
        }


def gotzmann_polynomial(c_d: int, d: int) -> GotzmannPolynomial:
    if c_d < 1 or d < 1:
        raise DomainError("Gotzmann polynomial needs c_d >= 1 and d >= 1")
    exp = binomial_expansion(c_d, d)
    bterms = tuple((m - d, m - k) for m, k in exp.terms)
    total = [Fraction(0)]
    for a, b in bterms:
        p = _binomial_poly(a, b)
        if len(p) > len(total):
            total += [Fraction(0)] * (len(p) - len(total))
        for i, c in enumerate(p):
            total[i] += c
    poly = Polynomial(tuple(total))
    gp = GotzmannPolynomial(d, exp, bterms, poly)
    top_m = exp.terms[0][0]
    assert poly(d) == c_d
    assert gp.dimension == top_m - d
    return gp


@dataclass(frozen=True)
class FlatClass:
    """Reading of maximal growth at a flat.

    ``kind`` is ``"curve-like"`` (zero-dimensional on the hyperplane section,
    so the base locus is a curve of ``degree``), ``"polynomial-ring"`` (the
    reduced ring is still full in that degree), or ``"dimension"`` with the
    raw dimension of the scheme cut out on the hyperplane section.
    """

    kind: str
    dimension: int
    degree: Optional[int]

    def to_json(self) -> dict:
        return {"kind": self.kind, "dimension": self.dimension, "degree": self.degree}


def classify_flat(delta_h: HilbertSeq | Sequence[int], d: int, ambient_n: int) -> FlatClass:
    """Classify maximal growth of ``delta_h`` from degree d to d + 1.

    ``ambient_n`` is the number of variables of the ring of the points, so
    ``delta_h`` lives in a ring with ``ambient_n - 1`` variables.
    """
    s = as_seq(delta_h)
    if d < 1:
        raise DomainError("flat degree must be >= 1")
    c = s[d]
    nxt = s[d + 1]
    if c < 1 or nxt != growth(c, d):
        raise DomainError(f"not maximal: {c} -> {nxt} from degree {d} (bound {growth(c, d) if c >= 0 else '?'})")
    if c == comb(d + ambient_n - 2, d):
        return FlatClass("polynomial-ring", ambient_n - 2, None)
    gp = gotzmann_polynomial(c, d)
    if gp.dimension == 0:
        return FlatClass("curve-like", 0, gp.degree_of_scheme)
    return FlatClass("dimension", gp.dimension, gp.degree_of_scheme)
