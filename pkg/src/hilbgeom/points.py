"""Finite point sets in projective space.

Hilbert functions come from ranks of evaluation matrices over a large prime
field; UPP is tested by brute force over subsets; plane GCDs are computed by
linear algebra and validated by exact trial division.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from hilbgeom.basis import dim_r, monomial_index, monomials
from hilbgeom.errors import DomainError, InputError
from hilbgeom.modla import backend
from hilbgeom.modla.field import RankEngineConfig
from hilbgeom.modla.forms import Form
from hilbgeom.modla.sources import PointSource
from hilbgeom.seqcore import HilbertSeq, difference, truncate

DEFAULT = RankEngineConfig()


@dataclass(frozen=True)
class PointSet:
    """Points of P^ambient given by homogeneous rational coordinates."""

    ambient: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(Fraction(c) for c in pt) for pt in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise DomainError("a point set needs at least one point")
        seen = set()
        for pt in pts:
            if len(pt) != self.ambient + 1:
                raise DomainError(f"point {pt} does not have {self.ambient + 1} coordinates")
            if not any(pt):
                raise DomainError("the zero vector is not a projective point")
            key = _projective_key(pt)
            if key in seen:
                raise DomainError(f"duplicate projective point {[str(c) for c in pt]}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.points)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.ambient, tuple(self.points[i] for i in indices))

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "points": [[str(c) for c in pt] for pt in self.points]}

    @classmethod
    def from_json(cls, obj) -> "PointSet":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            ambient = int(obj["ambient"])
            pts = tuple(tuple(Fraction(str(c)) for c in pt) for pt in obj["points"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed point set: {exc}") from None
        return cls(ambient, pts)


def _projective_key(pt: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    lead = next(c for c in pt if c)
    return tuple(c / lead for c in pt)


def random_points(count: int, ambient: int, rng: random.Random, box: int = 10**4) -> PointSet:
    """``count`` points with integer coordinates drawn uniformly from [-box, box]."""
    pts: dict = {}
    while len(pts) < count:
        pt = tuple(Fraction(rng.randint(-box, box)) for _ in range(ambient + 1))
        if any(pt):
            pts.setdefault(_projective_key(pt), pt)
    return PointSet(ambient, tuple(pts.values()))


def hilbert_function(Z: PointSet, t_max: Optional[int] = None, config: RankEngineConfig = DEFAULT) -> HilbertSeq:
    """h_Z(t) for t = 0..t_max; the tail is constant once |Z| is reached.

    Without ``t_max`` the computation runs until h_Z reaches |Z|.
    """
    src = PointSource(Z)
    total = len(Z)

    def run(p, rng):
        vals = []
        t = 0
        while True:
            if t_max is not None and t > t_max:
                break
            vals.append(src.evaluation_rank(t, p))
            if t_max is None and vals[-1] == total:
                break
            t += 1
        return tuple(vals)

    vals = config.confirm(run)
    return HilbertSeq(vals, "constant" if vals[-1] == total else None)


def h_vector(Z: PointSet, config: RankEngineConfig = DEFAULT) -> HilbertSeq:
    """First difference of h_Z; finite, sums to |Z|."""
    return difference(hilbert_function(Z, None, config), 1)


@dataclass(frozen=True)
class UPPVerdict:
    passed: bool
    mode: str
    witness: Optional[tuple[int, ...]] = None
    witness_hilbert: Optional[tuple[int, ...]] = None
    expected_hilbert: Optional[tuple[int, ...]] = None
    checked: int = 0

    def to_json(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "mode": self.mode,
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_hilbert": list(self.witness_hilbert) if self.witness_hilbert else None,
            "expected_hilbert": list(self.expected_hilbert) if self.expected_hilbert else None,
            "subsets_checked": self.checked,
        }


def upp_test(
    Z: PointSet,
    mode: str = "exhaustive",
    samples: int = 200,
    cap: int = 12,
    config: RankEngineConfig = DEFAULT,
    rng: Optional[random.Random] = None,
) -> UPPVerdict:
    """Compare every (or ``samples`` random) t-subset with the truncated h_Z.

    A failing verdict carries the first violating subset (point indices) and
    its Hilbert function next to the expected truncation.
    """
    if mode not in ("exhaustive", "sampled"):
        raise DomainError(f"unknown UPP mode {mode!r}")
    total = len(Z)
    if mode == "exhaustive" and total > cap:
        raise DomainError(f"exhaustive UPP test capped at {cap} points, got {total}")
    if rng is None:
        rng = random.Random(config.seed)
    h = hilbert_function(Z, None, config)
    top = len(h.values) - 1
    checked = 0
    for t in range(1, total):
        expected = truncate(h, t).upto(top)
        if mode == "exhaustive" or comb(total, t) <= samples:
            subsets = combinations(range(total), t)
        else:
            subsets = (tuple(sorted(rng.sample(range(total), t))) for _ in range(samples))
        for idx in subsets:
            checked += 1
            got = hilbert_function(Z.subset(idx), top, config).upto(top)
            if got != expected:
                return UPPVerdict(False, mode, tuple(idx), got, expected, checked)
    return UPPVerdict(True, mode, checked=checked)


def degree_forms(Z: PointSet, d: int, config: RankEngineConfig = DEFAULT) -> list[Form]:
    """Basis of (I_Z)_d as forms over the configured prime field."""
    if d < 0:
        raise DomainError("degree must be non-negative")
    src = PointSource(Z)
    n = src.n

    def run(p, rng):
        return len(src.rows(d, p))

    config.confirm(run)
    return [Form(n, d, row, config.prime) for row in src.rows(d, config.prime)]


def _product_system(parts: Sequence[tuple[Form, Sequence[tuple]]], p: int) -> list[dict]:
    """Coefficient rows of sum_k sum_m c_{k,m} * m * f_k, one row per output monomial.

    Columns are numbered consecutively over all (f_k, m) pairs.
    """
    rows: dict = {}
    col = 0
    for f, mults in parts:
        for m in mults:
            for e, c in f.terms.items():
                tgt = tuple(x + y for x, y in zip(e, m))
                row = rows.setdefault(tgt, {})
                row[col] = (row.get(col, 0) + c) % p
            col += 1
    return [r for r in rows.values() if r]


def _solve_division(g: Form, h: Form) -> Optional[Form]:
    """q with q * h == g exactly, or None."""
    p = g.modulus
    if h.degree > g.degree:
        return None
    qmons = monomials(g.n, g.degree - h.degree)
    nq = len(qmons)
    system = _product_system([(h, qmons), (Form(g.n, g.degree, {e: -c for e, c in g.terms.items()}, p), [(0,) * g.n])], p)
    reduced, pivots = backend.rref(system, {i: i for i in range(nq + 1)}, p)
    if nq in pivots:
        return None
    coeffs = {qmons[pc]: (-reduced[r][nq]) % p for r, pc in enumerate(pivots)}
    q = Form(g.n, g.degree - h.degree, coeffs, p)
    return q if q * h == g else None


def _gcd_pair(f: Form, g: Form) -> Form:
    """gcd of two nonzero forms over F_p.

    deg gcd(f, g) is the largest j for which u f + v g = 0 has a nonzero
    solution with deg u = deg g - j, deg v = deg f - j; at that j the solution
    is unique up to scalar and u = g / gcd.
    """
    p = f.modulus
    a, b = f.degree, g.degree
    for j in range(min(a, b), 0, -1):
        umons = monomials(f.n, b - j)
        vmons = monomials(f.n, a - j)
        system = _product_system([(f, umons), (g, vmons)], p)
        ncols = len(umons) + len(vmons)
        kernel = backend.nullspace(system, {i: i for i in range(ncols)}, p)
        if kernel:
            u = Form(f.n, b - j, {umons[k]: c for k, c in enumerate(kernel[0][: len(umons)])}, p)
            h = _solve_division(g, u)
            if h is None:
                raise AssertionError("cofactor does not divide; gcd kernel is inconsistent")
            return h.normalized()
    return Form.constant(f.n, 1, p)


@dataclass(frozen=True)
class GCDResult:
    gcd: Form
    quotients: tuple[Form, ...]

    @property
    def degree(self) -> int:
        return self.gcd.degree

    def to_json(self) -> dict:
        return {"degree": self.degree, "gcd": self.gcd.to_json(), "gcd_text": str(self.gcd)}


def gcd_of_forms(forms: Sequence[Form]) -> GCDResult:
    """Greatest common divisor (up to scalar) of forms over one prime field.

    Every input is divided exactly by the result before it is returned.
    """
    forms = list(forms)
    if not forms:
        raise DomainError("gcd of an empty list")
    p = forms[0].modulus
    if p is None or any(f.modulus != p for f in forms):
        raise DomainError("gcd_of_forms needs forms over one prime field")
    if any(f.is_zero() for f in forms):
        raise DomainError("gcd_of_forms needs nonzero forms")
    g = forms[0].normalized()
    for f in forms[1:]:
        if g.degree == 0:
            break
        g = _gcd_pair(g, f)
    quotients = []
    for f in forms:
        q = _solve_division(f, g)
        if q is None:
            raise AssertionError(f"gcd {g} does not divide {f}")
        quotients.append(q)
    return GCDResult(g, tuple(quotients))
