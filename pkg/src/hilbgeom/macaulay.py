"""Macaulay's binomial expansions and the growth bound for O-sequences."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from hilbgeom.errors import DomainError
from hilbgeom.seqcore import HilbertSeq, as_seq, difference


@dataclass(frozen=True)
class BinomialExpansion:
    """c = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j), terms as (m, k) pairs."""

    level: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(comb(m, k) for m, k in self.terms)

    def shifted(self, l: int) -> int:
        """sum of C(m + l, k + l); l = 1 is the Macaulay bound."""
        return sum(comb(m + l, k + l) for m, k in self.terms)

    def __str__(self) -> str:
        return " + ".join(f"C({m},{k})" for m, k in self.terms)


def binomial_expansion(c: int, i: int) -> BinomialExpansion:
    """The i-binomial expansion of ``c``, built greedily from the top."""
    if c <= 0 or i <= 0:
        raise DomainError(f"binomial expansion needs c > 0 and i > 0, got c={c}, i={i}")
    terms = []
    rest = c
    k = i
    while rest > 0:
        m = k
        while comb(m + 1, k) <= rest:
            m += 1
        terms.append((m, k))
        rest -= comb(m, k)
        k -= 1
    return BinomialExpansion(i, tuple(terms))


def growth(c: int, i: int) -> int:
    """Macaulay's bound c^<i>: the largest value allowed in degree i + 1."""
    if i <= 0:
        raise DomainError(f"growth level must be positive, got {i}")
    if c < 0:
        raise DomainError(f"growth is defined for c >= 0, got {c}")
    if c == 0:
        return 0
    return binomial_expansion(c, i).shifted(1)


@dataclass(frozen=True)
class OSequenceVerdict:
    ok: bool
    violation: Optional[int] = None  # degree i where s[i+1] > s[i]^<i>, or 0 if s[0] != 1
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "violation": self.violation, "reason": self.reason}


def _checked_values(s: HilbertSeq) -> list[int]:
    # Extend a constant tail far enough that every later step is c -> c with
    # c <= degree, where the bound is c itself.
    vals = list(s.values)
    if s.tail == "constant":
        last = vals[-1]
        while len(vals) < max(last, 1) + 2:
            vals.append(last)
    elif s.tail == "zero":
        vals.append(0)
    return vals


def is_o_sequence(s: HilbertSeq | Sequence[int]) -> OSequenceVerdict:
    """Check Macaulay's condition; the value in degree 1 is unconstrained."""
    s = as_seq(s)
    vals = _checked_values(s)
    if not vals or vals[0] != 1:
        return OSequenceVerdict(False, 0, "value in degree 0 must be 1")
    for i, v in enumerate(vals):
        if v < 0:
            return OSequenceVerdict(False, i, f"negative value {v} in degree {i}")
    for i in range(1, len(vals) - 1):
        bound = growth(vals[i], i)
        if vals[i + 1] > bound:
            return OSequenceVerdict(
                False, i, f"{vals[i + 1]} in degree {i + 1} exceeds {vals[i]}^<{i}> = {bound}"
            )
    return OSequenceVerdict(True)


def is_differentiable_o_sequence(s: HilbertSeq | Sequence[int]) -> OSequenceVerdict:
    """True when both ``s`` and its first difference are O-sequences."""
    s = as_seq(s)
    first = is_o_sequence(s)
    if not first:
        return first
    second = is_o_sequence(difference(s, 1))
    if not second:
        return OSequenceVerdict(False, second.violation, "first difference: " + second.reason)
    return OSequenceVerdict(True)


@dataclass(frozen=True)
class GrowthVerdict:
    degree: int
    value: int
    bound: int
    next: Optional[int]
    is_maximal: bool

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "value": self.value,
            "bound": self.bound,
            "next": self.next,
            "is_maximal": self.is_maximal,
        }


def maximal_growth_degrees(s: HilbertSeq | Sequence[int]) -> list[GrowthVerdict]:
    """One verdict per stored degree i >= 1.

    The value following the last stored entry comes from the tail; without a
    tail it is absent and the verdict is not maximal, but the bound is still
    reported.
    """
    s = as_seq(s)
    verdict = is_o_sequence(s)
    if not verdict:
        raise DomainError(f"not an O-sequence: {verdict.reason}")
    out = []
    for i in range(1, len(s.values)):
        c = s.values[i]
        nxt = s[i + 1] if (i + 1 < len(s.values) or s.tail is not None) else None
        bound = growth(c, i)
        out.append(GrowthVerdict(i, c, bound, nxt, nxt is not None and nxt == bound))
    return out
