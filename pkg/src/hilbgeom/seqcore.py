"""Integer sequences used as Hilbert functions and h-vectors.

A :class:`HilbertSeq` stores finitely many values starting at degree 0 and an
optional tail marker saying how the sequence continues:

``"constant"``
    the last value repeats forever (Hilbert function of points),
``"zero"``
    every later value is 0 (h-vectors, Artinian algebras),
``None``
    nothing is claimed beyond the stored values.

Sequences with a tail are normalized so that equal infinite sequences compare
equal: trailing zeros are dropped under a zero tail and trailing repeats of
the last value under a constant tail.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Optional, Sequence

from hilbgeom.errors import DomainError, InputError

TAILS = (None, "constant", "zero")


@dataclass(frozen=True)
class HilbertSeq:
    values: tuple[int, ...]
    tail: Optional[str] = None

    def __post_init__(self):
        if self.tail not in TAILS:
            raise ValueError(f"unknown tail {self.tail!r}")
        vals = tuple(int(v) for v in self.values)
        if self.tail == "zero":
            while vals and vals[-1] == 0:
                vals = vals[:-1]
        elif self.tail == "constant":
            if not vals:
                raise ValueError("a constant tail needs at least one value")
            while len(vals) > 1 and vals[-1] == vals[-2]:
                vals = vals[:-1]
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, *values: int, tail: Optional[str] = None) -> "HilbertSeq":
        return cls(tuple(values), tail)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, t: int) -> int:
        """Value in degree ``t``, following the tail past the stored values."""
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        if self.tail == "zero":
            return 0
        if self.tail == "constant":
            return self.values[-1]
        raise IndexError(f"degree {t} is beyond the stored values and there is no tail")

    def upto(self, t_max: int) -> tuple[int, ...]:
        """Values in degrees ``0..t_max``."""
        return tuple(self[t] for t in range(t_max + 1))

    def eventual(self) -> int:
        """The value the sequence settles on (last stored value without a tail)."""
        if self.tail == "zero":
            return 0
        if not self.values:
            return 0
        return self.values[-1]

    def trimmed(self) -> tuple[int, ...]:
        """Stored values without trailing zeros."""
        vals = self.values
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        return vals

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def to_json(self) -> dict:
        out: dict = {"values": list(self.values)}
        if self.tail is not None:
            out["tail"] = self.tail
        return out

    @classmethod
    def from_json(cls, obj) -> "HilbertSeq":
        """Accept either a bare list or ``{"values": [...], "tail": ...}``."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            return cls(tuple(_as_int(v) for v in obj))
        if isinstance(obj, dict) and "values" in obj:
            tail = obj.get("tail")
            if tail not in TAILS:
                raise InputError(f"tail must be 'constant' or 'zero', got {tail!r}")
            return cls(tuple(_as_int(v) for v in obj["values"]), tail)
        raise InputError("a sequence is a JSON array or an object with a 'values' array")


def _as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"sequence entries must be integers, got {v!r}")
    return v


def as_seq(s: HilbertSeq | Iterable[int]) -> HilbertSeq:
    if isinstance(s, HilbertSeq):
        return s
    return HilbertSeq(tuple(s))


def difference(s: HilbertSeq | Sequence[int], k: int = 1) -> HilbertSeq:
    """Return the k-th difference, with the convention that degree -1 holds 0.

    Negative entries are allowed in the result. A zero-tailed input gets one
    explicit trailing zero before differencing so the final drop is kept.
    """
    if k < 0:
        raise DomainError("difference order must be non-negative")
    s = as_seq(s)
    for _ in range(k):
        vals = list(s.values)
        if s.tail == "zero" and vals and vals[-1] != 0:
            vals.append(0)
        diffs = tuple(b - a for a, b in zip([0] + vals[:-1], vals))
        tail = "zero" if s.tail in ("zero", "constant") else None
        s = HilbertSeq(diffs, tail)
    return s


def partial_sum(s: HilbertSeq | Sequence[int]) -> HilbertSeq:
    """Inverse of :func:`difference` with ``k = 1``."""
    s = as_seq(s)
    if s.tail == "constant" and s.values[-1] != 0:
        raise DomainError("partial sums of a nonzero constant tail grow without bound")
    tail = "constant" if s.tail in ("zero", "constant") else None
    vals = tuple(accumulate(s.values))
    if tail == "constant" and not vals:
        vals = (0,)
    return HilbertSeq(vals, tail)


def ci_h_vector(degrees: Sequence[int]) -> HilbertSeq:
    """h-vector of an Artinian complete intersection of the given degrees.

    These are the coefficients of prod_i (1 + t + ... + t^(d_i - 1)).
    """
    coeffs = [1]
    for d in degrees:
        if d < 1:
            raise DomainError(f"complete-intersection degrees must be >= 1, got {d}")
        new = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                new[i + j] += c
        coeffs = new
    return HilbertSeq(tuple(coeffs), "zero")


def truncate(s: HilbertSeq | Sequence[int], total: int) -> HilbertSeq:
    """Pointwise minimum of ``s`` and ``total``.

    ``s`` is the Hilbert function of a point set; the result is the Hilbert
    function every ``total``-point subset of a set with uniform position has.
    """
    s = as_seq(s)
    if total < 0:
        raise DomainError("truncation total must be non-negative")
    if s.tail == "zero":
        raise DomainError("truncate expects a Hilbert function of points, not an h-vector")
    if total > s.eventual():
        raise DomainError("truncation above cardinality")
    return HilbertSeq(tuple(min(v, total) for v in s.values), "constant")
