"""Rule engine: read base-locus structure off a flat in an h-vector.

For a zero-dimensional scheme Z in P^(n-1) with Delta h_Z(d) = Delta h_Z(d+1)
= s, the rules below encode when the forms of degree <= d cut out a curve of
degree s and what more can be said about it. Rules only report conclusions
their hypotheses guarantee; missing inputs make a rule "not evaluable",
never "fails".

Rule ids:

R1  plane case, d >= s: (I_Z)_d and (I_Z)_{d+1} share a common factor of degree s.
R2  reduced Z, d >= s: a reduced curve of degree s, saturated and d-regular.
R3  reduced Z, d > r_2: a d-regular curve of degree s, possibly non-reduced.
R4  Z with UPP, d >= s: the curve is moreover unmixed and irreducible and contains Z.
R5  Z with UPP, d > r_2: the curve is unmixed and contains Z.
R6  Z with UPP, d >= s: once Delta h drops after the flat it keeps dropping.
R7  flat of the second difference, WLP, r_2 > d > r_3: a surface of degree s.
R8  plane sets with UPP have h-vectors of decreasing type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Optional

from hilbgeom.errors import DomainError, InputError
from hilbgeom.macaulay import growth
from hilbgeom.seqcore import HilbertSeq, as_seq, difference

CONCLUSIONS = (
    "saturated",
    "curve-of-degree-s",
    "d-regular",
    "reduced",
    "unmixed",
    "irreducible",
    "Z-contained-in-C",
    "2-dim-scheme-of-degree-s",
    "strictly-decreasing-after-d+1",
)

# A rule whose hypotheses contain another's and whose conclusions contain its
# conclusions makes the weaker rule redundant on the same flat.
SUBSUMES = {"R4": "R2", "R5": "R3"}

UNSTATED = "formulas relating the Hilbert functions of Z, Z_1, Z_2: asserted to exist, not computed"


def _tri(v) -> Optional[bool]:
    if v is None or isinstance(v, bool):
        return v
    raise InputError(f"expected true, false or null, got {v!r}")


@dataclass(frozen=True)
class DiagnosisInput:
    ambient_n: int
    delta_h: HilbertSeq
    delta2_h: Optional[HilbertSeq] = None
    r2: Optional[int] = None
    r3: Optional[int] = None
    upp: Optional[bool] = None
    wlp: Optional[bool] = None
    h1_vanishes: Optional[bool] = None
    reduced: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(self, "delta_h", as_seq(self.delta_h))
        if self.delta2_h is not None:
            object.__setattr__(self, "delta2_h", as_seq(self.delta2_h))
            expected = difference(self.delta_h, 1)
            for t, v in enumerate(self.delta2_h.values):
                try:
                    e = expected[t]
                except IndexError:
                    break
                if e != v:
                    raise DomainError(
                        f"delta2_h disagrees with the difference of delta_h in degree {t}: {v} != {e}"
                    )

    def second_difference(self) -> HilbertSeq:
        return self.delta2_h if self.delta2_h is not None else difference(self.delta_h, 1)

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, HilbertSeq):
                v = v.to_json()
            if v is not None:
                out[f.name] = v
        return out

    @classmethod
    def from_json(cls, obj) -> "DiagnosisInput":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise InputError("diagnosis input must be a JSON object")
        known = {f.name for f in fields(cls)}
        extra = set(obj) - known
        if extra:
            raise InputError(f"unknown diagnosis fields: {sorted(extra)}")
        for key in ("ambient_n", "delta_h"):
            if key not in obj:
                raise InputError(f"diagnosis input needs {key!r}")
        d2 = obj.get("delta2_h")
        return cls(
            ambient_n=int(obj["ambient_n"]),
            delta_h=HilbertSeq.from_json(obj["delta_h"]),
            delta2_h=HilbertSeq.from_json(d2) if d2 is not None else None,
            r2=obj.get("r2"),
            r3=obj.get("r3"),
            upp=_tri(obj.get("upp")),
            wlp=_tri(obj.get("wlp")),
            h1_vanishes=_tri(obj.get("h1_vanishes")),
            reduced=_tri(obj.get("reduced")),
        )


def _value(s: HilbertSeq, t: int) -> Optional[int]:
    try:
        return s[t]
    except IndexError:
        return None


def find_flats(delta_h: HilbertSeq) -> list[tuple[int, int]]:
    """All (d, s) with d >= 1 and delta_h[d] = delta_h[d+1] = s > 0."""
    s = as_seq(delta_h)
    top = len(s.values) - 1 if s.tail is None else len(s.values)
    out = []
    for d in range(1, top):
        a, b = s[d], s[d + 1]
        if a == b and a > 0:
            out.append((d, a))
    return out


@dataclass(frozen=True)
class DecreasingType:
    ok: bool
    first_drop: Optional[int] = None
    violation: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "first_drop": self.first_drop, "violation": self.violation}


def decreasing_type_check(delta_h: HilbertSeq) -> DecreasingType:
    """Once the h-vector strictly drops, it keeps strictly dropping until 0.

    Values past the stored range are read as 0.
    """
    vals = list(as_seq(delta_h).values) + [0]
    drop = next((t for t in range(len(vals) - 1) if vals[t] > vals[t + 1]), None)
    if drop is None:
        return DecreasingType(True)
    for t in range(drop, len(vals) - 1):
        if vals[t] <= 0:
            break
        if not vals[t] > vals[t + 1]:
            return DecreasingType(False, drop, t)
    return DecreasingType(True, drop)


@dataclass
class RuleResult:
    rule: str
    name: str
    hypotheses: list[tuple[str, Optional[bool]]]
    conclusions: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    subsumed_by: Optional[str] = None

    @property
    def holds(self) -> bool:
        return all(h is True for _, h in self.hypotheses)

    @property
    def status(self) -> str:
        if any(h is False for _, h in self.hypotheses):
            return "fails"
        if any(h is None for _, h in self.hypotheses):
            return "not evaluable"
        if self.subsumed_by:
            return "subsumed"
        return "fires"

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "name": self.name,
            "status": self.status,
            "subsumed_by": self.subsumed_by,
            "hypotheses": [{"text": t, "holds": h} for t, h in self.hypotheses],
            "conclusions": self.conclusions if self.holds else [],
            "notes": self.notes if self.holds else [],
        }


@dataclass
class FlatDiagnosis:
    d: int
    s: int
    kind: str  # "delta" or "delta2"
    maximal_growth: bool
    rules: list[RuleResult]

    @property
    def fired(self) -> list[str]:
        return [r.rule for r in self.rules if r.status == "fires"]

    def conclusions(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for r in self.rules:
            if r.holds:
                for c in r.conclusions:
                    out.setdefault(c, []).append(r.rule)
        return {c: out[c] for c in CONCLUSIONS if c in out}

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "s": self.s,
            "difference": self.kind,
            "maximal_growth": self.maximal_growth,
            "fired": self.fired,
            "conclusions": self.conclusions(),
            "rules": [r.to_json() for r in self.rules],
        }


@dataclass
class DiagnosisReport:
    input: DiagnosisInput
    flats: list[FlatDiagnosis]
    second_difference_flats: list[FlatDiagnosis]
    global_rules: list[RuleResult]
    warnings: list[str]

    def fired(self) -> set[str]:
        out = set()
        for f in self.flats + self.second_difference_flats:
            out.update(f.fired)
        out.update(r.rule for r in self.global_rules if r.status == "fires")
        return out

    def flat(self, d: int) -> FlatDiagnosis:
        return next(f for f in self.flats if f.d == d)

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "flats": [f.to_json() for f in self.flats],
            "second_difference_flats": [f.to_json() for f in self.second_difference_flats],
            "global": [r.to_json() for r in self.global_rules],
            "warnings": list(self.warnings),
        }

    def render(self) -> str:
        inp = self.input
        lines = [f"ambient P^{inp.ambient_n - 1}; delta h = {list(inp.delta_h.values)}"]
        if not self.flats and not self.second_difference_flats:
            lines.append("no flats")
        for f in self.flats:
            lines.append(f"flat of delta h at d = {f.d}, s = {f.s}" + (" (maximal growth)" if f.maximal_growth else ""))
            for r in f.rules:
                lines.append(f"  {r.rule} {r.name}: {r.status}" + (f" by {r.subsumed_by}" if r.subsumed_by else ""))
            for c, rules in f.conclusions().items():
                lines.append(f"    => {_spell(c, f.d, f.s)}  [{', '.join(rules)}]")
        # runs of second-difference flats with identical verdicts print as one line
        runs: list[list[FlatDiagnosis]] = []
        for f in self.second_difference_flats:
            key = (f.s, tuple(r.status for r in f.rules))
            prev = runs[-1][-1] if runs else None
            if prev is not None and prev.d + 1 == f.d and (prev.s, tuple(r.status for r in prev.rules)) == key and not f.fired:
                runs[-1].append(f)
            else:
                runs.append([f])
        for run in runs:
            f = run[0]
            ds = f"d = {f.d}" if len(run) == 1 else f"d = {f.d}..{run[-1].d}"
            verdicts = ", ".join(f"{r.rule} {r.status}" for r in f.rules)
            lines.append(f"flat of delta^2 h at {ds}, s = {f.s}: {verdicts}")
            for c, rules in f.conclusions().items():
                lines.append(f"    => {_spell(c, f.d, f.s)}  [{', '.join(rules)}]")
        for r in self.global_rules:
            lines.append(f"{r.rule} {r.name}: {r.status}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _spell(c: str, d: int, s: int) -> str:
    return {
        "curve-of-degree-s": f"curve of degree {s}",
        "d-regular": f"{d}-regular",
        "2-dim-scheme-of-degree-s": f"two-dimensional scheme of degree {s}",
        "strictly-decreasing-after-d+1": f"delta h strictly decreasing from degree {d + 1}",
    }.get(c, c)


def _gt(a: Optional[int], b: Optional[int]) -> Optional[bool]:
    if a is None or b is None:
        return None
    return a > b


def _delta_rules(inp: DiagnosisInput, d: int, s: int, warnings: list[str]) -> list[RuleResult]:
    n = inp.ambient_n
    d_ge_s = d >= s
    d_gt_r2 = _gt(d, inp.r2)
    # UPP is only defined for reduced sets, so it supplies the reducedness hypothesis
    reduced = True if inp.upp else inp.reduced
    h1 = inp.h1_vanishes is True
    rules = []

    r1 = RuleResult("R1", "plane common factor", [("plane (n = 3)", n == 3), ("d >= s", d_ge_s)],
                    ["curve-of-degree-s"], [UNSTATED])
    if inp.reduced:
        r1.conclusions.append("reduced")
    rules.append(r1)

    rules.append(RuleResult("R2", "reduced, d >= s", [("d >= s", d_ge_s), ("Z reduced", reduced)],
                            ["saturated", "curve-of-degree-s", "reduced", "d-regular"], [UNSTATED]))

    r3 = RuleResult("R3", "reduced, d > r2", [("d > r2", d_gt_r2), ("Z reduced", reduced)],
                    ["saturated", "curve-of-degree-s", "d-regular"], [UNSTATED])
    if h1:
        r3.conclusions.append("reduced")
    rules.append(r3)

    rules.append(RuleResult("R4", "UPP, d >= s", [("d >= s", d_ge_s), ("Z has UPP", inp.upp)],
                            ["saturated", "curve-of-degree-s", "reduced", "d-regular",
                             "unmixed", "irreducible", "Z-contained-in-C"]))

    r5 = RuleResult("R5", "UPP, d > r2", [("d > r2", d_gt_r2), ("Z has UPP", inp.upp)],
                    ["saturated", "curve-of-degree-s", "d-regular", "unmixed", "Z-contained-in-C"])
    if h1:
        r5.conclusions.append("reduced")
    rules.append(r5)

    a, b = _value(inp.delta_h, d + 1), _value(inp.delta_h, d + 2)
    r6 = RuleResult("R6", "decreasing continuation",
                    [("Z has UPP", inp.upp), ("d >= s", d_ge_s), ("delta h(d+1) > delta h(d+2)", _gt(a, b))],
                    ["strictly-decreasing-after-d+1"])
    rules.append(r6)
    if r6.holds:
        vals = list(inp.delta_h.values)
        for t in range(d + 1, len(vals) - 1):
            if vals[t] > 0 and not vals[t] > vals[t + 1]:
                warnings.append(
                    f"flat d = {d}: delta h fails to decrease strictly at degree {t}; "
                    "no set with UPP has this h-vector"
                )
                break

    by_id = {r.rule: r for r in rules}
    for strong, weak in SUBSUMES.items():
        if by_id[strong].holds and by_id[weak].holds:
            by_id[weak].subsumed_by = strong

    if d_ge_s and inp.r2 is not None and not d > inp.r2:
        warnings.append(
            f"flat d = {d}, s = {s}: d >= s should force d > r2, but r2 = {inp.r2}; inputs are inconsistent"
        )
    return rules


def _delta2_rules(inp: DiagnosisInput, d: int, s: int) -> list[RuleResult]:
    n = inp.ambient_n
    return [
        RuleResult(
            "R7",
            "surface from second difference",
            [("n > 3", n > 3), ("WLP", inp.wlp), ("r2 > d", _gt(inp.r2, d)), ("d > r3", _gt(d, inp.r3))],
            ["saturated", "2-dim-scheme-of-degree-s", "d-regular"],
        )
    ]


def _maximal(seq: HilbertSeq, d: int, s: int) -> bool:
    return s > 0 and growth(s, d) == s


def diagnose(inp: DiagnosisInput) -> DiagnosisReport:
    if inp.ambient_n < 2:
        raise DomainError("ambient_n counts variables and must be >= 2")
    warnings: list[str] = []
    if inp.upp and inp.reduced is False:
        warnings.append("UPP is defined for reduced sets of points, but reduced = false")
    flats = [
        FlatDiagnosis(d, s, "delta", _maximal(inp.delta_h, d, s), _delta_rules(inp, d, s, warnings))
        for d, s in find_flats(inp.delta_h)
    ]
    d2 = inp.second_difference()
    flats2 = [
        FlatDiagnosis(d, s, "delta2", _maximal(d2, d, s), _delta2_rules(inp, d, s))
        for d, s in find_flats(d2)
    ]
    dec = decreasing_type_check(inp.delta_h)
    r8 = RuleResult("R8", "plane UPP implies decreasing type",
                    [("plane (n = 3)", inp.ambient_n == 3), ("Z has UPP", inp.upp)])
    if r8.holds and not dec:
        warnings.append(
            f"delta h is not of decreasing type (drop at {dec.first_drop}, repeat at {dec.violation}); "
            "no plane set with UPP has this h-vector"
        )
    return DiagnosisReport(inp, flats, flats2, [r8], warnings)
