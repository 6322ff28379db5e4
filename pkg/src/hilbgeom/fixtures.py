"""Bundled worked examples and the runner that re-derives them."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from hilbgeom import diagnose as dg
from hilbgeom import monomial as mono
from hilbgeom import points as pts
from hilbgeom.basis import dim_r
from hilbgeom.errors import InputError
from hilbgeom.inputs import load_ideal, load_points
from hilbgeom.macaulay import growth, is_differentiable_o_sequence, is_o_sequence
from hilbgeom.modla import (
    PointSource,
    GeneratorSource,
    RankEngineConfig,
    quotient_by_generic_linears,
    reduction_number,
    slice_dim,
    truncated_ideal_polynomial,
    wlp_test,
)
from hilbgeom.seqcore import HilbertSeq, ci_h_vector, difference, partial_sum

SOURCES = ("published", "derived", "trivial")


@dataclass(frozen=True)
class Fixture:
    name: str
    anchor: str
    source: str
    kind: str
    input: dict
    expected: dict

    @classmethod
    def from_json(cls, obj) -> "Fixture":
        try:
            fx = cls(obj["name"], obj["anchor"], obj["source"], obj["kind"], obj["input"], obj["expected"])
        except KeyError as exc:
            raise InputError(f"fixture is missing {exc}") from None
        if fx.source not in SOURCES:
            raise InputError(f"fixture {fx.name}: unknown source {fx.source!r}")
        if fx.kind not in RUNNERS:
            raise InputError(f"fixture {fx.name}: unknown kind {fx.kind!r}")
        return fx


@dataclass
class FixtureResult:
    name: str
    expected: dict
    got: dict
    summary: str = ""
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": "PASS" if self.passed else "FAIL",
            "summary": self.summary,
            "mismatches": self.mismatches,
            "got": self.got,
        }

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"{self.name}: {verdict}"
        if self.summary:
            out += f" ({self.summary})"
        for m in self.mismatches:
            out += f"\n  {m}"
        return out


def load_fixtures() -> list[Fixture]:
    folder = resources.files("hilbgeom") / "data" / "fixtures"
    out = []
    for entry in sorted(folder.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out.append(Fixture.from_json(json.loads(entry.read_text())))
    return out


def get_fixture(name: str) -> Fixture:
    for fx in load_fixtures():
        if fx.name == name:
            return fx
    raise InputError(f"no fixture named {name!r}")


def _growth(inp, config):
    g = growth(inp["c"], inp["i"])
    return {"growth": g}, f"{inp['c']}^<{inp['i']}> = {g}"


def _o_sequence(inp, config):
    v = is_o_sequence(inp["sequence"])
    got = {"ok": v.ok, "violation": v.violation,
           "differentiable": is_differentiable_o_sequence(inp["sequence"]).ok}
    return got, "O-sequence" if v.ok else f"violation at degree {v.violation}"


def _reduction_numbers(inp, config):
    src = load_ideal(inp["ideal"], random.Random(config.seed))
    quotients, r = {}, {}
    for m in (1, 2, 3):
        q = quotient_by_generic_linears(src, m, inp["t_max"], config)
        quotients[str(m)] = list(q.trimmed())
        r[str(m)] = reduction_number(src, m, config)
    summary = ", ".join(f"r{m}={v}" for m, v in r.items())
    return {"quotients": quotients, "r": r}, summary


def _ci_table(inp, config):
    src = load_ideal(inp["ideal"])
    t_max = inp["t_max"]
    h = [dim_r(src.n, t) - slice_dim(src, t, config) for t in range(t_max + 1)]
    by_rank = difference(HilbertSeq(tuple(h)), 1)
    by_formula = partial_sum(ci_h_vector(inp["degrees"]))
    agree = by_rank.values == by_formula.upto(t_max)
    got = {"delta_h": list(by_formula.values), "eventual": by_formula.eventual()}
    if not agree:
        got["rank_route"] = list(by_rank.values)
    return got, f"delta h = {list(by_formula.values)}..., routes agree" if agree else "routes disagree"


def _monomial_pipeline(inp, config):
    n = inp["n"]
    ideal = mono.MonomialIdeal.from_json(inp)
    hf = mono.hilbert_function(ideal, ideal.top_degree() + 1)
    socle = mono.socle_degrees(ideal)
    Z, lifted = mono.distraction_points(ideal)
    psrc = PointSource(Z)
    hv = pts.h_vector(Z, config)
    r2 = reduction_number(psrc, 2, config)
    wlp = wlp_test(psrc, 1, config=config)
    fit = truncated_ideal_polynomial(GeneratorSource(n + 1, lifted), inp["truncate_at"], config=config)
    got = {
        "hilbert": list(hf.trimmed()),
        "socle_degree": min(d for d, _ in socle),
        "points": len(Z),
        "delta_h": list(hv.trimmed()),
        "r2": r2,
        "wlp_failures": [s.degree for s in wlp.failures()],
        "truncation": {"dimension": fit.dimension, "leading": str(fit.leading_coefficient), "degree": fit.scheme_degree},
    }
    summary = f"{len(Z)} points, r2={r2}, WLP fails at {got['wlp_failures']}, truncation {fit.polynomial}"
    return got, summary


def _lex_betti(inp, config):
    ideal = mono.lex_ideal(HilbertSeq(tuple(inp["hilbert"]), "zero"), inp["n"])
    diagram = mono.ek_betti(ideal)
    got = {"totals": list(diagram.totals), "table": diagram.table()}
    return got, "totals " + " ".join(map(str, diagram.totals))


def _general_points(inp, config):
    got = None
    d = inp["degree"]
    for seed in inp["seeds"]:
        Z = pts.random_points(inp["count"], inp["ambient"], random.Random(seed))
        hv = pts.h_vector(Z, config)
        bound = growth(hv[d], d)
        g = {"delta_h": list(hv.trimmed()), "bound": bound, "maximal": bound == hv[d + 1]}
        if got is None:
            g["r2"] = reduction_number(PointSource(Z), 2, config)
            got = g
        elif {k: v for k, v in g.items()} != {k: got[k] for k in g}:
            got = dict(got, unstable_seed=seed)
            break
    return got, f"delta h = {got['delta_h']}, bound {got['bound']} at degree {d}"


def _truncation(inp, config):
    src = load_ideal(inp["ideal"], random.Random(config.seed))
    fit = truncated_ideal_polynomial(src, inp["d"], config=config)
    return {"dimension": fit.dimension, "degree": fit.scheme_degree}, f"Hilbert polynomial {fit.polynomial}"


def _gcd(inp, config):
    Z = load_points(inp)
    hv = pts.h_vector(Z, config)
    flats = [(d, s) for d, s in dg.find_flats(hv) if d >= s]
    degrees, text = {}, None
    for d in inp["degrees"]:
        res = pts.gcd_of_forms(pts.degree_forms(Z, d, config))
        degrees[str(d)] = res.degree
        text = str(res.gcd)
    got = {"delta_h": list(hv.trimmed()), "flat": list(flats[0]) if flats else None, "gcd_degree": degrees, "gcd": text}
    return got, f"gcd {text}"


def _upp(inp, config):
    Z = load_points(inp, random.Random(config.seed))
    v = pts.upp_test(Z, config=config)
    got = {"verdict": "PASS" if v.passed else "FAIL"}
    if not v.passed:
        got["witness"] = list(v.witness)
    return got, f"witness {v.witness}" if v.witness else f"{v.checked} subsets"


def _diagnose(inp, config):
    report = dg.diagnose(dg.DiagnosisInput.from_json(inp))
    got = {"fired": sorted(report.fired())}
    firing = [f for f in report.flats if f.fired]
    if firing:
        f = firing[0]
        got["flat"] = [f.d, f.s]
        got["conclusions"] = list(f.conclusions())
    return got, "fires " + (", ".join(got["fired"]) or "nothing")


RUNNERS = {
    "growth": _growth,
    "o_sequence": _o_sequence,
    "reduction_numbers": _reduction_numbers,
    "ci_table": _ci_table,
    "monomial_pipeline": _monomial_pipeline,
    "lex_betti": _lex_betti,
    "general_points": _general_points,
    "truncation": _truncation,
    "gcd": _gcd,
    "upp": _upp,
    "diagnose": _diagnose,
}


def _compare(expected, got, path=""):
    out = []
    if isinstance(expected, dict) and isinstance(got, dict):
        for k, v in expected.items():
            if k not in got:
                out.append(f"{path}{k}: missing")
            else:
                out.extend(_compare(v, got[k], f"{path}{k}."))
        for k in got:
            if k not in expected and k in ("rank_route", "unstable_seed"):
                out.append(f"{path}{k}: {got[k]}")
        return out
    if expected != got:
        out.append(f"{path.rstrip('.')}: expected {expected!r}, got {got!r}")
    return out


def run_fixture(fx: Fixture, config: RankEngineConfig = RankEngineConfig()) -> FixtureResult:
    got, summary = RUNNERS[fx.kind](fx.input, config)
    return FixtureResult(fx.name, fx.expected, got, summary, _compare(fx.expected, got))
