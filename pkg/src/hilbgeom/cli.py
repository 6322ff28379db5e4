"""hilbgeom command line.

Every command prints a short human-readable answer, or JSON with --json.
Exit codes: 0 success, 2 malformed input, 3 mathematical-domain error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from hilbgeom import diagnose as dg
from hilbgeom import monomial as mono
from hilbgeom import points as pts
from hilbgeom.errors import HilbgeomError, InputError
from hilbgeom.fixtures import get_fixture, load_fixtures, run_fixture
from hilbgeom.gotzmann import gotzmann_polynomial
from hilbgeom.inputs import load_ideal, load_points, parse_sequence, read_json
from hilbgeom.macaulay import (
    binomial_expansion,
    growth,
    is_differentiable_o_sequence,
    is_o_sequence,
    maximal_growth_degrees,
)
from hilbgeom.modla import (
    RankEngineConfig,
    initial_degree,
    quotient_by_generic_linears,
    reduction_number,
    slp_test,
    truncated_ideal_polynomial,
    wlp_test,
)
from hilbgeom.modla.field import DEFAULT_PRIME
from hilbgeom.monomial import MonomialIdeal
from hilbgeom.seqcore import HilbertSeq


class Output:
    """Result of one command: a JSON-able payload and its text rendering."""

    def __init__(self, payload, text: str):
        self.payload = payload
        self.text = text


def _config(args) -> RankEngineConfig:
    return RankEngineConfig(prime=args.prime, seed=args.seed, confirmations=args.confirmations, cap=args.cap)


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _ideal(args):
    return load_ideal(read_json(args.input), _rng(args))


def _monomial(args) -> MonomialIdeal:
    return MonomialIdeal.from_json(read_json(args.input))


# macaulay


def cmd_macaulay_expand(args):
    e = binomial_expansion(args.c, args.i)
    return Output({"c": args.c, "i": args.i, "terms": [list(t) for t in e.terms]}, f"{args.c} = {e}")


def cmd_macaulay_growth(args):
    g = growth(args.c, args.i)
    return Output({"c": args.c, "i": args.i, "growth": g}, str(g))


def cmd_macaulay_check(args):
    seq = parse_sequence(args.seq, args.tail)
    v = is_differentiable_o_sequence(seq) if args.differentiable else is_o_sequence(seq)
    payload = v.to_json()
    text = "true" if v.ok else f"false: {v.reason}"
    if v.ok and not args.differentiable:
        flats = [g.to_json() for g in maximal_growth_degrees(seq)]
        payload["growth"] = flats
        maxi = [g["degree"] for g in flats if g["is_maximal"]]
        if maxi:
            text += f"\nmaximal growth from degrees {maxi}"
    return Output(payload, text)


# gotzmann


def cmd_gotzmann_poly(args):
    gp = gotzmann_polynomial(args.c, args.d)
    text = f"{gp.polynomial}\ndimension {gp.dimension}, degree {gp.degree_of_scheme}"
    return Output(gp.to_json(), text)


# mono


def cmd_mono_hf(args):
    ideal = _monomial(args)
    if args.tmax is None and not ideal.is_artinian():
        raise HilbgeomError("ideal is not Artinian; pass --tmax")
    t_max = args.tmax if args.tmax is not None else ideal.top_degree() + 1
    hf = mono.hilbert_function(ideal, t_max)
    if args.tmax is None:
        hf = HilbertSeq(hf.values, "zero")
    return Output(hf.to_json(), " ".join(map(str, hf.values)))


def cmd_mono_lex(args):
    seq = parse_sequence(args.seq, "zero")
    ideal = mono.lex_ideal(seq, args.n)
    return Output(ideal.to_json(), "\n".join(str(list(g)) for g in ideal.gens))


def cmd_mono_betti(args):
    obj = read_json(args.input)
    if isinstance(obj, dict) and "hilbert" in obj:
        ideal = mono.lex_ideal(parse_sequence([",".join(map(str, obj["hilbert"]))], "zero"), int(obj["n"]))
    else:
        ideal = MonomialIdeal.from_json(obj)
    diagram = mono.ek_betti(ideal)
    return Output(diagram.to_json(), diagram.render())


def cmd_mono_socle(args):
    socle = mono.socle_degrees(_monomial(args))
    payload = [{"degree": d, "witness": list(w)} for d, w in socle]
    text = "\n".join(f"degree {d}: {list(w)}" for d, w in socle) or "empty socle"
    return Output(payload, text)


def cmd_mono_lift(args):
    Z, lifted = mono.distraction_points(_monomial(args))
    payload = {**Z.to_json(), "lifted": [str(f) for f in lifted]}
    text = f"{len(Z)} points in P^{Z.ambient}\n" + "\n".join(str(f) for f in lifted)
    return Output(payload, text)


# rank engine


def cmd_rnum(args):
    src = _ideal(args)
    config = _config(args)
    r = reduction_number(src, args.m, config)
    payload = {"m": args.m, "reduction_number": r}
    text = str(r)
    if args.tmax is not None:
        q = quotient_by_generic_linears(src, args.m, args.tmax, config)
        payload["hilbert"] = q.to_json()
        text += "\n" + " ".join(map(str, q.values))
    return Output(payload, text)


def _lefschetz_text(rep) -> str:
    lines = [f"{rep.to_json()['verdict']}  hilbert {' '.join(map(str, rep.hilbert))}"]
    for s in rep.steps:
        if s.dim_source and s.dim_target:
            mark = "ok" if s.ok else "FAILS"
            lines.append(f"  t={s.degree}: {s.dim_source} -> {s.dim_target} rank {s.rank} {mark}")
    return "\n".join(lines)


def cmd_wlp(args):
    rep = wlp_test(_ideal(args), args.m, args.tmax, _config(args))
    return Output(rep.to_json(), _lefschetz_text(rep))


def cmd_slp(args):
    rep = slp_test(_ideal(args), args.m, args.degree, args.tmax, _config(args))
    return Output(rep.to_json(), _lefschetz_text(rep))


def cmd_truncpoly(args):
    t_range = range(args.range[0], args.range[1] + 1) if args.range else None
    fit = truncated_ideal_polynomial(_ideal(args), args.d, t_range, _config(args))
    text = f"{fit.polynomial}\ndimension {fit.dimension}, degree {fit.scheme_degree}, from t = {fit.fit_from}"
    return Output(fit.to_json(), text)


def cmd_alpha(args):
    a = initial_degree(_ideal(args), _config(args))
    return Output({"initial_degree": a}, str(a))


# points


def _points(args):
    return load_points(read_json(args.input), _rng(args))


def cmd_points_hf(args):
    Z = _points(args)
    hf = pts.hilbert_function(Z, args.tmax, _config(args))
    hv = pts.h_vector(Z, _config(args))
    payload = {"hilbert": hf.to_json(), "h_vector": hv.to_json()}
    return Output(payload, f"h   {' '.join(map(str, hf.values))}\nΔh  {' '.join(map(str, hv.values))}")


def cmd_points_upp(args):
    v = pts.upp_test(_points(args), args.mode, args.samples, args.cap_points, _config(args), _rng(args))
    text = "PASS" if v.passed else f"FAIL witness {list(v.witness)}: {list(v.witness_hilbert)} != {list(v.expected_hilbert)}"
    return Output(v.to_json(), text)


def cmd_points_forms(args):
    forms = pts.degree_forms(_points(args), args.d, _config(args))
    return Output({"d": args.d, "forms": [f.to_json() for f in forms]}, "\n".join(map(str, forms)) or "none")


def cmd_points_gcd(args):
    Z = _points(args)
    config = _config(args)
    forms = [f for d in args.degrees for f in pts.degree_forms(Z, d, config)]
    res = pts.gcd_of_forms(forms)
    return Output(res.to_json(), f"degree {res.degree}: {res.gcd}")


# diagnose and fixtures


def cmd_diagnose(args):
    report = dg.diagnose(dg.DiagnosisInput.from_json(read_json(args.input)))
    return Output(report.to_json(), report.render())


def cmd_fixtures_list(args):
    fxs = load_fixtures()
    payload = [{"name": f.name, "kind": f.kind, "source": f.source, "anchor": f.anchor} for f in fxs]
    return Output(payload, "\n".join(f"{f.name:<26}{f.source:<10}{f.anchor}" for f in fxs))


def cmd_fixtures_run(args):
    fxs = [get_fixture(n) for n in args.only] if args.only else load_fixtures()
    results = [run_fixture(f, _config(args)) for f in fxs]
    out = Output([r.to_json() for r in results], "\n".join(r.line() for r in results))
    out.failed = any(not r.passed for r in results)
    return out


def _global_options(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("engine options")
    g.add_argument("--prime", type=int, default=d(DEFAULT_PRIME), help="prime in [2^61, 2^63)")
    g.add_argument("--seed", type=int, default=d(0))
    g.add_argument("--confirmations", type=int, default=d(2), help="independent runs that must agree")
    g.add_argument("--tmax", type=int, default=d(None), help="highest degree to compute")
    g.add_argument("--cap", type=int, default=d(40), help="degree cap for reduction numbers and Lefschetz tests")
    g.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbgeom", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(parent, name: str, fn: Callable, help: str):
        p = parent.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    def group(name: str, help: str):
        p = sub.add_parser(name, help=help)
        return p.add_subparsers(dest="action", required=True)

    mac = group("macaulay", "binomial expansions, growth bounds, O-sequences")
    p = add(mac, "expand", cmd_macaulay_expand, "i-binomial expansion of c")
    p.add_argument("c", type=int)
    p.add_argument("i", type=int)
    p = add(mac, "growth", cmd_macaulay_growth, "Macaulay bound c^<i>")
    p.add_argument("c", type=int)
    p.add_argument("i", type=int)
    p = add(mac, "check", cmd_macaulay_check, "is the sequence an O-sequence")
    p.add_argument("seq", nargs="+")
    p.add_argument("--tail", choices=["none", "zero", "constant"], default="none")
    p.add_argument("--differentiable", action="store_true")

    got = group("gotzmann", "persistence polynomials")
    p = add(got, "poly", cmd_gotzmann_poly, "Hilbert polynomial forced by maximal growth of c in degree d")
    p.add_argument("c", type=int)
    p.add_argument("d", type=int)

    mo = group("mono", "monomial ideals")
    for name, fn, help in [
        ("hf", cmd_mono_hf, "Hilbert function of R/I"),
        ("betti", cmd_mono_betti, "Eliahou-Kervaire Betti diagram of a stable ideal"),
        ("socle", cmd_mono_socle, "socle degrees of an Artinian quotient"),
        ("lift", cmd_mono_lift, "distraction to a reduced set of points"),
    ]:
        add(mo, name, fn, help).add_argument("input", help="JSON file, - for stdin")
    p = add(mo, "lex", cmd_mono_lex, "lex-segment ideal with the given Hilbert function")
    p.add_argument("seq", nargs="+")
    p.add_argument("--n", type=int, required=True, help="number of variables")

    p = add(sub, "rnum", cmd_rnum, "reduction number r_m")
    p.add_argument("input")
    p.add_argument("--m", type=int, required=True)
    p = add(sub, "wlp", cmd_wlp, "weak Lefschetz test after m general linear sections")
    p.add_argument("input")
    p.add_argument("--m", type=int, default=1)
    p = add(sub, "slp", cmd_slp, "multiplication by a general form of given degree")
    p.add_argument("input")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--degree", type=int, required=True)
    p = add(sub, "truncpoly", cmd_truncpoly, "Hilbert polynomial of the ideal generated in degrees <= d")
    p.add_argument("input")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--range", type=int, nargs=2, metavar=("FROM", "TO"))
    p = add(sub, "alpha", cmd_alpha, "initial degree")
    p.add_argument("input")

    po = group("points", "finite point sets")
    add(po, "hf", cmd_points_hf, "Hilbert function and h-vector").add_argument("input")
    p = add(po, "upp", cmd_points_upp, "uniform position test")
    p.add_argument("input")
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--cap-points", type=int, default=12, help="largest set tested exhaustively")
    p = add(po, "forms", cmd_points_forms, "basis of the ideal in degree d")
    p.add_argument("input")
    p.add_argument("--d", type=int, required=True)
    p = add(po, "gcd", cmd_points_gcd, "common factor of the ideal in the given degrees")
    p.add_argument("input")
    p.add_argument("--degrees", type=int, nargs="+", required=True)

    add(sub, "diagnose", cmd_diagnose, "apply the flat theorems to an h-vector").add_argument("input")

    fx = group("fixtures", "bundled worked examples")
    add(fx, "list", cmd_fixtures_list, "list fixtures")
    p = add(fx, "run", cmd_fixtures_run, "re-derive fixtures")
    p.add_argument("--only", nargs="+", metavar="NAME")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.fn(args)
    except InputError as exc:
        print(f"hilbgeom: input error: {exc}", file=sys.stderr)
        return 2
    except HilbgeomError as exc:
        print(f"hilbgeom: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(out.payload, indent=2))
    else:
        print(out.text)
    return 1 if getattr(out, "failed", False) else 0


if __name__ == "__main__":
    sys.exit(main())
