"""Reading ideals and sequences from JSON payloads.

An ideal payload is one of

    {"points": [[...], ...], "ambient": n}            ideal of a point set
    {"random_points": {"count": 16, "ambient": 3}}    general points
    {"n": 4, "forms": ["x^4*t - y^4*z", {...}, ...]}  explicit generators
    {"n": 4, "random_forms": [3, 3, 4]}               general forms of given degrees
    {"n": 3, "gens": [[2, 0, 0], ...]}                monomial ideal
    {"n": 3, "gens": [...], "lift": true}             points of its distraction

Forms may be strings or ``{"n", "terms"}`` objects.
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from hilbgeom.basis import monomials
from hilbgeom.errors import InputError
from hilbgeom.modla.forms import Form
from hilbgeom.modla.sources import GeneratorSource, PointSource, SliceSource
from hilbgeom.monomial import MonomialIdeal, distraction_points
from hilbgeom.points import PointSet, random_points
from hilbgeom.seqcore import HilbertSeq


def read_json(path: str | Path):
    """Parse a JSON file; errors name the file, line and column."""
    text = Path(path).read_text() if str(path) != "-" else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def random_forms(n: int, degrees: Sequence[int], rng: random.Random, box: int = 100) -> list[Form]:
    """Dense forms with integer coefficients drawn from [-box, box]."""
    out = []
    for d in degrees:
        terms = {e: Fraction(rng.randint(-box, box)) for e in monomials(n, d)}
        out.append(Form(n, d, terms))
    return out


def parse_form(obj, n: int) -> Form:
    if isinstance(obj, str):
        return Form.parse(obj, n)
    f = Form.from_json(obj)
    if f.n != n:
        raise InputError(f"form has {f.n} variables, expected {n}")
    return f


def load_points(obj, rng: random.Random | None = None) -> PointSet:
    if not isinstance(obj, dict):
        raise InputError("a point-set payload must be a JSON object")
    if "random_points" in obj:
        spec = obj["random_points"]
        try:
            count, ambient = int(spec["count"]), int(spec["ambient"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"random_points needs 'count' and 'ambient': {exc}") from None
        return random_points(count, ambient, rng or random.Random(0))
    if "gens" in obj and obj.get("lift"):
        return distraction_points(MonomialIdeal.from_json(obj))[0]
    return PointSet.from_json(obj)


def load_ideal(obj, rng: random.Random | None = None) -> SliceSource:
    if not isinstance(obj, dict):
        raise InputError("an ideal payload must be a JSON object")
    if "points" in obj or "random_points" in obj:
        return PointSource(load_points(obj, rng))
    if "n" not in obj:
        raise InputError("an ideal payload needs 'n' (number of variables) or 'points'")
    n = int(obj["n"])
    if "forms" in obj:
        return GeneratorSource(n, [parse_form(f, n) for f in obj["forms"]])
    if "random_forms" in obj:
        return GeneratorSource(n, random_forms(n, obj["random_forms"], rng or random.Random(0)))
    if "gens" in obj:
        ideal = MonomialIdeal.from_json(obj)
        if obj.get("lift"):
            return PointSource(load_points(obj))
        return GeneratorSource.from_monomial_ideal(ideal)
    raise InputError("an ideal payload needs one of 'points', 'forms', 'random_forms', 'gens'")


def parse_sequence(items: Sequence[str], tail: str | None = None) -> HilbertSeq:
    """Integers from command-line words, separated by spaces and/or commas."""
    words = [w for item in items for w in item.replace(",", " ").split()]
    try:
        values = tuple(int(w) for w in words)
    except ValueError as exc:
        raise InputError(f"not an integer sequence: {exc}") from None
    if tail == "none":
        tail = None
    return HilbertSeq(values, tail)
