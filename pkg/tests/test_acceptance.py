"""Acceptance criteria, one marker per criterion.

The terminal summary prints a PASS/FAIL line for each criterion number.
"""

import json
import random
from pathlib import Path

import pytest

from hilbgeom import HilbertSeq
from hilbgeom import monomial as mono
from hilbgeom.basis import dim_r, monomials
from hilbgeom.diagnose import DiagnosisInput, diagnose
from hilbgeom.fixtures import get_fixture
from hilbgeom.gotzmann import gotzmann_polynomial, persistence_value
from hilbgeom.inputs import random_forms
from hilbgeom.macaulay import binomial_expansion, growth, is_o_sequence
from hilbgeom.modla import (
    GeneratorSource,
    PointSource,
    RankEngineConfig,
    quotient_by_generic_linears,
    reduction_number,
    slice_dim,
    truncated_ideal_polynomial,
    wlp_test,
)
from hilbgeom.modla.forms import Form
from hilbgeom.points import PointSet, degree_forms, gcd_of_forms, h_vector, random_points, upp_test
from hilbgeom.seqcore import ci_h_vector, difference, partial_sum

from oracles import all_binomial_representations, count_standard

GOLDEN = Path(__file__).parent / "golden"
TWO_RUNS = RankEngineConfig(confirmations=2)


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# 1


@criterion(1, "Macaulay arithmetic")
def test_growth_of_76():
    assert growth(76, 5) == 111


@criterion(1, "Macaulay arithmetic")
@pytest.mark.parametrize("i", range(1, 7))
def test_binomial_expansions_unique(i):
    for c in range(1, 201):
        reps = all_binomial_representations(c, i)
        assert reps == [binomial_expansion(c, i).terms]


@criterion(1, "Macaulay arithmetic")
def test_growth_fixes_small_values():
    assert all(growth(s, d) == s for d in range(1, 31) for s in range(1, d + 1))


# 2


@criterion(2, "O-sequence verdicts")
def test_o_sequence_verdicts():
    assert is_o_sequence((1, 3, 6, 7, 9, 9)).ok
    # read as an h-vector, its own difference is the sequence below
    assert difference((1, 3, 6, 7, 9, 9), 1).values[:5] == (1, 2, 3, 1, 2)
    v = is_o_sequence((1, 2, 3, 1, 2))
    assert not v.ok
    # the step from value 1 in degree 3 to value 2 in degree 4
    assert v.violation == 3


# 3


@pytest.fixture(scope="module")
def ci334():
    return GeneratorSource(4, random_forms(4, (3, 3, 4), random.Random(2024)))


@criterion(3, "CI (3,3,4) reduction numbers")
@pytest.mark.parametrize(
    "m, hilbert, r",
    [(1, (1, 3, 6, 8, 8, 6, 3, 1), 7), (2, (1, 2, 3, 2), 3), (3, (1, 1, 1), 2)],
)
def test_ci334(ci334, m, hilbert, r):
    q = quotient_by_generic_linears(ci334, m, 10, TWO_RUNS)
    assert q == HilbertSeq(hilbert, "zero")
    assert reduction_number(ci334, m, TWO_RUNS) == r


# 4


@criterion(4, "CI (5,6) table by two routes")
def test_cd_table():
    by_formula = partial_sum(ci_h_vector((5, 6)))
    assert by_formula == HilbertSeq((1, 3, 6, 10, 15, 20, 24, 27, 29, 30), "constant")
    src = GeneratorSource(4, [Form.parse("x^4*t - y^4*z", 4), Form.parse("z^6 - x*t^5", 4)])
    h = tuple(dim_r(4, t) - slice_dim(src, t, TWO_RUNS) for t in range(16))
    by_rank = difference(HilbertSeq(h), 1)
    assert by_rank.values == by_formula.upto(15)


# 5


@pytest.fixture(scope="module")
def J():
    return mono.minimalize([(3, 0, 0), (2, 2, 0), (2, 1, 2), (0, 0, 5)] + list(monomials(3, 7)), 3)


@pytest.fixture(scope="module")
def distraction(J):
    return mono.distraction_points(J)


@criterion(5, "WLP-in-families pipeline")
def test_J_hilbert_and_socle(J):
    assert mono.hilbert_function(J, 8).values == (1, 3, 6, 9, 11, 11, 11, 0, 0)
    socle = mono.socle_degrees(J)
    witness = next(w for d, w in socle if d == 4)
    assert witness == (2, 1, 1)
    # x^2yz is outside J but every variable multiple lands in J
    assert not J.contains(witness)
    assert all(J.contains(tuple(a + (k == i) for k, a in enumerate(witness))) for i in range(3))


@criterion(5, "WLP-in-families pipeline")
def test_distraction_points(distraction):
    Z, _ = distraction
    assert len(Z) == 52
    assert h_vector(Z, TWO_RUNS).values == (1, 3, 6, 9, 11, 11, 11)


@criterion(5, "WLP-in-families pipeline")
def test_wlp_fails_at_4(distraction):
    rep = wlp_test(PointSource(distraction[0]), 1, config=TWO_RUNS)
    assert not rep.passed
    [step] = rep.failures()
    assert (step.degree, step.dim_source, step.dim_target) == (4, 11, 11)
    assert step.rank < 11


@criterion(5, "WLP-in-families pipeline")
def test_r2_of_distraction(distraction):
    Z, lifted = distraction
    assert reduction_number(PointSource(Z), 2, TWO_RUNS) == 5
    assert reduction_number(GeneratorSource(4, lifted), 2, TWO_RUNS) == 5


@criterion(5, "WLP-in-families pipeline")
def test_truncation_at_5(distraction):
    fit = truncated_ideal_polynomial(PointSource(distraction[0]), 5, config=TWO_RUNS)
    assert fit.dimension == 1 and fit.leading_coefficient == 10
    fit2 = truncated_ideal_polynomial(GeneratorSource(4, distraction[1]), 5, config=TWO_RUNS)
    assert fit2.polynomial == fit.polynomial


# 6


@criterion(6, "Lex ideal Betti diagram")
def test_lex_betti():
    diagram = mono.ek_betti(mono.lex_ideal((1, 3, 6, 9, 11, 11, 11, 0), 3))
    printed = """\
total:    1   18   31   14
--------------------------
    0:    1    -    -    -
    1:    -    -    -    -
    2:    -    1    -    -
    3:    -    1    1    -
    4:    -    2    4    2
    5:    -    2    3    1
    6:    -   12   23   11"""
    assert diagram.totals == (1, 18, 31, 14)
    assert diagram.render() == printed


# 7


@criterion(7, "Sixteen general points are not maximal growth")
@pytest.mark.parametrize("seed", range(5))
def test_sixteen_points(seed):
    Z = random_points(16, 3, random.Random(seed))
    hv = h_vector(Z, TWO_RUNS)
    assert hv.upto(4) == (1, 3, 6, 6, 0)
    assert growth(hv[3], 3) == 7
    assert hv[4] != 7


# 8


@criterion(8, "Points on a conic share the conic")
def test_conic_gcd():
    Z = PointSet(2, tuple((1, k, k * k) for k in range(9)) + ((0, 0, 1),))
    hv = h_vector(Z, TWO_RUNS)
    assert hv.values == (1, 2, 2, 2, 2, 1)
    assert hv[2] == hv[3] == 2
    bases = {d: degree_forms(Z, d, TWO_RUNS) for d in (2, 3)}
    for forms in (bases[2], bases[3], bases[2] + bases[3]):
        res = gcd_of_forms(forms)
        assert res.degree == 2
        assert str(res.gcd) == "x*z - y^2"
        for q, f in zip(res.quotients, forms):
            assert q * res.gcd == f


# 9


DIAGNOSE_CASES = [
    ("not_decreasing", {"R5"}, (9, 29)),
    ("two_sextics", {"R5"}, (17, 32)),
    ("cant_extend", set(), None),
    ("334", set(), None),
]


@criterion(9, "Diagnosis fixtures")
@pytest.mark.parametrize("name, fired, flat", DIAGNOSE_CASES, ids=[c[0] for c in DIAGNOSE_CASES])
def test_diagnosis(name, fired, flat):
    inp = DiagnosisInput.from_json(get_fixture(f"diagnose_{name}").input)
    report = diagnose(inp)
    assert report.fired() == fired
    if flat is not None:
        d, s = flat
        assert report.flat(d).fired == ["R5"]
        assert report.flat(d).s == s
        assert "curve-of-degree-s" in report.flat(d).conclusions()
    assert report.to_json() == json.loads((GOLDEN / f"diagnose_{name}.json").read_text())


# 10


@criterion(10, "UPP brute force")
def test_upp_general_points():
    assert upp_test(random_points(5, 2, random.Random(17)), mode="exhaustive", config=TWO_RUNS).passed


@criterion(10, "UPP brute force")
def test_upp_collinear_triple():
    Z = PointSet(2, ((1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 0, 1)))
    v = upp_test(Z, config=TWO_RUNS)
    assert not v.passed and v.witness == (0, 1, 2)


# 11


@criterion(11, "Property suites")
def test_difference_partial_sum_round_trips():
    rng = random.Random(11)
    for _ in range(1000):
        vals = tuple(rng.randint(0, 100) for _ in range(rng.randint(1, 20)))
        s = HilbertSeq(vals, "zero")
        assert difference(partial_sum(s)) == s
        assert partial_sum(difference(s)).upto(len(vals) + 3) == s.upto(len(vals) + 3)


@criterion(11, "Property suites")
@pytest.mark.parametrize("seed", range(50))
def test_monomial_count_matches_rank_engine(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    gens = {tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))}
    gens.discard((0,) * n)
    if not gens:
        gens = {(1,) + (0,) * (n - 1)}
    ideal = mono.minimalize(gens, n)
    src = GeneratorSource.from_monomial_ideal(ideal)
    for t in range(7):
        expected = count_standard(ideal.gens, n, t)
        assert mono.hilbert_function(ideal, t)[t] == expected
        assert dim_r(n, t) - slice_dim(src, t) == expected


@criterion(11, "Property suites")
@pytest.mark.parametrize("seed", range(30))
def test_distraction_preserves_h_vector(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 3)
    gens = [tuple(rng.randint(1, 4) if j == i else 0 for j in range(n)) for i in range(n)]
    gens += [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(0, 3))]
    ideal = mono.minimalize([g for g in gens if any(g)], n)
    Z, _ = mono.distraction_points(ideal)
    expected = mono.hilbert_function(ideal, ideal.top_degree() + 1)
    assert h_vector(Z).values == HilbertSeq(expected.values, "zero").values


@criterion(11, "Property suites")
@pytest.mark.parametrize("seed", range(50))
def test_gotzmann_polynomial_matches_persistence(seed):
    rng = random.Random(5000 + seed)
    c, d = rng.randint(1, 500), rng.randint(1, 10)
    poly = gotzmann_polynomial(c, d).polynomial
    assert [poly(d + l) for l in range(11)] == [persistence_value(c, d, l) for l in range(11)]
