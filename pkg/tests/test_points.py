import random
from fractions import Fraction
from itertools import combinations

import pytest

from hilbgeom import DomainError, HilbertSeq
from hilbgeom.errors import InputError
from hilbgeom.inputs import random_forms
from hilbgeom.modla.field import DEFAULT_PRIME as P
from hilbgeom.points import (
    PointSet,
    degree_forms,
    gcd_of_forms,
    h_vector,
    hilbert_function,
    random_points,
    upp_test,
)
from hilbgeom.seqcore import truncate

from oracles import points_hilbert

CONIC = PointSet(2, tuple((1, k, k * k) for k in range(9)) + ((0, 0, 1),))


def test_point_set_validation():
    with pytest.raises(DomainError, match="duplicate"):
        PointSet(1, ((1, 2), (2, 4)))
    with pytest.raises(DomainError):
        PointSet(2, ((0, 0, 0),))
    with pytest.raises(DomainError):
        PointSet(2, ((1, 0),))
    with pytest.raises(InputError):
        PointSet.from_json({"points": [[1, 0]]})


def test_json_round_trip():
    Z = PointSet(2, ((1, Fraction(1, 2), 3), (0, 1, -1)))
    assert PointSet.from_json(Z.to_json()) == Z


@pytest.mark.parametrize("seed, count, ambient", [(0, 5, 2), (1, 9, 2), (2, 8, 3), (3, 12, 3), (4, 6, 4)])
def test_hilbert_function_against_exact_rank(seed, count, ambient):
    Z = random_points(count, ambient, random.Random(seed), box=50)
    hf = hilbert_function(Z)
    for t in range(len(hf.values) + 1):
        assert hf[t] == points_hilbert(Z.points, t)


def test_special_position_against_exact_rank():
    # six points on a conic and one off it
    Z = PointSet(2, tuple((1, k, k * k) for k in range(6)) + ((1, 1, 5),))
    hf = hilbert_function(Z)
    assert [hf[t] for t in range(5)] == [points_hilbert(Z.points, t) for t in range(5)]


def test_conic_h_vector():
    assert h_vector(CONIC).values == (1, 2, 2, 2, 2, 1)
    assert hilbert_function(CONIC) == HilbertSeq((1, 3, 5, 7, 9, 10), "constant")


def test_general_points_h_vector():
    assert h_vector(random_points(16, 3, random.Random(0))).values == (1, 3, 6, 6)
    assert h_vector(random_points(7, 3, random.Random(0))).values == (1, 3, 3)


def test_upp_general_points_pass():
    v = upp_test(random_points(5, 2, random.Random(3)))
    assert v.passed and v.checked == 30


def test_upp_collinear_triple_fails():
    Z = PointSet(2, ((1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 0, 1)))
    v = upp_test(Z)
    assert not v.passed
    assert v.witness == (0, 1, 2)
    assert v.witness_hilbert == (1, 2, 3) and v.expected_hilbert == (1, 3, 3)


def test_upp_sampled_mode_and_cap():
    Z = random_points(13, 2, random.Random(1))
    with pytest.raises(DomainError):
        upp_test(Z)
    assert upp_test(Z, mode="sampled", samples=4, rng=random.Random(0)).passed


@pytest.mark.parametrize("seed", range(4))
def test_subsets_never_exceed_truncation(seed):
    rng = random.Random(seed)
    Z = PointSet(2, tuple((1, k, k * k) for k in range(5)) + tuple(random_points(4, 2, rng).points))
    h = hilbert_function(Z)
    for size in (3, 5, 7):
        bound = truncate(h, size)
        for idx in list(combinations(range(len(Z)), size))[::7]:
            got = hilbert_function(Z.subset(idx), 6)
            assert all(got[t] <= bound[t] for t in range(7))


def test_degree_forms_vanish_on_points():
    forms = degree_forms(CONIC, 3)
    assert len(forms) == 10 - 7
    for f in forms:
        for pt in CONIC.points:
            v = sum(c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] for e, c in f.terms.items())
            assert v % P == 0


def test_conic_gcd():
    res = gcd_of_forms(degree_forms(CONIC, 2) + degree_forms(CONIC, 3))
    assert res.degree == 2
    assert str(res.gcd) == "x*z - y^2"


@pytest.mark.parametrize("seed", range(8))
def test_gcd_recovers_common_factor(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    df, dg, dh = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
    F, G, H = (f.reduce(P) for f in random_forms(n, (df, dg, dh), rng))
    res = gcd_of_forms([F * G, F * H])
    assert res.gcd == F.normalized()
    for q, f in zip(res.quotients, [F * G, F * H]):
        assert q * res.gcd == f


def test_gcd_of_coprime_forms_is_constant():
    rng = random.Random(5)
    G, H = (f.reduce(P) for f in random_forms(3, (2, 3), rng))
    assert gcd_of_forms([G, H]).degree == 0


def test_gcd_errors():
    with pytest.raises(DomainError):
        gcd_of_forms([])
    with pytest.raises(DomainError):
        gcd_of_forms(random_forms(2, (2,), random.Random(0)))
