from math import comb

import pytest
from hypothesis import given, strategies as st

from hilbgeom import DomainError
from hilbgeom.macaulay import (
    binomial_expansion,
    growth,
    is_differentiable_o_sequence,
    is_o_sequence,
    maximal_growth_degrees,
)

from oracles import all_binomial_representations


@pytest.mark.parametrize("i", range(1, 7))
def test_expansion_unique_against_brute_force(i):
    for c in range(1, 201):
        reps = all_binomial_representations(c, i)
        assert len(reps) == 1, (c, i, reps)
        assert binomial_expansion(c, i).terms == reps[0]


def test_expansion_of_76():
    e = binomial_expansion(76, 5)
    assert e.terms == ((8, 5), (6, 4), (4, 3), (2, 2))
    assert e.value == 76
    assert str(e) == "C(8,5) + C(6,4) + C(4,3) + C(2,2)"


def test_growth_values():
    assert growth(76, 5) == 111
    assert growth(0, 3) == 0
    # the full polynomial ring k[x,y,z] grows maximally
    for i in range(1, 10):
        assert growth(comb(i + 2, 2), i) == comb(i + 3, 2)


def test_growth_stabilizes_for_small_values():
    for d in range(1, 31):
        for s in range(1, d + 1):
            assert growth(s, d) == s


@given(st.integers(1, 3000), st.integers(1, 12))
def test_growth_is_monotone_in_c(c, i):
    assert growth(c, i) <= growth(c + 1, i)


@given(st.integers(1, 3000), st.integers(1, 12))
def test_growth_at_least_c(c, i):
    assert growth(c, i) >= c


def test_expansion_domain():
    with pytest.raises(DomainError):
        binomial_expansion(0, 3)
    with pytest.raises(DomainError):
        binomial_expansion(5, 0)


def test_o_sequence_examples():
    assert is_o_sequence((1, 3, 6, 7, 9, 9))
    v = is_o_sequence((1, 2, 3, 1, 2))
    assert not v and v.violation == 3
    assert "exceeds" in v.reason
    assert not is_o_sequence((2, 3))
    assert is_o_sequence((1, 5, 2, 0, 0))


def test_differentiable():
    assert not is_differentiable_o_sequence((1, 3, 6, 7, 9, 9))
    assert is_differentiable_o_sequence((1, 4, 10, 16, 16))
    assert is_differentiable_o_sequence((1, 3, 6, 9, 11, 11, 11, 11))


def test_maximal_growth_reports_bound_at_the_end():
    verdicts = maximal_growth_degrees((1, 3, 6, 10))
    assert [v.is_maximal for v in verdicts] == [True, True, False]
    assert verdicts[-1].bound == 15 and verdicts[-1].next is None


def test_maximal_growth_needs_o_sequence():
    with pytest.raises(DomainError):
        maximal_growth_degrees((1, 2, 5))
