import pytest
from hypothesis import given, settings, strategies as st

from hilbgeom import DomainError, HilbertSeq
from hilbgeom.errors import InputError
from hilbgeom.seqcore import ci_h_vector, difference, partial_sum, truncate

values = st.lists(st.integers(-50, 200), min_size=1, max_size=25)


@settings(max_examples=1000, deadline=None)
@given(values, st.sampled_from([None, "zero"]))
def test_partial_sum_inverts_difference(vals, tail):
    s = HilbertSeq(tuple(vals), tail)
    window = len(vals) - 1 if tail is None else len(vals) + 5
    assert partial_sum(difference(s)).upto(window) == s.upto(window)
    assert difference(partial_sum(s)) == s


@given(values, st.sampled_from([None, "constant", "zero"]))
def test_json_round_trip(vals, tail):
    s = HilbertSeq(tuple(vals), tail)
    assert HilbertSeq.from_json(s.to_json()) == s


def test_tails_normalize():
    assert HilbertSeq((1, 3, 3, 3), "constant") == HilbertSeq((1, 3), "constant")
    assert HilbertSeq((1, 2, 1, 0, 0), "zero").values == (1, 2, 1)
    s = HilbertSeq((1, 3, 6), "constant")
    assert s[10] == 6
    assert HilbertSeq((1, 2), "zero")[5] == 0
    with pytest.raises(IndexError):
        HilbertSeq((1, 2))[2]


def test_difference_of_points_and_artinian():
    # h of 7 general points in P^3
    h = HilbertSeq((1, 4, 7), "constant")
    assert difference(h) == HilbertSeq((1, 3, 3), "zero")
    assert difference(h, 2).values == (1, 2, 0, -3)
    assert difference(HilbertSeq((1, 2, 1), "zero")).values == (1, 1, -1, -1)
    assert difference((5, 5, 5), 0) == HilbertSeq((5, 5, 5))


def test_partial_sum_rejects_growing_tail():
    with pytest.raises(DomainError):
        partial_sum(HilbertSeq((1, 2), "constant"))


@pytest.mark.parametrize(
    "degrees, expected",
    [
        ((2, 2), (1, 2, 1)),
        ((3, 3, 4), (1, 3, 6, 8, 8, 6, 3, 1)),
        ((2, 2, 4), (1, 3, 4, 4, 3, 1)),
        ((5, 6), (1, 2, 3, 4, 5, 5, 4, 3, 2, 1)),
    ],
)
def test_ci_h_vector(degrees, expected):
    assert ci_h_vector(degrees).values == expected


def test_ci_h_vector_sums_to_product():
    from math import prod

    for degrees in [(2, 3), (3, 3, 4), (2, 2, 2, 5)]:
        assert sum(ci_h_vector(degrees).values) == prod(degrees)


def test_truncate():
    h = HilbertSeq((1, 4, 10, 16), "constant")
    assert truncate(h, 7) == HilbertSeq((1, 4, 7), "constant")
    assert truncate(h, 16) == h
    with pytest.raises(DomainError, match="truncation above cardinality"):
        truncate(h, 17)
    with pytest.raises(DomainError):
        truncate(HilbertSeq((1, 3), "zero"), 2)


@pytest.mark.parametrize("bad", ["[1, 2.5]", '{"values": [1], "tail": "linear"}', '"x"', "[true]"])
def test_from_json_rejects(bad):
    with pytest.raises(InputError):
        HilbertSeq.from_json(bad)
