import pickle
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slope_atlas.rationals import (
    INFINITY,
    ONE,
    ZERO,
    Fraction,
    det,
    is_farey_neighbor,
    make_fraction,
    mediant,
    parents,
    reduced_fractions,
)

F = Fraction


@pytest.mark.parametrize(
    "n, d, expected",
    [(26, 68, F(13, 34)), (3, 0, INFINITY), (-2, -4, F(1, 2)), (0, 7, ZERO), (4, -6, F(-2, 3))],
)
def test_make_fraction_normalizes(n, d, expected):
    f = make_fraction(n, d)
    assert f == expected
    assert (f.num, f.den) == (expected.num, expected.den)


def test_rejects_degenerate_inputs():
    with pytest.raises(ValueError):
        Fraction(0, 0)
    with pytest.raises(ValueError):
        Fraction(-1, 0)


@pytest.mark.parametrize(
    "f, g, expected",
    [(ZERO, F(1, 2), -1), (ONE, F(1, 2), 1), (F(8, 21), F(13, 34), -1), (F(1, 2), F(3, 8), 2)],
)
def test_det(f, g, expected):
    assert det(f, g) == expected
    assert det(g, f) == -expected


@pytest.mark.parametrize(
    "f, g, expected",
    [(INFINITY, F(5, 1), True), (F(1, 3), F(2, 5), True), (F(1, 2), F(3, 8), False)],
)
def test_farey_neighbor(f, g, expected):
    assert is_farey_neighbor(f, g) is expected


def test_mediant():
    assert mediant(INFINITY, ZERO) == ONE
    assert mediant(F(1, 3), F(1, 2)) == F(2, 5)
    assert mediant(F(5, 13), F(8, 21)) == F(13, 34)


@pytest.mark.parametrize(
    "f, expected",
    [(F(1, 2), (ZERO, ONE)), (F(2, 5), (F(1, 3), F(1, 2))), (F(13, 34), (F(8, 21), F(5, 13)))],
)
def test_parents_examples(f, expected):
    # returned in increasing order: 8/21 < 13/34 < 5/13
    assert parents(f) == expected


def _parents_by_search(f):
    for c in range(1, f.den):
        for a in range(0, c + 1):
            b, d = f.num - a, f.den - c
            if gcd(a, c) == 1 and d > 0 and a * d - b * c == -1:
                return F(a, c), F(b, d)


def test_parents_match_search():
    for f in reduced_fractions(40):
        lo, hi = parents(f)
        assert (lo, hi) == _parents_by_search(f), f
        assert lo < f < hi and mediant(lo, hi) == f and det(lo, hi) == -1, f
        if f.den % 2 == 0:
            assert (lo.num + hi.num) % 2 == 1, f


def test_ordering_treats_infinity_as_largest():
    assert F(7, 1) < INFINITY and not INFINITY < F(7, 1)
    assert sorted([INFINITY, ONE, F(1, 3), ZERO]) == [ZERO, F(1, 3), ONE, INFINITY]
    assert INFINITY >= INFINITY and F(1, 2) <= F(2, 4)


def test_hash_eq_and_pickle():
    assert {F(2, 4): 1}[F(1, 2)] == 1
    assert pickle.loads(pickle.dumps(F(13, 34))) == F(13, 34)
    assert str(F(13, 34)) == "13/34" and repr(INFINITY) == "Fraction(1, 0)"


def test_reduced_fractions_order_and_count():
    fs = list(reduced_fractions(5))
    assert [str(f) for f in fs] == ["1/2", "1/3", "2/3", "1/4", "3/4", "1/5", "2/5", "3/5", "4/5"]
    assert len(list(reduced_fractions(300))) == 27397


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_normal_form_property(n, d):
    f = Fraction(n, d)
    assert f.den > 0 and gcd(f.num, f.den) == 1 and f.num * d == n * f.den
