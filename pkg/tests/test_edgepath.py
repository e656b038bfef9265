import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import evaluate_cf
from slope_atlas.edgepath import (
    EdgePath,
    is_even,
    is_minimal,
    is_minimal_geometric,
    m_of_path,
    n_plus_minus,
    path_from_turning,
    turning_numbers,
)
from slope_atlas.rationals import INFINITY, ONE, ZERO, Fraction

F = Fraction
FIG3 = (2, -1, 1, -1, 1, -2)


def path(*fs):
    return EdgePath([INFINITY, *(F(*x) for x in fs)])


@pytest.mark.parametrize(
    "p, expected",
    [
        (path((0, 1), (1, 2), (1, 3), (2, 5), (3, 8), (5, 13), (13, 34)), (0, list(FIG3))),
        (path((0, 1), (1, 3)), (0, [3])),
        (path((1, 1), (1, 2), (2, 5)), (1, [-2, -3])),
    ],
)
def test_turning_numbers(p, expected):
    assert turning_numbers(p) == expected


def test_path_from_turning_examples():
    assert path_from_turning(0, [3, 2]).vertices == (INFINITY, ZERO, F(1, 3), F(2, 5))
    assert path_from_turning(0, [2]).vertices == (INFINITY, ZERO, F(1, 2))
    assert path_from_turning(0, FIG3).target == F(13, 34)
    assert path_from_turning(3, []).vertices == (INFINITY, F(3, 1))


def test_path_validation():
    with pytest.raises(ValueError):
        EdgePath([ZERO, F(1, 2)])
    with pytest.raises(ValueError):
        EdgePath([INFINITY, ZERO, F(2, 5)])
    with pytest.raises(ValueError):
        EdgePath([INFINITY])
    with pytest.raises(ValueError):
        path_from_turning(0, [2, 0])
    with pytest.raises(ValueError):
        # 0 + 1/(1 - 1/1) passes through 1/0 again
        path_from_turning(0, [1, 1])


def test_minimal_and_even_predicates():
    assert not is_minimal(path_from_turning(0, FIG3))
    assert is_minimal(path_from_turning(0, [3, 3]))
    assert is_minimal(path_from_turning(1, [-2, -3, -2]))
    assert is_even(path_from_turning(0, [2, -2]))
    assert not is_even(path_from_turning(0, [3, 2]))
    e1 = path_from_turning(1, [-2, -2, 2])
    assert is_even(e1) and e1.target == F(3, 8)


def test_m_and_n_plus_minus():
    assert m_of_path(path((1, 1), (1, 2))) == 1
    assert path_from_turning(0, [3, 2]).m == -2
    assert path_from_turning(0, [2, -2, -2]).m == 1
    assert n_plus_minus(path_from_turning(0, [3, 3])) == (2, 0)
    assert n_plus_minus(path_from_turning(1, [-2, -3, -2])) == (0, 3)
    assert n_plus_minus(path_from_turning(0, FIG3)) == (3, 3)


def test_edges_through_infinity_do_not_count():
    assert path((0, 1)).m == 0 and path((1, 1)).m == 0


turn = st.integers(-6, 6).filter(bool)


@given(st.integers(-3, 3), st.lists(turn, max_size=7))
def test_turning_round_trip(r, turns):
    try:
        p = path_from_turning(r, turns)
    except ValueError:
        assume(False)
    assert p.turning() == (r, tuple(turns))
    value = evaluate_cf(r, turns)
    assert value is not None and (p.target.num, p.target.den) == (value.numerator, value.denominator)
    assert EdgePath(p.vertices).turning() == p.turning()


@given(st.integers(-3, 3), st.lists(st.integers(2, 6).flatmap(lambda b: st.sampled_from([b, -b])), max_size=7))
def test_minimality_criteria_agree(r, turns):
    p = path_from_turning(r, turns)
    assert is_minimal(p) and is_minimal_geometric(p)


def test_geometric_minimality_detects_backtracking_turn():
    p = path_from_turning(0, [2, 1, 3])
    assert is_minimal(p) is is_minimal_geometric(p) is False
    assert ONE in path_from_turning(1, [-2]).vertices
