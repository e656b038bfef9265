import json
from fractions import Fraction as Q
from math import prod

import pytest

from oracles import fox_determinant
from slope_atlas.checkerboard import (
    CheckerboardSlopes,
    Crossing,
    LinkDiagram,
    alternating_bound,
    checkerboard_slopes,
    four_plat_diagram,
    four_plat_trace,
    is_diagonal,
    lemma9_check,
    pretzel_diagram,
    pretzel_trace,
)
from slope_atlas.rationals import Fraction, reduced_fractions
from slope_atlas.slopes import slope_report

F = Fraction
HOPF = LinkDiagram(2, (Crossing(1, 2, 1), Crossing(2, 1, 1)))
TREFOIL = LinkDiagram(1, (Crossing(1, 1, 1),) * 3)


def up_to_mirror(cs: CheckerboardSlopes) -> set[tuple[int, ...]]:
    m = cs.mirror()
    return {cs.s, cs.t, m.s, m.t}


def test_hand_entered_diagrams():
    cs = checkerboard_slopes(HOPF)
    assert (cs.s, cs.t) == ((1, 1), (-1, -1))
    assert is_diagonal(cs) == (True, True)
    assert lemma9_check(HOPF)
    cs = checkerboard_slopes(TREFOIL)
    assert (cs.s, cs.t) == ((6,), (0,))


def test_single_crossing_unreduced_diagram_still_satisfies_identity():
    d = LinkDiagram(1, (Crossing(1, 1, -1),), reduced_alternating=False)
    assert lemma9_check(d)
    assert checkerboard_slopes(d) == CheckerboardSlopes((0,), (-2,))


def test_diagram_validation():
    with pytest.raises(ValueError):
        LinkDiagram(1, ())
    with pytest.raises(ValueError):
        LinkDiagram(2, (Crossing(1, 3, 1),))
    with pytest.raises(ValueError):
        LinkDiagram(1, (Crossing(1, 1, 0),))
    with pytest.raises(ValueError):
        LinkDiagram(3, (Crossing(1, 2, 1), Crossing(2, 1, 1)))
    with pytest.raises(ValueError):
        LinkDiagram.from_json('{"n": 1}')


def test_json_round_trip():
    d = four_plat_diagram(F(3, 8))
    assert LinkDiagram.from_json(json.dumps(d.to_json())) == d
    assert LinkDiagram.from_json(d.to_json()) == d


def test_mirror_swaps_and_negates():
    cs = CheckerboardSlopes((4, 2), (-2, -2))
    assert cs.mirror() == CheckerboardSlopes((2, 2), (-4, -2))
    assert cs.mirror().mirror() == cs


def test_four_plat_small_links():
    hopf = four_plat_diagram(F(1, 2))
    assert hopf.n_components == 2 and hopf.crossing_number == 2
    assert all(not c.is_self for c in hopf.crossings)
    trefoil = four_plat_diagram(F(1, 3))
    assert trefoil.n_components == 1 and trefoil.crossing_number == 3
    assert len({c.sign for c in trefoil.crossings}) == 1


def test_whitehead_four_plat():
    d = four_plat_diagram(F(3, 8))
    assert (d.n_components, d.crossing_number) == (2, 5)
    cs = checkerboard_slopes(d)
    assert (-4, -2) in up_to_mirror(cs) or (-2, -4) in up_to_mirror(cs)
    assert is_diagonal(cs) == (False, True)
    assert d.linking_numbers() == {(1, 2): Q(0)}
    assert alternating_bound(d) is None


def test_pretzel_examples():
    d = pretzel_diagram([3, 2, 3, 2, 3, 2])
    assert (d.n_components, d.crossing_number) == (3, 15)
    cs = checkerboard_slopes(d)
    assert is_diagonal(cs) == (True, True)
    assert {cs.s[0], cs.t[0]} in ({-2, 8}, {2, -8})
    assert lemma9_check(d) and 3 * (8 - (-2)) == 2 * 15
    assert alternating_bound(d) == {"gap": 10, "bound": Q(10), "holds": True, "equal": True}
    assert pretzel_diagram([2, 2]).crossing_number == 4
    tref = pretzel_diagram([3])
    assert (tref.n_components, tref.crossing_number) == (1, 3)
    assert up_to_mirror(checkerboard_slopes(tref)) >= {(6,), (0,)}


def test_pretzel_rejects_bad_input():
    for bad in ([], [3, 0], [3, -2]):
        with pytest.raises(ValueError):
            pretzel_diagram(bad)


def test_four_plats_agree_with_the_farey_side():
    for f in reduced_fractions(40):
        trace = four_plat_trace(f)
        d = trace.diagram()
        assert trace.is_alternating(), f
        assert fox_determinant(trace) == f.den, f
        rep = slope_report(f)
        assert (d.n_components, d.crossing_number) == (rep.components, rep.crossing_number), f
        assert lemma9_check(d), f
        cs = checkerboard_slopes(d)
        if d.n_components == 1:
            assert (cs.s, cs.t) == ((rep.slope_max,), (rep.slope_min,)), f
        else:
            assert abs(sum(d.linking_numbers().values())) == abs(rep.linking_number), f


def test_pretzel_traces_are_alternating_with_expected_determinant():
    # the determinant of a same-sign pretzel (a1, ..., ak) is the
    # elementary symmetric function e_{k-1}(a1, ..., ak)
    for twists in ([3], [1, 1], [2, 2], [3, 2, 3], [1, 2, 3, 4], [3, 2, 3, 2, 3, 2]):
        trace = pretzel_trace(twists)
        assert trace.is_alternating()
        expected = sum(prod(twists[:i] + twists[i + 1 :]) for i in range(len(twists)))
        assert fox_determinant(trace) == expected, twists
