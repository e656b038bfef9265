"""One test per acceptance criterion; a summary line per criterion is
printed at the end of the run by ``conftest.py``."""

import time

import pytest

from slope_atlas.checkerboard import checkerboard_slopes, four_plat_diagram, is_diagonal, lemma9_check, pretzel_diagram
from slope_atlas.paths import alternating_turning_path, enumerate_minimal_paths
from slope_atlas.rationals import Fraction
from slope_atlas.slopes import crossing_number_parts, slope_report
from slope_atlas.verify import (
    SUITES,
    check_crossing_number,
    check_even_census,
    check_four_plat,
    check_theorem3,
    check_three_formulas,
    random_moves,
    run_checks,
    sweep_pretzels,
)

F = Fraction


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


def assert_all_pass(results):
    for r in results:
        print(r.line())
    failed = [r.line() for r in results if not r.ok]
    assert not failed, failed
    assert all(r.cases > 0 for r in results)


@pytest.mark.criterion(1, "three slope formulas agree on every minimal path, q <= 300, under 60 s")
def test_criterion_1_three_formulas():
    results, seconds = timed(run_checks, 300, [check_three_formulas])
    assert_all_pass(results)
    assert results[0].cases == 27397
    assert seconds < 60


@pytest.mark.criterion(2, "diameter = (2/n) * crossing number for all q <= 300, under 60 s")
def test_criterion_2_theorem3():
    results, seconds = timed(run_checks, 300, [check_theorem3])
    assert_all_pass(results)
    assert seconds < 60


@pytest.mark.criterion(3, "crossing number by m-difference, edge count and alternating path, q <= 300")
def test_criterion_3_crossing_number():
    assert_all_pass(run_checks(300, [check_crossing_number]))
    f = F(13, 34)
    assert alternating_turning_path(f).turning() == (0, (2, -1, 1, -1, 1, -2))
    assert set(crossing_number_parts(f).values()) == {8}


@pytest.mark.criterion(4, "lemma suite exhaustive to q <= 500 with 10^4 random non-minimal paths, under 120 s")
def test_criterion_4_lemmas():
    start = time.perf_counter()
    results = run_checks(500, SUITES["lemmas"])
    _, nonminimal = random_moves(500, 0, seed=1, nonminimal_target=10**4)
    seconds = time.perf_counter() - start
    assert_all_pass([*results, nonminimal])
    assert nonminimal.cases >= 10**4
    assert seconds < 120


@pytest.mark.criterion(5, "10^5 random triangle moves each shift m by exactly +-1")
def test_criterion_5_triangle_moves():
    moves, _ = random_moves(100, 10**5, seed=0, nonminimal_target=0)
    assert_all_pass([moves])
    assert moves.cases >= 10**5


@pytest.mark.criterion(6, "named links: Hopf, trefoil, figure-eight, Whitehead")
def test_criterion_6_named_links():
    hopf = slope_report(F(1, 2))
    assert (set(hopf.slope_set), hopf.diameter, hopf.linking_number) == ({1, -1}, 2, 1)
    trefoil = slope_report(F(1, 3))
    assert (set(trefoil.slope_set), trefoil.diameter) == ({0, 6}, 6)
    fig8 = slope_report(F(2, 5))
    assert (set(fig8.slope_set), fig8.diameter, fig8.path_count) == ({-4, 0, 4}, 8, 3)
    assert len(enumerate_minimal_paths(F(2, 5))) == 3
    whitehead = slope_report(F(3, 8))
    assert (whitehead.diameter, whitehead.sigma1) == (5, 0)


@pytest.mark.criterion(7, "checkerboard: |sum(s - t)| = 2 cr on 4-plats q <= 200 and pretzels <= 12 crossings, named examples")
def test_criterion_7_checkerboard():
    assert_all_pass([*run_checks(200, [check_four_plat]), sweep_pretzels(12)])

    wh = checkerboard_slopes(four_plat_diagram(F(3, 8)))
    candidates = {wh.s, wh.t, wh.mirror().s, wh.mirror().t}
    assert (-4, -2) in candidates or (-2, -4) in candidates

    d = pretzel_diagram([3, 2, 3, 2, 3, 2])
    cs = checkerboard_slopes(d)
    assert is_diagonal(cs) == (True, True) and lemma9_check(d)
    mirrored = cs.mirror()
    assert (mirrored.s[0], mirrored.t[0]) == (8, -2)
    assert d.n_components * (8 - (-2)) == 2 * d.crossing_number == 30


@pytest.mark.criterion(8, "one even minimal path per knot, two per link, labelled by parent parity, no C edges")
def test_criterion_8_even_census():
    assert_all_pass(run_checks(300, [check_even_census]))
