"""Exhaustive sweeps of the identities behind the slope formulas.

Each check looks at one fraction at a time and raises :class:`Counterexample`
on the first violation.  A sweep walks the fractions once, feeding each
fraction to every check of the chosen suite, and records per-check case
counts, timing and the first counterexample.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable

import numpy as np

from .chain import (
    EdgeKind,
    QuadChain,
    available_moves,
    edge_kind,
    lower_perimeter_path,
    quad_chain,
    triangle_move,
    upper_perimeter_path,
)
from .checkerboard import (
    alternating_bound,
    checkerboard_slopes,
    four_plat_diagram,
    lemma9_check,
    pretzel_diagram,
)
from .edgepath import EdgePath, is_even, is_minimal, n_plus_minus
from .paths import (
    alternating_turning_path,
    count_minimal_paths,
    enumerate_minimal_paths,
    even_path_knot,
    even_paths_link,
    extreme_paths,
)
from .rationals import Fraction, det, parents, reduced_fractions
from .slopes import crossing_number_parts, sigma0, sigma1, slope_formulas, target_data

__all__ = [
    "Counterexample",
    "CheckResult",
    "SUITES",
    "run_suite",
    "regular_cf_sum",
    "pretzel_twist_lists",
]

SigmaFn = Callable[[Fraction], int]


class Counterexample(Exception):
    """An identity failed; the message names the offending data."""


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    seconds: float = 0.0
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases, {self.seconds:.1f}s"
        return text if self.ok else f"{text}\n  counterexample: {self.failure}"


def regular_cf_sum(f: Fraction) -> int:
    """Sum of the regular continued fraction quotients of ``p/q``."""
    p, q, total = f.num, f.den, 0
    while q:
        a, r = divmod(p, q)
        total += a
        p, q = q, r
    return total


def _eps_array(f: Fraction) -> np.ndarray:
    # index i holds eps_i for 0 < i < q; index 0 is padding
    i = np.arange(f.den, dtype=np.int64)
    return 1 - 2 * ((i * f.num // f.den) & 1)


class _Sums:
    """Memoized sigma0/sigma1 shared across a sweep (parents recur constantly)."""

    def __init__(self, sigma0_fn: SigmaFn, sigma1_fn: SigmaFn) -> None:
        self._fns = (sigma0_fn, sigma1_fn)
        self._memo: tuple[dict[Fraction, int], dict[Fraction, int]] = ({}, {})

    def _get(self, k: int, f: Fraction) -> int:
        memo = self._memo[k]
        if f not in memo:
            memo[f] = self._fns[k](f)
        return memo[f]

    def s0(self, f: Fraction) -> int:
        return self._get(0, f)

    def s1(self, f: Fraction) -> int:
        return self._get(1, f)


class _Case:
    """Lazily computed data about one fraction, shared between checks."""

    def __init__(self, f: Fraction, sums: _Sums) -> None:
        self.f = f
        self.s0 = sums.s0
        self.s1 = sums.s1

    @cached_property
    def chain(self) -> QuadChain:
        return quad_chain(self.f)

    @cached_property
    def extremes(self) -> tuple[EdgePath, EdgePath]:
        return extreme_paths(self.chain)

    @cached_property
    def perimeters(self) -> tuple[EdgePath, EdgePath]:
        return lower_perimeter_path(self.chain), upper_perimeter_path(self.chain)

    @cached_property
    def minimal_paths(self) -> list[EdgePath]:
        return enumerate_minimal_paths(self.f, chain=self.chain)

    @cached_property
    def eps(self) -> np.ndarray:
        return _eps_array(self.f)

    @cached_property
    def even_paths(self) -> tuple[EdgePath, ...]:
        if self.f.den % 2:
            return (even_path_knot(self.f),)
        return even_paths_link(self.f)


def _fail(msg: str) -> None:
    raise Counterexample(msg)


# --- lemma checks --------------------------------------------------------


def check_lemma2(c: _Case) -> None:
    """Edge determinants on the boundary walks and the extreme minimal paths;
    ``m(upper) = i - 1`` and ``m(lower) = -j + 1`` for edge counts ``i, j``."""
    lower, upper = c.extremes
    lower_walk, upper_walk = c.perimeters
    for path, want in ((lower_walk, -1), (lower, -1), (upper_walk, 1), (upper, 1)):
        v = path.vertices
        for a, b in zip(v[1:], v[2:]):
            if det(a, b) != want:
                _fail(f"{c.f}: edge {a} -> {b} has determinant {det(a, b)}, expected {want}")
    if not (is_minimal(lower) and is_minimal(upper)):
        _fail(f"{c.f}: an extreme path is not minimal")
    i, j = len(upper) - 1, len(lower) - 1
    if upper.m != i - 1 or lower.m != -j + 1:
        _fail(f"{c.f}: m(upper) = {upper.m} with {i} edges, m(lower) = {lower.m} with {j} edges")


def _lemma3(f: Fraction, path: EdgePath) -> None:
    pos, neg = n_plus_minus(path)
    if -path.m != pos - neg:
        _fail(f"{f}: path {path} has -m = {-path.m} but n+ - n- = {pos - neg}")


def check_lemma3(c: _Case) -> None:
    """``-m = n+ - n-`` on every minimal path, both boundary walks and the even paths."""
    for path in itertools.chain(
        c.minimal_paths,
        c.perimeters,
        c.even_paths,
    ):
        _lemma3(c.f, path)


def check_lemma4(c: _Case) -> None:
    """``eps_i = (-1)^(p+1) eps_(q-i)`` for ``0 < i < q - 1``."""
    q = c.f.den
    if q < 3:
        return
    e = c.eps
    sign = 1 if c.f.num % 2 else -1
    i = np.arange(1, q - 1)
    bad = np.nonzero(e[i] != sign * e[q - i])[0]
    if bad.size:
        k = int(i[bad[0]])
        _fail(f"{c.f}: eps_{k} = {int(e[k])}, eps_{q - k} = {int(e[q - k])}")


def check_lemma5(c: _Case) -> None:
    """Odd ``q``: ``sigma0 = (-1)^(p+1) sigma1``."""
    if c.f.den % 2 == 0:
        return
    sign = 1 if c.f.num % 2 else -1
    s0, s1 = c.s0(c.f), c.s1(c.f)
    if s0 != sign * s1:
        _fail(f"{c.f}: sigma0 = {s0}, sigma1 = {s1}")


def check_lemma6(c: _Case) -> None:
    """A parent's eps sequence is a prefix of the child's."""
    for par in parents(c.f):
        if par.den < 2:
            continue
        pe = _eps_array(par)
        k = par.den
        if not np.array_equal(pe[1:k], c.eps[1:k]):
            i = int(np.nonzero(pe[1:k] != c.eps[1:k])[0][0]) + 1
            _fail(f"{c.f}: parent {par} has eps_{i} = {int(pe[i])}, child has {int(c.eps[i])}")


def check_lemma7(c: _Case) -> None:
    """sigma recursions through the parents ``a/c < p/q < b/d``."""
    f = c.f
    lo, hi = parents(f)
    s0, s1 = c.s0, c.s1
    if f.den % 2 == 0:
        got = (s0(f), s1(f))
        want = (s0(lo) + s0(hi), s1(lo) + s1(hi) + (-1) ** lo.num)
    else:
        sign = (-1) ** (f.num + 1)
        got = s0(f)
        want = s0(lo) + sign * s1(hi) if lo.den % 2 else s0(hi) + sign * s1(lo)
    if got != want:
        _fail(f"({f}, {lo}, {hi}): sigma recursion gives {want}, direct sums give {got}")


def check_m_vs_sigma(c: _Case) -> None:
    """``m(e0) = s0 - s1``, ``m(e1) = s0 + s1`` for links; ``m(e) = 2 s0`` for knots."""
    f = c.f
    s0, s1 = c.s0(f), c.s1(f)
    if f.den % 2:
        (e,) = c.even_paths
        if e.m != 2 * s0:
            _fail(f"{f}: m(e) = {e.m}, 2 sigma0 = {2 * s0}")
    else:
        e0, e1 = c.even_paths
        if (e0.m, e1.m) != (s0 - s1, s0 + s1):
            _fail(f"{f}: m(e0), m(e1) = {e0.m}, {e1.m}; sigma0 -+ sigma1 = {s0 - s1}, {s0 + s1}")


# --- theorem checks ------------------------------------------------------


def check_three_formulas(c: _Case) -> None:
    """All three slope expressions agree on every minimal path; knot slopes are even."""
    data = target_data(c.f)
    for path in c.minimal_paths:
        vals = slope_formulas(path, data)
        if len(set(vals)) != 1:
            _fail(f"{c.f}: path {path} gives slope values {vals}")
        if data.components == 1 and vals[0] % 2:
            _fail(f"{c.f}: knot slope {vals[0]} is odd on {path}")
        if data.components == 2 and vals[0] % 2:
            _fail(f"{c.f}: link slope {vals[0]}/2 is not an integer on {path}")


def check_theorem3(c: _Case) -> None:
    """Slope diameter equals ``(2/n) cr``."""
    data = target_data(c.f)
    scale = 1 if data.components == 1 else 2
    values = [slope_formulas(p, data)[2] // scale for p in c.minimal_paths]
    diameter = max(values) - min(values)
    cr = regular_cf_sum(c.f)
    if data.components * diameter != 2 * cr:
        _fail(f"{c.f}: diameter {diameter}, crossing number {cr}, n = {data.components}")


def check_crossing_number(c: _Case) -> None:
    """``m(upper) - m(lower) = i + j - 2 = sum |b_i|`` of the alternating path,
    and all agree with the continued-fraction count."""
    parts = crossing_number_parts(c.f)
    parts["continued_fraction"] = regular_cf_sum(c.f)
    if len(set(parts.values())) != 1:
        _fail(f"{c.f}: crossing-number routes disagree: {parts}")
    alt = alternating_turning_path(c.f)
    turns = alt.turns
    if any(a * b > 0 for a, b in zip(turns, turns[1:])) or alt.r != 0 or abs(turns[-1]) < 2:
        _fail(f"{c.f}: alternating path {alt} does not alternate")


# --- even paths ----------------------------------------------------------


def check_even_census(c: _Case) -> None:
    """One even minimal path to a knot, two to a link, with correct labels
    and no diagonal (C-type) edges."""
    f = c.f
    want = 1 if f.den % 2 else 2
    found = count_minimal_paths(f, chain=c.chain, even_only=True)
    if found != want:
        _fail(f"{f}: {found} even minimal paths, expected {want}")
    paths = c.even_paths
    for k, e in enumerate(paths):
        if e.target != f or not is_even(e) or not is_minimal(e):
            _fail(f"{f}: even path {e} is not an even minimal path to {f}")
        for a, b in e.edges:
            if a.den and edge_kind((a, b)) is EdgeKind.C_TYPE:
                _fail(f"{f}: even path {e} uses the C-type edge {a}-{b}")
        if want == 2 and e.vertices[-2].num % 2 != k:
            _fail(f"{f}: e{k} arrives through {e.vertices[-2]}, wrong numerator parity")
    if want == 2 and paths[0] == paths[1]:
        _fail(f"{f}: e0 and e1 coincide")


# --- checkerboard --------------------------------------------------------


def check_four_plat(c: _Case) -> None:
    """Checkerboard identity |sum(s - t)| = 2 cr and the diagonal bound on the alternating 4-plat."""
    f = c.f
    d = four_plat_diagram(f)
    cr = regular_cf_sum(f)
    if d.n_components != (2 if f.den % 2 == 0 else 1) or d.crossing_number != cr:
        _fail(f"{f}: 4-plat has {d.n_components} components, {d.crossing_number} crossings")
    if not d.reduced_alternating:
        _fail(f"{f}: 4-plat diagram is not alternating")
    if not lemma9_check(d):
        _fail(f"{f}: |sum(s - t)| != 2 cr on the 4-plat")
    cs = checkerboard_slopes(d)
    if d.n_components == 1 and cs.s[0] - cs.t[0] != 2 * cr:
        _fail(f"{f}: knot checkerboard gap {cs.s[0] - cs.t[0]} != 2 cr = {2 * cr}")
    bound = alternating_bound(d)
    if bound is not None and not bound["equal"]:
        _fail(f"{f}: diagonal checkerboard gap {bound['gap']} differs from {bound['bound']}")


def pretzel_twist_lists(max_crossings: int) -> Iterable[tuple[int, ...]]:
    """Same-sign twist tuples with at most ``max_crossings`` crossings in total."""
    for total in range(1, max_crossings + 1):
        for cuts in itertools.product((False, True), repeat=total - 1):
            parts, run = [], 1
            for cut in cuts:
                if cut:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            yield tuple(parts)
            yield tuple(-x for x in parts)


def sweep_pretzels(max_crossings: int = 12) -> CheckResult:
    res = CheckResult("pretzel_checkerboard")
    start = time.perf_counter()
    for twists in pretzel_twist_lists(max_crossings):
        d = pretzel_diagram(twists)
        res.cases += 1
        if d.crossing_number != sum(abs(t) for t in twists) or not lemma9_check(d):
            res.failure = f"pretzel {twists}: |sum(s - t)| = 2 cr fails"
            break
        bound = alternating_bound(d)
        if bound is not None and not bound["holds"]:
            res.failure = f"pretzel {twists}: diagonal gap {bound['gap']} below {bound['bound']}"
            break
    res.seconds = time.perf_counter() - start
    return res


# --- randomized ----------------------------------------------------------


def random_moves(
    max_q: int, n_moves: int = 10**5, seed: int = 0, walk_length: int = 40, nonminimal_target: int = 10**4
) -> tuple[CheckResult, CheckResult]:
    """Random triangle-move walks starting at the lower minimal path.

    Every move must shift ``m`` by +1 (left) or -1 (right), and every path
    visited must satisfy ``-m = n+ - n-``; the second result counts the
    non-minimal paths checked that way.
    """
    lemma1 = CheckResult("lemma1_random_moves")
    lemma3 = CheckResult("lemma3_random_nonminimal")
    pool = list(reduced_fractions(max_q))
    if not pool:
        return lemma1, lemma3
    rng = random.Random(seed)
    start = time.perf_counter()
    walks = 0
    while (lemma1.cases < n_moves or lemma3.cases < nonminimal_target) and walks < n_moves + nonminimal_target:
        walks += 1
        f = rng.choice(pool)
        chain = quad_chain(f)
        path = extreme_paths(chain)[0]
        for _ in range(walk_length):
            moves = available_moves(path, chain)
            if not moves:
                break
            tri, side = rng.choice(moves)
            new = triangle_move(path, tri, side, chain)
            delta = new.m - path.m
            lemma1.cases += 1
            if delta != (1 if side == "left" else -1):
                lemma1.failure = f"{f}: {side} move across {sorted(map(str, tri))} changed m by {delta}"
                break
            path = new
            if not is_minimal(path):
                lemma3.cases += 1
                pos, neg = n_plus_minus(path)
                if -path.m != pos - neg:
                    lemma3.failure = f"{f}: path {path} has -m = {-path.m}, n+ - n- = {pos - neg}"
                    break
        if lemma1.failure or lemma3.failure:
            break
    lemma1.seconds = lemma3.seconds = time.perf_counter() - start
    return lemma1, lemma3


# --- driver --------------------------------------------------------------

SUITES: dict[str, tuple[Callable[[_Case], None], ...]] = {
    "lemmas": (
        check_lemma2,
        check_lemma3,
        check_lemma4,
        check_lemma5,
        check_lemma6,
        check_lemma7,
        check_m_vs_sigma,
    ),
    "theorems": (check_three_formulas, check_theorem3, check_crossing_number),
    "even": (check_even_census,),
    "checkerboard": (check_four_plat,),
}
SUITE_NAMES = ("all", *SUITES, "moves")


def run_checks(
    max_q: int,
    checks: Iterable[Callable[[_Case], None]],
    *,
    sigma0_fn: SigmaFn = sigma0,
    sigma1_fn: SigmaFn = sigma1,
) -> list[CheckResult]:
    """Feed every reduced ``p/q`` with ``q <= max_q`` to each check.

    A check stops being called after its first counterexample.
    """
    checks = list(checks)
    results = {fn: CheckResult(fn.__name__.removeprefix("check_")) for fn in checks}
    sums = _Sums(sigma0_fn, sigma1_fn)
    for f in reduced_fractions(max_q):
        live = [fn for fn in checks if results[fn].ok]
        if not live:
            break
        case = _Case(f, sums)
        for fn in live:
            res = results[fn]
            t0 = time.perf_counter()
            try:
                fn(case)
            except Counterexample as exc:
                res.failure = str(exc)
            res.cases += 1
            res.seconds += time.perf_counter() - t0
    return list(results.values())


def run_suite(
    max_q: int,
    suite: str = "all",
    *,
    seed: int = 0,
    sigma0_fn: SigmaFn = sigma0,
    sigma1_fn: SigmaFn = sigma1,
    n_moves: int = 10**5,
    nonminimal: int = 10**4,
    pretzel_crossings: int = 12,
    progress: Callable[[CheckResult], None] | None = None,
) -> list[CheckResult]:
    """Run the named suite over every reduced ``p/q`` with ``q <= max_q``.

    ``sigma0_fn``/``sigma1_fn`` replace the sum functions used by the sigma
    identities, which is how fault injection reaches them.
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if suite == "all" else [suite] if suite in SUITES else []
    out = run_checks(max_q, [fn for name in names for fn in SUITES[name]], sigma0_fn=sigma0_fn, sigma1_fn=sigma1_fn)
    if suite in ("all", "moves"):
        out.extend(random_moves(max_q, n_moves, seed, nonminimal_target=nonminimal) if max_q >= 2 else ())
    if suite in ("all", "checkerboard"):
        out.append(sweep_pretzels(pretzel_crossings))
    if progress:
        for r in out:
            progress(r)
    return out
