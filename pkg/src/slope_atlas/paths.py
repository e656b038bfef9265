"""Minimal, even and alternating edge paths to a target fraction."""

from __future__ import annotations

from functools import lru_cache

from .chain import (
    QuadChain,
    lower_minimal_path,
    quad_chain,
    strip_triangles,
    upper_minimal_path,
)
from .edgepath import EdgePath, path_from_turning
from .rationals import INFINITY, ONE, ZERO, Fraction, det, parents

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapExceeded",
    "even_path_knot",
    "even_paths_link",
    "enumerate_minimal_paths",
    "count_minimal_paths",
    "alternating_turning_path",
    "extreme_paths",
]

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    """More minimal paths than the caller allowed for."""

    def __init__(self, target: Fraction, cap: int) -> None:
        super().__init__(f"more than {cap} minimal paths to {target}")
        self.target = target
        self.cap = cap


def _check_unit(target: Fraction) -> None:
    if target.den == 0 or not 0 <= target.num <= target.den:
        raise ValueError(f"target must lie in [0, 1]; got {target}")


def _even_vertices(target: Fraction, parity: int | None) -> list[Fraction]:
    # Unrolled parent recursion:
    #   e^x(link)  = e(parent with numerator parity x) + link
    #   e(knot)    = e^x(link parent) + knot, x chosen so the new turn is even
    out = [target]
    cur, want = target, parity
    while cur != ZERO and cur != ONE:
        a, b = parents(cur)
        if cur.den % 2 == 0:
            cur = a if a.num % 2 == want else b
            want = None
        else:
            link = a if a.den % 2 == 0 else b
            # the turn at `link` on (..., P, link, cur) is +-det(P, cur)
            choices = [p for p in parents(link) if det(p, cur) % 2 == 0]
            if len(choices) != 1:
                raise AssertionError(f"no unique even extension to {cur}")
            want = choices[0].num % 2
            cur = link
        out.append(cur)
    out.append(INFINITY)
    out.reverse()
    return out


def even_path_knot(target: Fraction) -> EdgePath:
    """The unique even path ``e(p/q)`` to a knot fraction (odd denominator)."""
    _check_unit(target)
    if target.den % 2 == 0:
        raise ValueError(f"{target} is a link; use even_paths_link")
    return EdgePath(_even_vertices(target, None))


def even_paths_link(target: Fraction) -> tuple[EdgePath, EdgePath]:
    """``(e0, e1)``: the even paths arriving through the parent with even and
    odd numerator respectively."""
    _check_unit(target)
    if target.den % 2 == 1:
        raise ValueError(f"{target} is a knot; use even_path_knot")
    return EdgePath(_even_vertices(target, 0)), EdgePath(_even_vertices(target, 1))


def extreme_paths(target: Fraction | QuadChain) -> tuple[EdgePath, EdgePath]:
    """``(lower, upper)`` minimal paths; they minimize and maximize ``m``."""
    chain = target if isinstance(target, QuadChain) else quad_chain(target)
    return lower_minimal_path(chain), upper_minimal_path(chain)


def _path_counts(
    target: Fraction, chain: QuadChain, even_only: bool
) -> tuple[tuple[Fraction, ...], tuple[tuple[int, ...], ...], dict[int, int]]:
    # A minimal path has every |b_i| >= 2, so its denominators strictly
    # increase (|q_i| >= 2|q_{i-1}| - |q_{i-2}|): only Farey children are
    # candidates for the next vertex.  count[u*n + v] is the number of ways
    # to finish a minimal path that has just stepped u -> v (vertex ids).
    verts, fwd = chain.dag
    n = len(verts)
    t = verts.index(target)
    back: list[list[int]] = [[] for _ in range(n)]
    for u, ws in enumerate(fwd):
        for w in ws:
            back[w].append(u)
    count: dict[int, int] = {}
    # children have smaller ids, so their states are finished before v's
    for v in range(n):
        row = fwd[v]
        for u in back[v]:
            if v == t:
                count[u * n + v] = 1
                continue
            un, ud = verts[u]
            total = 0
            for w in row:
                wn, wd = verts[w]
                d = abs(un * wd - wn * ud)
                if d != 1 and not (even_only and d % 2):
                    total += count[v * n + w]
            count[u * n + v] = total
    return verts, fwd, count


def _total(verts: tuple[Fraction, ...], fwd: tuple[tuple[int, ...], ...], count: dict[int, int]) -> int:
    n, inf = len(verts), len(verts) - 1
    return sum(count[inf * n + v] for v in fwd[inf])


def count_minimal_paths(target: Fraction, chain: QuadChain | None = None, *, even_only: bool = False) -> int:
    """Number of minimal paths, by dynamic programming over directed edges.

    With ``even_only`` the turn at each interior vertex ``v`` of
    ``u -> v -> w`` (which is ``+-det(u, w)``) must also be even.
    """
    _check_unit(target)
    if target.den == 1:
        return 1
    return _total(*_path_counts(target, chain or quad_chain(target), even_only))


def enumerate_minimal_paths(
    target: Fraction, cap: int = DEFAULT_CAP, chain: QuadChain | None = None
) -> list[EdgePath]:
    """Every minimal path from ``1/0`` to ``target``, sorted by ``(r, turns)``.

    The paths are counted first; :class:`EnumerationCapExceeded` is raised
    before any path is built when there are more than ``cap``.
    """
    _check_unit(target)
    if cap < 1:
        raise ValueError("cap must be positive")
    if target.den == 1:
        return [EdgePath((INFINITY, target))]
    verts, fwd, count = _path_counts(target, chain or quad_chain(target), False)
    if _total(verts, fwd, count) > cap:
        raise EnumerationCapExceeded(target, cap)
    n, inf, t = len(verts), len(verts) - 1, verts.index(target)
    nums = [v[0] for v in verts]
    dens = [v[1] for v in verts]
    # Backtracking over one mutable path of vertex ids.  Alongside each
    # vertex we keep what turning() and m would otherwise recompute per
    # path: the signed vectors w_{i-1}, w_i and the running m.
    found: list[EdgePath] = []

    def emit(ids: list[int], turns: tuple[int, ...], m: int) -> None:
        done = EdgePath([verts[i] for i in ids], check=False)
        done._turning = (nums[ids[1]], turns)
        done._m = m
        found.append(done)

    for first in fwd[inf]:
        if not count[inf * n + first]:
            continue
        if first == t:
            emit([inf, first], (), 0)
            continue
        path = [inf, first]
        turns: list[int] = []
        vecs = [(-1, 0, nums[first], 1)]
        ms = [0]
        frames = [iter(fwd[first])]
        while frames:
            w = next(frames[-1], None)
            if w is None:
                frames.pop()
                path.pop()
                vecs.pop()
                ms.pop()
                if turns:
                    turns.pop()
                continue
            u, v = path[-2], path[-1]
            wn, wd = nums[w], dens[w]
            if not count[v * n + w] or abs(nums[u] * wd - wn * dens[u]) == 1:
                continue
            pn, pd, cn, cd = vecs[-1]
            un, ud = (wn, wd) if cn * wd - wn * cd == -1 else (-wn, -wd)
            b = (ud + pd) // cd
            vd = dens[v]
            m = ms[-1] + (nums[v] * wd - wn * vd if vd else 0)
            if w == t:
                path.append(w)
                emit(path, (*turns, b), m)
                path.pop()
                continue
            path.append(w)
            turns.append(b)
            vecs.append((cn, cd, un, ud))
            ms.append(m)
            frames.append(iter(fwd[w]))
    found.sort(key=lambda p: p.turning())
    return found


@lru_cache(maxsize=512)
def alternating_turning_path(target: Fraction) -> EdgePath:
    """The path with alternating-sign turning numbers whose absolute values sum
    to the crossing number.

    The triangles between the extreme minimal paths are labelled by the path
    they have an edge on (upper: turn left, lower: turn right); the first is
    taken as upper and the last joins the run before it, so the final turning
    number is at least 2 in absolute value.
    """
    _check_unit(target)
    if target.den < 2:
        raise ValueError("alternating path needs a denominator of at least 2")
    chain = quad_chain(target)
    lower, upper = extreme_paths(chain)
    low_edges = {frozenset(e) for e in lower.edges}
    up_edges = {frozenset(e) for e in upper.edges}
    tris = strip_triangles(target)
    labels: list[int] = []
    for k, tri in enumerate(tris):
        if k == 0:
            labels.append(1)
            continue
        if k == len(tris) - 1:
            labels.append(labels[-1])
            continue
        a, b, c = tri
        sides = {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))}
        on_up, on_low = bool(sides & up_edges), bool(sides & low_edges)
        if on_up == on_low:
            raise AssertionError(f"triangle {[str(v) for v in tri]} is not separated by the extreme paths")
        labels.append(1 if on_up else -1)
    turns: list[int] = []
    for lab in labels:
        if turns and (turns[-1] > 0) == (lab > 0):
            turns[-1] += lab
        else:
            turns.append(lab)
    path = path_from_turning(0, turns)
    if path.target != target:
        raise AssertionError(f"alternating path ends at {path.target}, not {target}")
    return path
