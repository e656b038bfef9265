"""Independent reference implementations used to cross-check the library."""

from __future__ import annotations

from fractions import Fraction as Q

from slope_atlas.chain import quad_chain
from slope_atlas.rationals import INFINITY, Fraction, det


def brute_minimal_paths(f: Fraction) -> list[tuple[Fraction, ...]]:
    """Depth-first search over the chain's edges for simple paths from 1/0
    to ``f`` that never turn around a single triangle (|b_i| >= 2)."""
    adj: dict[Fraction, list[Fraction]] = {}
    for e in quad_chain(f).edges():
        a, b = tuple(e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    out = []

    def go(path):
        v = path[-1]
        if v == f:
            out.append(tuple(path))
            return
        for w in adj[v]:
            if w in path or len(path) >= 2 and abs(det(path[-2], w)) == 1:
                continue
            go(path + [w])

    go([INFINITY])
    return sorted(out)


def evaluate_cf(r: int, turns) -> Q | None:
    """Value of ``r + 1/(b1 - 1/(b2 - ...))``; ``None`` stands for 1/0."""
    x: Q | None = None  # tail value, None = infinity
    for b in reversed(turns):
        x = Q(b) if x is None else (None if x == 0 else b - 1 / x)
    if x is None:
        return Q(r)
    return None if x == 0 else r + 1 / x


def epsilon_direct(p: int, q: int) -> list[int]:
    return [(-1) ** (i * p // q) for i in range(1, q)]


def int_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    m = [row[:] for row in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def fox_determinant(trace) -> int:
    """Link determinant from Fox colorings of a traced planar diagram.

    Arcs run between consecutive under-passages of each strand; each crossing
    contributes the relation 2*over - under_in - under_out.
    """
    n = len(trace.over)
    over_arc, under, arcs = {}, {}, 0
    for walk in trace.walks:
        idx = [k for k, (_, is_over) in enumerate(walk) if not is_over]
        if not idx:
            for c, _ in walk:
                over_arc[c] = arcs
            arcs += 1
            continue
        walk = walk[idx[0]:] + walk[: idx[0]]
        j = -1
        for c, is_over in walk:
            if is_over:
                over_arc[c] = arcs + j
            else:
                j += 1
                under[c] = (arcs + (j - 1) % len(idx), arcs + j)
        arcs += len(idx)
    matrix = [[0] * arcs for _ in range(n)]
    for c in range(n):
        a, b = under[c]
        matrix[c][over_arc[c]] += 2
        matrix[c][a] -= 1
        matrix[c][b] -= 1
    return abs(int_det([row[1:] for row in matrix[1:]])) if n > 1 else 1
