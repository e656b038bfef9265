"""Minimal chains of quadrilaterals in the Farey diagram.

The quadrilaterals are the images of ``Q = {1/0, 0/1, 1/2, 1/1}`` under the
level-2 congruence group (``z -> (az+b)/(cz+d)`` with ``c`` even).  Each is a
pair of Farey triangles glued along a *diagonal* whose endpoints both have
odd denominator.  The chain for ``p/q`` is obtained by walking back from the
triangle ``{parents(p/q), p/q}`` to ``{1/0, 0/1, 1/1}`` through Stern-Brocot
parents and collecting the quadrilaterals those triangles belong to.

Cyclic order on ``Q u {1/0}`` is the increasing order with ``1/0`` last;
in the upper half plane this is counter-clockwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from operator import itemgetter
from typing import Iterable, NamedTuple, Sequence

from .edgepath import EdgePath
from .rationals import INFINITY, ZERO, Fraction, det, is_farey_neighbor

__all__ = [
    "EdgeKind",
    "Edge",
    "Quad",
    "QuadChain",
    "edge_kind",
    "quad_chain",
    "strip_triangles",
    "lower_perimeter_path",
    "upper_perimeter_path",
    "lower_minimal_path",
    "upper_minimal_path",
    "ccw",
    "triangle_side",
    "triangle_move",
    "available_moves",
]


class EdgeKind(enum.Enum):
    A_TYPE = "A"
    C_TYPE = "C"


@dataclass(frozen=True)
class Edge:
    endpoints: frozenset

    @classmethod
    def of(cls, u: Fraction, v: Fraction) -> Edge:
        return cls(frozenset((u, v)))

    @property
    def kind(self) -> EdgeKind:
        return edge_kind(self)


def edge_kind(e: Edge | tuple[Fraction, Fraction]) -> EdgeKind:
    """``C_TYPE`` for quadrilateral diagonals (both denominators odd)."""
    u, v = tuple(e.endpoints) if isinstance(e, Edge) else e
    if not is_farey_neighbor(u, v):
        raise ValueError(f"{u} and {v} are not joined by an edge")
    if u.den % 2 == 1 and v.den % 2 == 1:
        return EdgeKind.C_TYPE
    return EdgeKind.A_TYPE


def ccw(x: Fraction, y: Fraction, z: Fraction) -> bool:
    """True when ``x, y, z`` occur in counter-clockwise (cyclically increasing) order."""
    return (x < y < z) or (y < z < x) or (z < x < y)


class Quad(NamedTuple):
    """Corners ``(a/c, b/d, (a+2b)/(c+2d), (a+b)/(c+d))`` counter-clockwise,
    with ``c`` even and ``ad - bc = 1``.  The diagonal joins corners 1 and 3."""

    corners: tuple[Fraction, Fraction, Fraction, Fraction]
    matrix: tuple[int, int, int, int]

    @classmethod
    def from_vertices(cls, vertices: Iterable[Fraction]) -> Quad:
        vs = sorted(set(vertices))
        if len(vs) != 4:
            raise ValueError("a quadrilateral has four distinct corners")
        evens = [v for v in vs if v.den % 2 == 0]
        if len(evens) != 2:
            raise ValueError(f"{[str(v) for v in vs]} has {len(evens)} even-denominator corners")
        start = min(evens, key=lambda v: v.den)
        k = vs.index(start)
        c0, c1, c2, c3 = vs[k:] + vs[:k]
        a, c = c0.num, c0.den
        b, d = c1.num, c1.den
        if a * d - b * c == -1:
            b, d = -b, -d
        if a * d - b * c != 1:
            raise ValueError("first two corners are not Farey neighbors")
        if Fraction.from_vector(a + b, c + d) != c3 or Fraction.from_vector(a + 2 * b, c + 2 * d) != c2:
            raise ValueError(f"{[str(v) for v in vs]} is not a translate of the fundamental quadrilateral")
        return cls((c0, c1, c2, c3), (a, b, c, d))

    @property
    def diagonal(self) -> frozenset:
        return frozenset((self.corners[1], self.corners[3]))

    @property
    def triangles(self) -> tuple[frozenset, frozenset]:
        c0, c1, c2, c3 = self.corners
        return frozenset((c0, c1, c3)), frozenset((c1, c2, c3))

    @property
    def perimeter_edges(self) -> list[frozenset]:
        c = self.corners
        return [frozenset((c[i], c[(i + 1) % 4])) for i in range(4)]

    def to_json(self) -> list[str]:
        return [str(v) for v in self.corners]


@dataclass(frozen=True)
class QuadChain:
    target: Fraction
    quads: tuple[Quad, ...]
    strip: tuple[tuple[Fraction, Fraction, Fraction], ...] = field(repr=False)

    @cached_property
    def triangles(self) -> tuple[frozenset, ...]:
        """The strip triangles crossed on the way to the target."""
        return tuple(frozenset(t) for t in self.strip)

    @cached_property
    def attach_edges(self) -> tuple[frozenset, ...]:
        """Edge shared by each pair of consecutive quadrilaterals."""
        out = []
        for q1, q2 in zip(self.quads, self.quads[1:]):
            shared = set(q1.corners) & set(q2.corners)
            if len(shared) != 2:
                raise AssertionError(f"consecutive quads share {len(shared)} corners")
            out.append(frozenset(shared))
        return tuple(out)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(v for quad in self.quads for v in quad.corners)

    @cached_property
    def max_den(self) -> int:
        return max((v.den for v in self.vertices), default=1)

    @cached_property
    def perimeters(self) -> tuple[EdgePath, EdgePath]:
        """Boundary walks from ``1/0`` below and above the target."""
        t = self.target
        if not self.quads:
            return EdgePath((INFINITY, t)), EdgePath((INFINITY, t))
        ordered = _sorted_finite(self.vertices, self.max_den)
        k = ordered.index(t)
        return (
            EdgePath([INFINITY, *ordered[: k + 1]], check=False),
            EdgePath([INFINITY, *reversed(ordered[k:])], check=False),
        )

    @cached_property
    def extremes(self) -> tuple[EdgePath, EdgePath]:
        """The lower and upper minimal paths."""
        lower, upper = self.perimeters
        return _shortcut(lower), _shortcut(upper)

    def all_triangles(self) -> list[frozenset]:
        return [t for quad in self.quads for t in quad.triangles]

    def edges(self) -> set[frozenset]:
        out = set()
        for quad in self.quads:
            out.update(quad.perimeter_edges)
            out.add(quad.diagonal)
        return out

    @cached_property
    def children(self) -> dict[Fraction, list[Fraction]]:
        """Chain edges directed from the smaller to the larger denominator."""
        out: dict[Fraction, list[Fraction]] = {}
        prev: tuple = ()
        for quad in self.quads:
            c0, c1, c2, c3 = quad.corners
            for u, v in ((c0, c1), (c1, c2), (c2, c3), (c3, c0), (c1, c3)):
                # consecutive quads share exactly one edge; list it once
                if u in prev and v in prev:
                    continue
                if u.den > v.den:
                    u, v = v, u
                out.setdefault(u, []).append(v)
            prev = quad.corners
        return out

    @cached_property
    def dag(self) -> tuple[tuple[Fraction, ...], tuple[tuple[int, ...], ...]]:
        """``children`` over integer ids.

        Vertices are ordered by decreasing ``(den, num)``, so every edge runs
        from a later id to an earlier one and ``1/0`` comes last.
        """
        children = self.children
        verts = sorted(self.vertices, key=itemgetter(1, 0), reverse=True)
        index = {v: i for i, v in enumerate(verts)}
        fwd = tuple(tuple(index[w] for w in children.get(v, ())) for v in verts)
        return tuple(verts), fwd

    def to_json(self) -> dict:
        return {"target": str(self.target), "quads": [q.to_json() for q in self.quads]}


def _check_target(target: Fraction) -> None:
    if target.den == 0 or target.num < 0 or target.num > target.den:
        raise ValueError(f"target must lie in [0, 1]; got {target}")


def strip_triangles(target: Fraction) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Farey triangles met by the geodesic from ``1/0`` to ``target``, in order.

    Each is returned as ``(left, mediant, right)``.  Their number is the sum of
    the regular continued fraction quotients of ``target``.
    """
    _check_target(target)
    if target.den == 1:
        return []
    # Stern-Brocot descent: each mediant lies in the triangle below the last
    p, q = target
    left, right = ZERO, INFINITY
    out = []
    while True:
        mn, md = left.num + right.num, left.den + right.den
        mid = Fraction._trusted(mn, md)
        out.append((left, mid, right))
        if mn == p and md == q:
            return out
        if p * md < mn * q:
            right = mid
        else:
            left = mid


def _other_apex(u: Fraction, v: Fraction, apex: Fraction) -> Fraction:
    """Third vertex of the triangle across edge ``u-v`` from ``apex``."""
    # sums and differences of neighbor vectors are primitive
    n, d = u.num + v.num, u.den + v.den
    if (n, d) == apex:
        if u.den == 0 or v.den == 0:
            raise ValueError("edge through 1/0 has no second finite apex")
        n, d = u.num - v.num, u.den - v.den
        if d < 0:
            n, d = -n, -d
    return Fraction._trusted(n, d)


def _quad_of_triangle(tri: Sequence[Fraction]) -> Quad:
    x, y, z = tri
    if x.den % 2 == 0:
        e, u, v = x, y, z
    elif y.den % 2 == 0:
        e, u, v = y, x, z
    else:
        e, u, v = z, x, y
    w = _other_apex(u, v, e)
    start, other = (e, w) if e.den < w.den else (w, e)
    a, c = start
    for b1, b3 in ((u, v), (v, u)):
        b, d = b1
        if a * d - b * c == -1:
            b, d = -b, -d
        n2, d2 = a + 2 * b, c + 2 * d
        if d2 < 0 or (d2 == 0 and n2 < 0):
            n2, d2 = -n2, -d2
        if (n2, d2) == other:
            return Quad((start, b1, other, b3), (a, b, c, d))
    raise AssertionError(f"{[str(x) for x in tri]} does not extend to a quadrilateral")


@lru_cache(maxsize=512)
def quad_chain(target: Fraction) -> QuadChain:
    """Minimal chain of quadrilaterals from ``1/0`` to ``target`` in ``[0, 1]``.

    ``0/1`` and ``1/1`` give an empty chain.
    """
    tris = strip_triangles(target)
    quads: list[Quad] = []
    corners: tuple = ()
    for tri in tris:
        if tri[0] in corners and tri[1] in corners and tri[2] in corners:
            continue
        quad = _quad_of_triangle(tri)
        quads.append(quad)
        corners = quad.corners
    return QuadChain(target=target, quads=tuple(quads), strip=tuple(tris))


def _as_chain(target_or_chain: Fraction | QuadChain) -> QuadChain:
    if isinstance(target_or_chain, QuadChain):
        return target_or_chain
    return quad_chain(target_or_chain)


# Below this denominator, distinct fractions in [0, 1] compare correctly as floats.
_FLOAT_SAFE_DEN = 10**7


def _sorted_finite(vertices: Iterable[Fraction], bound: int, reverse: bool = False) -> list[Fraction]:
    vs = [v for v in vertices if v.den]
    if bound < _FLOAT_SAFE_DEN:
        vs.sort(key=lambda v: v.num / v.den, reverse=reverse)
    else:
        vs.sort(reverse=reverse)
    return vs


def lower_perimeter_path(target: Fraction | QuadChain) -> EdgePath:
    """Counter-clockwise walk along the chain boundary from ``1/0``."""
    return _as_chain(target).perimeters[0]


def upper_perimeter_path(target: Fraction | QuadChain) -> EdgePath:
    """Clockwise walk along the chain boundary from ``1/0``."""
    return _as_chain(target).perimeters[1]


def _shortcut(path: EdgePath) -> EdgePath:
    # u -> v -> w with v even and u, w neighbors runs along two sides of one
    # triangle whose third side is a quad diagonal; take the diagonal instead
    vs = path.vertices
    out = [vs[0]]
    for i in range(1, len(vs)):
        v = vs[i]
        if i + 1 < len(vs) and v.den % 2 == 0 and abs(det(out[-1], vs[i + 1])) == 1:
            continue
        out.append(v)
    return EdgePath(out, check=False)


def lower_minimal_path(target: Fraction | QuadChain) -> EdgePath:
    return _as_chain(target).extremes[0]


def upper_minimal_path(target: Fraction | QuadChain) -> EdgePath:
    return _as_chain(target).extremes[1]


def triangle_side(path: EdgePath, triangle: Iterable[Fraction]) -> tuple[str, str]:
    """Classify how ``triangle`` meets ``path``.

    Returns ``(kind, side)`` where ``kind`` is ``"split"`` (one edge on the
    path, third vertex off it) or ``"merge"`` (two consecutive edges on the
    path) and ``side`` is ``"left"`` or ``"right"`` relative to the path.
    """
    tri = frozenset(triangle)
    if len(tri) != 3:
        raise ValueError("a triangle has three distinct vertices")
    x_, y_, z_ = tri
    if not (is_farey_neighbor(x_, y_) and is_farey_neighbor(y_, z_) and is_farey_neighbor(x_, z_)):
        raise ValueError("not a Farey triangle")
    vs = path.vertices
    index = {v: i for i, v in enumerate(vs)}
    on = [v for v in tri if v in index]
    if len(on) == 3:
        a, b, c = sorted(on, key=index.__getitem__)
        if index[b] == index[a] + 1 and index[c] == index[b] + 1:
            return "merge", "left" if ccw(a, b, c) else "right"
        raise ValueError("triangle meets the path in a non-adjacent way")
    if len(on) == 2:
        a, b = sorted(on, key=index.__getitem__)
        if index[b] != index[a] + 1:
            raise ValueError("triangle's edge is not an edge of the path")
        (z,) = tri - {a, b}
        return "split", "left" if ccw(a, b, z) else "right"
    raise ValueError("triangle has no edge on the path")


def triangle_move(
    path: EdgePath,
    triangle: Iterable[Fraction],
    direction: str,
    chain: QuadChain | None = None,
) -> EdgePath:
    """Apply a triangle move; a left move raises ``m`` by one, a right move lowers it.

    A triangle with one edge ``x -> y`` on the path replaces it by ``x -> z -> y``;
    a triangle with two edges ``x -> z -> y`` replaces them by ``x -> y``.
    ``direction`` must name the side of the path the triangle lies on.
    """
    tri = frozenset(triangle)
    if direction not in ("left", "right"):
        raise ValueError("direction is 'left' or 'right'")
    if chain is not None and tri not in set(chain.all_triangles()):
        raise ValueError("triangle is not in the chain")
    kind, side = triangle_side(path, tri)
    if side != direction:
        raise ValueError(f"triangle lies on the {side} of the path, not the {direction}")
    vs = list(path.vertices)
    index = {v: i for i, v in enumerate(vs)}
    if kind == "split":
        a, b = sorted((v for v in tri if v in index), key=index.__getitem__)
        (z,) = tri - {a, b}
        vs.insert(index[b], z)
    else:
        a, b, c = sorted(tri, key=index.__getitem__)
        del vs[index[b]]
    return EdgePath(vs)


def available_moves(path: EdgePath, chain: QuadChain) -> list[tuple[frozenset, str]]:
    """All ``(triangle, direction)`` pairs for which :func:`triangle_move` applies."""
    index = {v: i for i, v in enumerate(path.vertices)}
    moves = []
    for tri in chain.all_triangles():
        on = [v for v in tri if v in index]
        if len(on) < 2:
            continue
        try:
            _, side = triangle_side(path, tri)
        except ValueError:
            continue
        moves.append((tri, side))
    return moves
