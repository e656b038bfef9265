"""Edge paths in the Farey diagram starting at ``1/0``.

A path is stored as its vertex list.  The signed continued fraction
``r + [b1, ..., bk]`` (``x -> r + 1/x`` then ``x -> b - 1/x``) is derived on
demand: the vertices are its partial sums, and ``bi`` is the turning number
at the vertex before the ``i``-th step after ``r/1``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rationals import INFINITY, Fraction, det

__all__ = [
    "EdgePath",
    "turning_numbers",
    "path_from_turning",
    "is_minimal",
    "is_minimal_geometric",
    "is_even",
    "m_of_path",
    "n_plus_minus",
]


class EdgePath:
    """Vertex sequence ``1/0, r/1, ...`` with consecutive Farey neighbors
    and no repeated vertex."""

    __slots__ = ("vertices", "_turning", "_m")

    def __init__(self, vertices: Iterable[Fraction], *, check: bool = True) -> None:
        self.vertices: tuple[Fraction, ...] = tuple(vertices)
        self._turning: tuple[int, tuple[int, ...]] | None = None
        self._m: int | None = None
        if check:
            _validate(self.vertices)

    @property
    def target(self) -> Fraction:
        return self.vertices[-1]

    @property
    def edges(self) -> list[tuple[Fraction, Fraction]]:
        v = self.vertices
        return list(zip(v, v[1:]))

    @property
    def r(self) -> int:
        return self.turning()[0]

    @property
    def turns(self) -> tuple[int, ...]:
        return self.turning()[1]

    def turning(self) -> tuple[int, tuple[int, ...]]:
        if self._turning is None:
            self._turning = _turning(self.vertices)
        return self._turning

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = m_of_path(self)
        return self._m

    def to_json(self) -> dict:
        r, turns = self.turning()
        return {
            "r": r,
            "turns": list(turns),
            "vertices": [str(v) for v in self.vertices],
            "m": self.m,
        }

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if isinstance(other, EdgePath):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        r, turns = self.turning()
        return f"EdgePath(r={r}, turns={list(turns)}, target={self.target})"


def _validate(vertices: Sequence[Fraction]) -> None:
    if len(vertices) < 2:
        raise ValueError("a path needs at least one edge")
    if vertices[0] != INFINITY:
        raise ValueError(f"path must start at 1/0, not {vertices[0]}")
    if len(set(vertices)) != len(vertices):
        raise ValueError("path repeats a vertex")
    for u, v in zip(vertices, vertices[1:]):
        if abs(det(u, v)) != 1:
            raise ValueError(f"{u} -> {v} is not an edge of the Farey diagram")


def _turning(vertices: Sequence[Fraction]) -> tuple[int, tuple[int, ...]]:
    # Signed representatives w_i obey w_i = b_i * w_{i-1} - w_{i-2}
    # starting from w_{-1} = (-1, 0), w_0 = (r, 1); det(w_{i-1}, w_i) = -1.
    first = vertices[1]
    if first.den != 1:
        raise ValueError("second vertex of a path must be an integer r/1")
    r = first.num
    pn, pd = -1, 0
    cn, cd = r, 1
    turns = []
    for un, ud in vertices[2:]:
        if cn * ud - un * cd != -1:
            un, ud = -un, -ud
        # cd is never 0 past w_0: only 1/0 has a zero denominator
        b, rem = divmod(ud + pd, cd)
        if rem or b == 0 or b * cn - pn != un:
            raise ValueError(f"malformed vertex list at {un}/{ud}")
        turns.append(b)
        pn, pd, cn, cd = cn, cd, un, ud
    return r, tuple(turns)


def turning_numbers(path: EdgePath) -> tuple[int, list[int]]:
    """``(r, [b1, ..., bk])`` whose partial sums are the path's vertices.

    >>> turning_numbers(path_from_turning(0, [2, -1, 1, -1, 1, -2]))
    (0, [2, -1, 1, -1, 1, -2])
    """
    r, turns = path.turning()
    return r, list(turns)


def path_from_turning(r: int, turns: Iterable[int]) -> EdgePath:
    """Inverse of :func:`turning_numbers`."""
    pn, pd = -1, 0
    cn, cd = int(r), 1
    vertices = [INFINITY, Fraction._trusted(cn, 1)]
    turns = [int(b) for b in turns]
    for b in turns:
        if b == 0:
            raise ValueError("turning numbers must be nonzero")
        nn, nd = b * cn - pn, b * cd - pd
        if nd == 0:
            raise ValueError(f"continued fraction r={r}, {turns} passes through 1/0")
        vertices.append(Fraction.from_vector(nn, nd))
        pn, pd, cn, cd = cn, cd, nn, nd
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"continued fraction r={r}, {turns} revisits a vertex")
    path = EdgePath(vertices, check=False)
    path._turning = (int(r), tuple(turns))
    return path


def is_minimal(path: EdgePath) -> bool:
    """Every turning number is at least 2 in absolute value."""
    return all(abs(b) >= 2 for b in path.turns)


def is_minimal_geometric(path: EdgePath) -> bool:
    """No two consecutive edges bound a common triangle.

    Two edges ``u-v``, ``v-w`` share a triangle exactly when ``u`` and ``w``
    are themselves neighbors.
    """
    v = path.vertices
    return all(abs(det(v[i - 1], v[i + 1])) != 1 for i in range(1, len(v) - 1))


def is_even(path: EdgePath) -> bool:
    return all(b % 2 == 0 for b in path.turns)


def m_of_path(path: EdgePath | Sequence[Fraction]) -> int:
    """Sum of edge determinants, skipping edges that touch ``1/0``."""
    v = path.vertices if isinstance(path, EdgePath) else tuple(path)
    total = 0
    for a, b in zip(v, v[1:]):
        if a.den and b.den:
            total += a.num * b.den - b.num * a.den
    return total


def n_plus_minus(path: EdgePath) -> tuple[int, int]:
    turns = path.turns
    pos = sum(1 for b in turns if b > 0)
    return pos, len(turns) - pos
