"""Checkerboard-surface slopes of alternating link diagrams.

A diagram is reduced to what the slope count needs: for every crossing, the
component passing over, the component passing under, and (for
self-crossings) the crossing sign.  In a reduced alternating diagram one
checkerboard surface ``S`` has only right-twisted bands and the other ``T``
only left-twisted ones, and on component ``i``::

    s_i =  alpha_i + 2 P_i
    t_i = -alpha_i - 2 N_i

with ``alpha_i`` the crossings where ``i`` passes over another component and
``P_i``/``N_i`` its positive/negative self-crossings.

Two generators are included: the alternating 4-plat of ``L_{p/q}`` and
same-sign pretzel links.  Both trace the strands of an explicit planar
picture to assign components, over/under and signs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .paths import alternating_turning_path
from .rationals import Fraction

__all__ = [
    "Crossing",
    "LinkDiagram",
    "CheckerboardSlopes",
    "PlanarTrace",
    "checkerboard_slopes",
    "is_diagonal",
    "lemma9_check",
    "alternating_bound",
    "four_plat_trace",
    "four_plat_diagram",
    "pretzel_trace",
    "pretzel_diagram",
]


@dataclass(frozen=True)
class Crossing:
    over: int
    under: int
    sign: int

    @property
    def is_self(self) -> bool:
        return self.over == self.under

    def to_json(self) -> dict:
        return {"over": self.over, "under": self.under, "sign": self.sign}


@dataclass(frozen=True)
class LinkDiagram:
    """Crossing list of a link diagram with components numbered from 1."""

    n_components: int
    crossings: tuple[Crossing, ...]
    reduced_alternating: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.n_components < 1:
            raise ValueError("a diagram has at least one component")
        if not self.crossings:
            raise ValueError("empty diagram: no crossings")
        seen = set()
        for c in self.crossings:
            for k in (c.over, c.under):
                if not 1 <= k <= self.n_components:
                    raise ValueError(f"component index {k} outside 1..{self.n_components}")
                seen.add(k)
            if c.sign not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {c.sign}")
        if self.n_components >= 2 and len(seen) != self.n_components:
            missing = sorted(set(range(1, self.n_components + 1)) - seen)
            raise ValueError(f"components {missing} meet no crossing")

    @property
    def crossing_number(self) -> int:
        return len(self.crossings)

    def linking_numbers(self) -> dict[tuple[int, int], Q]:
        """Half the signed count of crossings between each pair of components."""
        out: dict[tuple[int, int], Q] = {}
        for c in self.crossings:
            if not c.is_self:
                key = (min(c.over, c.under), max(c.over, c.under))
                out[key] = out.get(key, Q(0)) + Q(c.sign, 2)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n_components,
            "crossings": [c.to_json() for c in self.crossings],
            "reduced_alternating": self.reduced_alternating,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> LinkDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            crossings = tuple(
                Crossing(int(c["over"]), int(c["under"]), int(c.get("sign", 1))) for c in data["crossings"]
            )
            return cls(int(data["n"]), crossings, bool(data.get("reduced_alternating", True)))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed diagram JSON: {exc!r}") from exc


@dataclass(frozen=True)
class CheckerboardSlopes:
    """Per-component slopes of the right-twisted surface ``s`` and the
    left-twisted surface ``t``."""

    s: tuple[int, ...]
    t: tuple[int, ...]

    def mirror(self) -> CheckerboardSlopes:
        # mirroring swaps band handedness and negates slopes
        return CheckerboardSlopes(tuple(-x for x in self.t), tuple(-x for x in self.s))

    def to_json(self) -> dict:
        return {"s": list(self.s), "t": list(self.t)}


def checkerboard_slopes(d: LinkDiagram) -> CheckerboardSlopes:
    if not d.crossings:
        raise ValueError("empty diagram: no crossings")
    n = d.n_components
    alpha = [0] * (n + 1)
    pos = [0] * (n + 1)
    neg = [0] * (n + 1)
    for c in d.crossings:
        if c.over != c.under:
            alpha[c.over] += 1
        elif c.sign > 0:
            pos[c.over] += 1
        else:
            neg[c.over] += 1
    s = tuple(alpha[i] + 2 * pos[i] for i in range(1, n + 1))
    t = tuple(-alpha[i] - 2 * neg[i] for i in range(1, n + 1))
    return CheckerboardSlopes(s, t)


def is_diagonal(cs: CheckerboardSlopes) -> tuple[bool, bool]:
    return len(set(cs.s)) == 1, len(set(cs.t)) == 1


def lemma9_check(d: LinkDiagram) -> bool:
    """``|sum(s_i - t_i)| == 2 * crossings``."""
    cs = checkerboard_slopes(d)
    return abs(sum(a - b for a, b in zip(cs.s, cs.t))) == 2 * d.crossing_number


def alternating_bound(d: LinkDiagram) -> dict | None:
    """Slope gap of two diagonal checkerboard surfaces against ``(2/n) * cr``.

    ``None`` unless both surfaces are diagonal.
    """
    cs = checkerboard_slopes(d)
    if not all(is_diagonal(cs)):
        return None
    gap = abs(cs.s[0] - cs.t[0])
    bound = Q(2 * d.crossing_number, d.n_components)
    return {"gap": gap, "bound": bound, "holds": gap >= bound, "equal": gap == bound}


# --- planar pictures -----------------------------------------------------


@dataclass
class PlanarTrace:
    """Strand-level data of a traced planar diagram.

    ``passes[c]`` lists the component numbers meeting crossing ``c`` as
    ``(over, under)``; ``walks[k]`` is component ``k+1``'s cyclic sequence of
    ``(crossing, is_over)`` events.
    """

    n_components: int
    over: list[int] = field(default_factory=list)
    under: list[int] = field(default_factory=list)
    signs: list[int] = field(default_factory=list)
    walks: list[list[tuple[int, bool]]] = field(default_factory=list)

    def is_alternating(self) -> bool:
        for walk in self.walks:
            if len(walk) < 2:
                continue
            for (_, a), (_, b) in zip(walk, walk[1:] + walk[:1]):
                if a == b:
                    return False
        return True

    def diagram(self) -> LinkDiagram:
        crossings = tuple(Crossing(o, u, s) for o, u, s in zip(self.over, self.under, self.signs))
        return LinkDiagram(self.n_components, crossings, self.is_alternating())


def _sign(over_dir: tuple[int, int], under_dir: tuple[int, int]) -> int:
    # positive when the under strand crosses the over strand from its right to its left
    return 1 if over_dir[0] * under_dir[1] - over_dir[1] * under_dir[0] > 0 else -1


class _Recorder:
    def __init__(self, n_crossings: int) -> None:
        self.dirs: list[dict[bool, tuple[int, tuple[int, int]]]] = [{} for _ in range(n_crossings)]
        self.walks: list[list[tuple[int, bool]]] = []

    def visit(self, comp: int, crossing: int, is_over: bool, direction: tuple[int, int]) -> None:
        self.dirs[crossing][is_over] = (comp, direction)
        self.walks[comp - 1].append((crossing, is_over))

    def finish(self) -> PlanarTrace:
        tr = PlanarTrace(len(self.walks), walks=self.walks)
        for k, rec in enumerate(self.dirs):
            if set(rec) != {True, False}:
                raise AssertionError(f"crossing {k} was not traversed by two strands")
            (oc, od), (uc, ud) = rec[True], rec[False]
            tr.over.append(oc)
            tr.under.append(uc)
            tr.signs.append(_sign(od, ud))
        return tr


def four_plat_trace(target: Fraction) -> PlanarTrace:
    """Trace the alternating 4-plat of ``L_{p/q}`` built from the
    alternating-sign turning numbers ``[b1, ..., bk]``.

    Four horizontal strands, numbered 1 (top) to 4.  Twist region ``i`` has
    ``|b_i|`` crossings between strands 2-3 for odd ``i`` and strands 1-2 for
    even ``i``; the strand running from upper-left to lower-right passes over
    when ``b_i > 0``.  The left end is capped (1,2),(3,4); the right end the
    same for odd ``k`` and (1,4),(2,3) for even ``k``.  Components are
    numbered in the order their leftmost strand is met from the top, each
    oriented left-to-right there.
    """
    turns = alternating_turning_path(target).turns
    word: list[tuple[int, int]] = []
    for idx, b in enumerate(turns):
        k = 2 if idx % 2 == 0 else 1
        word.extend([(k, 1 if b > 0 else -1)] * abs(b))
    left_cap = {1: 2, 2: 1, 3: 4, 4: 3}
    right_cap = left_cap if len(turns) % 2 else {1: 4, 4: 1, 2: 3, 3: 2}

    rec = _Recorder(len(word))
    seen: set[tuple[int, int]] = set()  # (column, strand position entering it from the left)
    ncols = len(word)
    for start in (1, 2, 3, 4):
        if (0, start) in seen:
            continue
        rec.walks.append([])
        comp = len(rec.walks)
        y, col, rightward = start, 0, True
        while True:
            if rightward:
                if col == ncols:
                    y, rightward = right_cap[y], False
                    continue
                seen.add((col, y))
                k, s = word[col]
                if y in (k, k + 1):
                    ullr = y == k
                    direction = (1, -1) if ullr else (1, 1)
                    rec.visit(comp, col, ullr == (s > 0), direction)
                    y = k + 1 if ullr else k
                col += 1
            else:
                if col == 0:
                    y, rightward = left_cap[y], True
                    if (0, y) in seen:
                        break
                    continue
                k, s = word[col - 1]
                if y in (k, k + 1):
                    ullr = y == k + 1
                    direction = (-1, 1) if ullr else (-1, -1)
                    rec.visit(comp, col - 1, ullr == (s > 0), direction)
                    y = k if ullr else k + 1
                col -= 1
                seen.add((col, y))
            if rightward and (col, y) in seen and col == 0:
                break
    return rec.finish()


def four_plat_diagram(target: Fraction) -> LinkDiagram:
    """Crossing list of the standard alternating 4-plat of ``L_{p/q}``."""
    return four_plat_trace(target).diagram()


def pretzel_trace(twists: Sequence[int]) -> PlanarTrace:
    """Trace the pretzel diagram ``P(t_1, ..., t_m)``.

    Column ``i`` is a vertical stack of ``|t_i|`` half twists; its NE and SE
    ends join the NW and SW ends of column ``i+1`` (cyclically, around the
    outside).  For ``t_i > 0`` the strand from upper-left to lower-right
    passes over.
    """
    twists = [int(t) for t in twists]
    if not twists:
        raise ValueError("a pretzel needs at least one column")
    if any(t == 0 for t in twists):
        raise ValueError("twist counts must be nonzero")
    if len({t > 0 for t in twists}) != 1:
        raise ValueError("mixed-sign twists do not give an alternating diagram")
    m = len(twists)
    offset = [0]
    for t in twists:
        offset.append(offset[-1] + abs(t))
    rec = _Recorder(offset[-1])
    seen: set[tuple[int, str, str]] = set()  # (column, end, side)
    for i0 in range(m):
        for side0 in ("L", "R"):
            if (i0, "top", side0) in seen:
                continue
            rec.walks.append([])
            comp = len(rec.walks)
            i, side, down = i0, side0, True
            while True:
                n, pos = abs(twists[i]), twists[i] > 0
                if down:
                    if (i, "top", side) in seen:
                        break
                    seen.add((i, "top", side))
                    for j in range(n):
                        ullr = side == "L"
                        rec.visit(comp, offset[i] + j, ullr == pos, (1, -1) if ullr else (-1, -1))
                        side = "R" if side == "L" else "L"
                    seen.add((i, "bottom", side))
                    # leave through the bottom and enter a neighbor from below
                    if side == "R":
                        i, side = (i + 1) % m, "L"
                    else:
                        i, side = (i - 1) % m, "R"
                    down = False
                else:
                    seen.add((i, "bottom", side))
                    for j in reversed(range(n)):
                        ullr = side == "R"
                        rec.visit(comp, offset[i] + j, ullr == pos, (-1, 1) if ullr else (1, 1))
                        side = "R" if side == "L" else "L"
                    seen.add((i, "top", side))
                    if side == "R":
                        i, side = (i + 1) % m, "L"
                    else:
                        i, side = (i - 1) % m, "R"
                    down = True
    return rec.finish()


def pretzel_diagram(twists: Iterable[int]) -> LinkDiagram:
    return pretzel_trace(list(twists)).diagram()
