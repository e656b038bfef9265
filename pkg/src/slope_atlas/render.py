"""Static SVG of a quadrilateral chain and edge paths in the upper half plane.

Vertices sit on the real axis at their exact rational positions; Farey edges
are semicircles, and edges to ``1/0`` are vertical rays clipped at the top
of the picture.  Output depends only on the inputs, so repeated renders are
byte-identical.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .chain import QuadChain
from .edgepath import EdgePath
from .rationals import Fraction

__all__ = ["render_svg", "PATH_COLORS"]

WIDTH, HEIGHT = 960, 560
MARGIN = 60
BASELINE = HEIGHT - 60
TOP = 40
LABEL_GAP = 22
PATH_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
QUAD_FILLS = ("#f1e4c9", "#dfe9f3")


def _x(f: Fraction) -> float:
    return MARGIN + (WIDTH - 2 * MARGIN) * f.num / f.den


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _segment(a: Fraction, b: Fraction) -> str:
    """Path commands from ``a`` (the current point) to ``b`` along their edge."""
    if b.den == 0:
        return f"L{_fmt(_x(a))},{TOP}"
    if a.den == 0:
        return f"L{_fmt(_x(b))},{TOP}L{_fmt(_x(b))},{BASELINE}"
    xa, xb = _x(a), _x(b)
    r = abs(xb - xa) / 2
    sweep = 1 if xa < xb else 0
    return f"A{_fmt(r)},{_fmt(r)} 0 0 {sweep} {_fmt(xb)},{BASELINE}"


def _start(v: Fraction, nxt: Fraction) -> str:
    # a path leaving 1/0 starts at the top of the ray above its first vertex
    if v.den == 0:
        return f"M{_fmt(_x(nxt))},{TOP}"
    return f"M{_fmt(_x(v))},{BASELINE}"


def _walk(vertices: Sequence[Fraction], closed: bool = False) -> str:
    vs = list(vertices)
    if closed:
        k = next(i for i, v in enumerate(vs) if v.den)
        vs = vs[k:] + vs[:k] + [vs[k]]
    parts = [_start(vs[0], vs[1])]
    for a, b in zip(vs, vs[1:]):
        if a.den == 0 and not closed and a is vs[0]:
            parts.append(f"L{_fmt(_x(b))},{BASELINE}")
            continue
        parts.append(_segment(a, b))
    return "".join(parts) + ("Z" if closed else "")


def render_svg(chain: QuadChain, paths: Sequence[tuple[str, EdgePath]] = ()) -> str:
    """SVG document showing ``chain`` with ``paths`` overlaid.

    ``paths`` pairs a legend label with each path.
    """
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{MARGIN}" y="24" font-size="16">chain to {escape(str(chain.target))}: '
        f"{len(chain.quads)} quadrilaterals</text>",
        '<g id="quads" stroke="#888" stroke-width="1">',
    ]
    for k, quad in enumerate(chain.quads):
        fill = QUAD_FILLS[k % 2]
        out.append(f'<path d="{_walk(quad.corners, closed=True)}" fill="{fill}" fill-opacity="0.8"/>')
    out.append("</g>")
    out.append('<g id="diagonals" stroke="#888" stroke-width="1" stroke-dasharray="4 3" fill="none">')
    for quad in chain.quads:
        a, b = quad.corners[1], quad.corners[3]
        out.append(f'<path d="{_walk((a, b))}"/>')
    out.append("</g>")
    out.append(
        f'<line x1="{MARGIN // 2}" y1="{BASELINE}" x2="{WIDTH - MARGIN // 2}" y2="{BASELINE}" stroke="black"/>'
    )
    out.append('<g id="paths" fill="none" stroke-linecap="round" stroke-linejoin="round">')
    n = len(paths)
    for k, (label, path) in enumerate(paths):
        color = PATH_COLORS[k % len(PATH_COLORS)]
        width = 2 + 2 * (n - 1 - k) / max(n - 1, 1)
        out.append(
            f'<path d="{_walk(path.vertices)}" stroke="{color}" stroke-width="{_fmt(width)}" '
            f'stroke-opacity="0.85"><title>{escape(label)}</title></path>'
        )
    out.append("</g>")
    verts = sorted((v for v in chain.vertices if v.den), key=lambda v: (v.num / v.den, v.den))
    # labels closer than LABEL_GAP to the previous one are dropped, except the target's
    labelled = [v for v in verts if v == chain.target]
    last = None
    for v in verts:
        x = _x(v)
        if (last is None or x - last >= LABEL_GAP) and all(abs(x - _x(t)) >= LABEL_GAP or t == v for t in labelled):
            labelled.append(v)
            last = x
    out.append('<g id="vertices" font-size="10" text-anchor="middle">')
    for v in verts:
        x = _fmt(_x(v))
        out.append(f'<circle cx="{x}" cy="{BASELINE}" r="2.5" fill="black"/>')
        if v in labelled:
            weight = ' font-weight="bold"' if v == chain.target else ""
            out.append(f'<text x="{x}" y="{BASELINE + 16}"{weight}>{escape(str(v))}</text>')
    out.append("</g>")
    out.append('<g id="legend" font-size="12">')
    for k, (label, _) in enumerate(paths[:20]):
        y = 44 + 16 * k
        color = PATH_COLORS[k % len(PATH_COLORS)]
        out.append(f'<rect x="{WIDTH - 250}" y="{y - 9}" width="14" height="4" fill="{color}"/>')
        out.append(f'<text x="{WIDTH - 230}" y="{y}">{escape(label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
