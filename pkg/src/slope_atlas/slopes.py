"""Boundary slopes of diagonal surfaces from minimal edge paths.

Slopes use the Hatcher-Thurston mirror convention for ``L_{p/q}``; tables
built on the opposite convention differ by a global sign.  Every slope is
computed three independent ways and any disagreement aborts with
:class:`InconsistencyError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .chain import quad_chain
from .edgepath import EdgePath, is_minimal, n_plus_minus
from .paths import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    alternating_turning_path,
    count_minimal_paths,
    enumerate_minimal_paths,
    even_path_knot,
    even_paths_link,
    extreme_paths,
)
from .rationals import Fraction

__all__ = [
    "InconsistencyError",
    "epsilon",
    "epsilon_sequence",
    "sigma0",
    "sigma1",
    "TargetData",
    "target_data",
    "slope_formulas",
    "slope_of_path",
    "SlopeReport",
    "slope_report",
    "crossing_number",
    "crossing_number_parts",
    "linking_number",
]

# i*p stays below 2**63 for every 0 < i < q <= this bound
_NUMPY_MAX_Q = 3_000_000_000


class InconsistencyError(RuntimeError):
    """Two routes to a quantity that must agree did not."""


def _check_open_unit(f: Fraction) -> None:
    if f.den < 2 or not 0 < f.num < f.den:
        raise ValueError(f"expected a reduced p/q with 0 < p < q; got {f}")


def epsilon(f: Fraction, i: int) -> int:
    """``(-1) ** floor(i*p/q)`` for ``0 < i < q``."""
    if not 0 < i < f.den:
        raise ValueError(f"index {i} outside 0 < i < {f.den}")
    return -1 if (i * f.num // f.den) & 1 else 1


def epsilon_sequence(f: Fraction) -> list[int]:
    """``[eps_1, ..., eps_{q-1}]``."""
    p, q = f.num, f.den
    return [-1 if (i * p // q) & 1 else 1 for i in range(1, q)]


def _parity_sums(p: int, q: int) -> tuple[int, int]:
    # (sum of eps_i over even i, over odd i), 0 < i < q, direct summation
    if q <= 1:
        return 0, 0
    if q < _NUMPY_MAX_Q:
        i = np.arange(1, q, dtype=np.int64)
        eps = 1 - 2 * ((i * p // q) & 1)
        return int(eps[1::2].sum()), int(eps[0::2].sum())
    even = sum(-1 if (i * p // q) & 1 else 1 for i in range(2, q, 2))
    odd = sum(-1 if (i * p // q) & 1 else 1 for i in range(1, q, 2))
    return even, odd


def sigma0(f: Fraction) -> int:
    """Sum of ``eps_i`` over even ``i`` in ``(0, q)``."""
    return _parity_sums(f.num, f.den)[0]


def sigma1(f: Fraction) -> int:
    """Sum of ``eps_i`` over odd ``i`` in ``(0, q)``."""
    return _parity_sums(f.num, f.den)[1]


@dataclass(frozen=True)
class TargetData:
    """Per-fraction constants shared by every path's slope."""

    target: Fraction
    components: int
    sigma0: int
    sigma1: int
    even_paths: tuple[EdgePath, ...]

    @property
    def even_m(self) -> tuple[int, ...]:
        return tuple(e.m for e in self.even_paths)

    @property
    def even_n_diff(self) -> tuple[int, ...]:
        out = []
        for e in self.even_paths:
            pos, neg = n_plus_minus(e)
            out.append(pos - neg)
        return tuple(out)


@lru_cache(maxsize=4096)
def target_data(target: Fraction) -> TargetData:
    _check_open_unit(target)
    s0, s1 = _parity_sums(target.num, target.den)
    if target.den % 2:
        evens: tuple[EdgePath, ...] = (even_path_knot(target),)
        n = 1
    else:
        evens = even_paths_link(target)
        n = 2
    return TargetData(target, n, s0, s1, evens)


def slope_formulas(path: EdgePath, data: TargetData) -> tuple[int, int, int]:
    """The three slope expressions, each scaled by 2 for links so they stay integral.

    Knots: ``2[(n+ - n-) - (n+ - n-)(e)]``, ``-2[m - m(e)]``, ``-2[m - 2 sigma0]``.
    Links (doubled): ``2(n+ - n-) - [(n+ - n-)(e0) + (n+ - n-)(e1)]``,
    ``-[2m - (m(e0) + m(e1))]``, ``-2[m - sigma0]``.
    """
    pos, neg = n_plus_minus(path)
    m = path.m
    if data.components == 1:
        (e_diff,) = data.even_n_diff
        (e_m,) = data.even_m
        return (
            2 * ((pos - neg) - e_diff),
            -2 * (m - e_m),
            -2 * (m - 2 * data.sigma0),
        )
    d0, d1 = data.even_n_diff
    m0, m1 = data.even_m
    return (
        2 * (pos - neg) - (d0 + d1),
        -(2 * m - (m0 + m1)),
        -2 * (m - data.sigma0),
    )


def slope_of_path(path: EdgePath, target: Fraction, data: TargetData | None = None) -> int:
    """Boundary slope of the diagonal surface carried by a minimal path."""
    if path.target != target:
        raise ValueError(f"path ends at {path.target}, not {target}")
    if not is_minimal(path):
        raise ValueError("slope is only defined for minimal paths")
    data = data or target_data(target)
    f1, f2, f3 = slope_formulas(path, data)
    if not f1 == f2 == f3:
        raise InconsistencyError(f"slope formulas disagree on {path}: {f1}, {f2}, {f3}")
    if data.components == 1:
        return f1
    if f1 % 2:
        raise InconsistencyError(f"non-integral link slope {f1}/2 on {path}")
    return f1 // 2


def crossing_number_parts(target: Fraction) -> dict[str, int]:
    """The independent crossing-number routes, unreconciled."""
    _check_open_unit(target)
    lower, upper = extreme_paths(target)
    i, j = len(upper) - 1, len(lower) - 1
    alt = alternating_turning_path(target)
    return {
        "m_difference": upper.m - lower.m,
        "edge_count": i + j - 2,
        "alternating": sum(abs(b) for b in alt.turns),
    }


def crossing_number(target: Fraction) -> int:
    """Crossing number of ``L_{p/q}``: ``m(upper) - m(lower)``, checked against
    the edge counts and the alternating-sign expansion."""
    parts = crossing_number_parts(target)
    values = set(parts.values())
    if len(values) != 1:
        raise InconsistencyError(f"crossing number routes disagree for {target}: {parts}")
    return values.pop()


def linking_number(target: Fraction) -> int:
    """``sigma1`` of a link fraction.  Only its absolute value is free of an
    orientation choice."""
    _check_open_unit(target)
    if target.den % 2:
        raise ValueError(f"{target} is a knot; linking number needs two components")
    return sigma1(target)


@dataclass
class SlopeReport:
    fraction: Fraction
    components: int
    slopes: list[tuple[EdgePath, int]]
    diameter: int
    crossing_number: int
    linking_number: int | None
    sigma0: int
    sigma1: int
    path_count: int
    truncated: bool = False
    slope_set: list[int] = field(init=False)

    def __post_init__(self) -> None:
        self.slope_set = sorted({s for _, s in self.slopes}, reverse=True)

    @property
    def slope_min(self) -> int:
        return min(s for _, s in self.slopes)

    @property
    def slope_max(self) -> int:
        return max(s for _, s in self.slopes)

    def to_json(self) -> dict:
        return {
            "fraction": str(self.fraction),
            "components": self.components,
            "crossing_number": self.crossing_number,
            "diameter": self.diameter,
            "linking_number": self.linking_number,
            "sigma0": self.sigma0,
            "sigma1": self.sigma1,
            "path_count": self.path_count,
            "truncated": self.truncated,
            "slope_set": self.slope_set,
            "slopes": [dict(path.to_json(), slope=s) for path, s in self.slopes],
        }


def slope_report(target: Fraction, cap: int = DEFAULT_CAP, *, extremes_only: bool = False) -> SlopeReport:
    """All diagonal slopes of ``L_{p/q}`` with diameter and crossing number.

    When more than ``cap`` minimal paths exist, only the two extreme paths
    are kept (they realize the minimum and maximum of ``m``), the count comes
    from :func:`count_minimal_paths`, and ``truncated`` is set.
    """
    _check_open_unit(target)
    data = target_data(target)
    chain = quad_chain(target)
    truncated = extremes_only
    paths: list[EdgePath] | None = None
    if not extremes_only:
        try:
            paths = enumerate_minimal_paths(target, cap, chain=chain)
        except EnumerationCapExceeded:
            truncated = True
    if paths is None:
        lower, upper = extreme_paths(chain)
        paths = [lower, upper]
        count = count_minimal_paths(target, chain=chain)
    else:
        count = len(paths)
    slopes = [(p, slope_of_path(p, target, data)) for p in paths]
    values = [s for _, s in slopes]
    diameter = max(values) - min(values)
    cr = crossing_number(target)
    n = data.components
    if n * diameter != 2 * cr:
        raise InconsistencyError(f"{target}: diameter {diameter} != (2/{n}) * {cr}")
    return SlopeReport(
        fraction=target,
        components=n,
        slopes=slopes,
        diameter=diameter,
        crossing_number=cr,
        linking_number=data.sigma1 if n == 2 else None,
        sigma0=data.sigma0,
        sigma1=data.sigma1,
        path_count=count,
        truncated=truncated,
    )
