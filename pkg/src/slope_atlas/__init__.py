"""Boundary slopes of diagonal essential surfaces in 2-bridge link exteriors,
computed from minimal edge paths in the Farey diagram."""

from .chain import Quad, QuadChain, quad_chain
from .checkerboard import LinkDiagram, checkerboard_slopes, four_plat_diagram, pretzel_diagram
from .edgepath import EdgePath, path_from_turning
from .paths import count_minimal_paths, enumerate_minimal_paths, extreme_paths
from .rationals import Fraction, make_fraction, parents
from .slopes import SlopeReport, crossing_number, sigma0, sigma1, slope_report

__all__ = [
    "Fraction",
    "make_fraction",
    "parents",
    "Quad",
    "QuadChain",
    "quad_chain",
    "EdgePath",
    "path_from_turning",
    "count_minimal_paths",
    "enumerate_minimal_paths",
    "extreme_paths",
    "SlopeReport",
    "slope_report",
    "crossing_number",
    "sigma0",
    "sigma1",
    "LinkDiagram",
    "checkerboard_slopes",
    "four_plat_diagram",
    "pretzel_diagram",
]
__version__ = "0.1.0"
