"""Tabulate slope data for every reduced fraction up to a denominator bound."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import IO, Iterable

from .paths import DEFAULT_CAP
from .rationals import Fraction, reduced_fractions
from .slopes import InconsistencyError, slope_report

__all__ = ["CSV_HEADER", "SurveyRow", "survey_row", "survey", "write_csv", "write_json"]

CSV_HEADER = (
    "p",
    "q",
    "n",
    "crossing_number",
    "diameter",
    "num_minimal_paths",
    "slope_min",
    "slope_max",
    "sigma0",
    "sigma1",
    "linking_number",
)


@dataclass(frozen=True)
class SurveyRow:
    p: int
    q: int
    n_components: int
    crossing_number: int
    diameter: int
    num_minimal_paths: int
    slope_min: int
    slope_max: int
    sigma0: int
    sigma1: int
    linking_number: int | None

    def check(self) -> None:
        """Re-derive the row invariants; raise on a mismatch."""
        if self.diameter != self.slope_max - self.slope_min:
            raise InconsistencyError(f"{self.p}/{self.q}: diameter is not slope_max - slope_min")
        if self.n_components * self.diameter != 2 * self.crossing_number:
            raise InconsistencyError(f"{self.p}/{self.q}: n * diameter != 2 * crossing_number")
        if (self.n_components == 2) != (self.q % 2 == 0) or (self.linking_number is None) != (self.q % 2 == 1):
            raise InconsistencyError(f"{self.p}/{self.q}: component data inconsistent with parity of q")

    def values(self) -> tuple:
        return tuple(asdict(self).values())

    def to_json(self) -> dict:
        return dict(zip(CSV_HEADER, self.values()))


def survey_row(f: Fraction, cap: int = DEFAULT_CAP) -> SurveyRow:
    rep = slope_report(f, cap)
    return SurveyRow(
        p=f.num,
        q=f.den,
        n_components=rep.components,
        crossing_number=rep.crossing_number,
        diameter=rep.diameter,
        num_minimal_paths=rep.path_count,
        slope_min=rep.slope_min,
        slope_max=rep.slope_max,
        sigma0=rep.sigma0,
        sigma1=rep.sigma1,
        linking_number=rep.linking_number,
    )


def _row_worker(args: tuple[int, int, int]) -> SurveyRow:
    p, q, cap = args
    return survey_row(Fraction(p, q), cap)


def survey(max_q: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> list[SurveyRow]:
    """Rows for every reduced ``p/q`` with ``q <= max_q``, ordered by ``(q, p)``.

    With ``jobs > 1`` the rows are computed in worker processes; ``imap``
    keeps them in submission order, so the output does not depend on ``jobs``.
    """
    if max_q < 2:
        raise ValueError("max_q must be at least 2")
    work = [(f.num, f.den, cap) for f in reduced_fractions(max_q)]
    if jobs > 1:
        with Pool(jobs) as pool:
            rows = list(pool.imap(_row_worker, work, chunksize=64))
    else:
        rows = [_row_worker(w) for w in work]
    return rows


def write_csv(rows: Iterable[SurveyRow], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        row.check()
        writer.writerow("" if v is None else v for v in row.values())


def write_json(rows: Iterable[SurveyRow], out: IO[str]) -> None:
    checked = []
    for row in rows:
        row.check()
        checked.append(row.to_json())
    json.dump(checked, out, indent=1)
    out.write("\n")
