"""Share tables and conditional acceptance probabilities.

A share table holds per-year monthly probability columns plus the
cumulated column built from month totals across years. A conditional
table holds the per-cell accepted/submitted ratios, which do not sum
to 1; their column sums are first-class values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ingest import MONTHS_PER_YEAR, CountMatrix, DataError, _check_pair


@dataclass(frozen=True)
class ShareTable:
    """Monthly probability columns q[m, y] plus the cumulated distribution."""

    years: tuple
    per_year: tuple  # 12 rows, one share per year
    cumulated: tuple  # 12 shares over summed counts
    totals: tuple
    cumulated_counts: tuple

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.per_year)


@dataclass(frozen=True)
class ConditionalTable:
    """Per-cell acceptance ratios; None marks months with no submissions."""

    years: tuple
    per_year: tuple  # 12 rows of ratios or None
    cumulated: tuple
    sums: tuple  # per-year sums over defined entries
    cumulated_sum: float

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.per_year)


def shares(matrix: CountMatrix) -> ShareTable:
    """Per-year and cumulated monthly shares of a count matrix."""
    totals = matrix.totals
    for y, total in zip(matrix.years, totals):
        if total == 0:
            raise DataError(f"empty year {y}: zero total")
    per_year = tuple(
        tuple(matrix.counts[m][j] / totals[j] for j in range(len(matrix.years)))
        for m in range(MONTHS_PER_YEAR)
    )
    cumulated_counts = matrix.cumulated
    grand = sum(cumulated_counts)
    cumulated = tuple(c / grand for c in cumulated_counts)
    return ShareTable(matrix.years, per_year, cumulated, totals, cumulated_counts)


def conditional(submitted: CountMatrix, accepted: CountMatrix) -> ConditionalTable:
    """Acceptance probability per (month, year) cell and cumulated per month.

    A month with zero submissions has no defined acceptance rate; the cell
    is None and is excluded from column sums and downstream entropies.
    """
    _check_pair(submitted, accepted)
    n_years = len(submitted.years)
    per_year = []
    for m in range(MONTHS_PER_YEAR):
        row = []
        for j in range(n_years):
            s = submitted.counts[m][j]
            a = accepted.counts[m][j]
            row.append(None if s == 0 else a / s)
        per_year.append(tuple(row))
    sub_cum = submitted.cumulated
    acc_cum = accepted.cumulated
    cumulated = tuple(
        None if sub_cum[m] == 0 else acc_cum[m] / sub_cum[m]
        for m in range(MONTHS_PER_YEAR)
    )
    sums = tuple(
        sum(row[j] for row in per_year if row[j] is not None)
        for j in range(n_years)
    )
    cumulated_sum = sum(v for v in cumulated if v is not None)
    return ConditionalTable(submitted.years, tuple(per_year), cumulated, sums, cumulated_sum)


def normalize(vector: Sequence["float | None"]) -> tuple:
    """Scale a non-negative vector to shares summing to 1, preserving None."""
    defined = [v for v in vector if v is not None]
    if any(v < 0 for v in defined):
        raise DataError("negative entry")
    total = sum(defined)
    if total <= 0:
        raise DataError("cannot normalize: no positive entries")
    return tuple(None if v is None else v / total for v in vector)
