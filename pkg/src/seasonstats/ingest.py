"""Input parsing and count-matrix construction.

Two input shapes are supported: event-level CSV (one row per submission
with its final decision) and pre-aggregated counts CSV (one row per
journal, year, month). Published share tables can also be inverted back
to integer counts.
"""
from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass
from datetime import date
from typing import Iterable, Sequence

MONTHS_PER_YEAR = 12
DECISIONS = ("accepted", "rejected")

EVENT_HEADER = ("journal", "submitted_at", "decision")
COUNTS_HEADER = ("journal", "year", "month", "submitted", "accepted")


class DataError(ValueError):
    """Invalid input data (malformed rows, broken invariants, empty selections)."""


class RoundingAdjustment(UserWarning):
    """A reconstructed count column needed a one-count correction."""


@dataclass(frozen=True)
class EventRecord:
    journal: str
    submitted_at: date
    decision: str

    def __post_init__(self):
        if self.decision not in DECISIONS:
            raise DataError(f"unknown decision {self.decision!r}")


@dataclass(frozen=True)
class CountMatrix:
    """Monthly event counts: 12 month rows by one column per year."""

    years: tuple
    counts: tuple  # 12 rows, each a tuple with one entry per year
    outcome: str  # "submitted" or "accepted"

    def __post_init__(self):
        if len(self.counts) != MONTHS_PER_YEAR:
            raise DataError("count matrix must have 12 month rows")
        if not self.years:
            raise DataError("count matrix must cover at least one year")
        for row in self.counts:
            if len(row) != len(self.years):
                raise DataError("count row width does not match year list")
            for v in row:
                if v < 0 or v != int(v):
                    raise DataError("counts must be non-negative integers")
        if self.outcome not in ("submitted", "accepted"):
            raise DataError(f"unknown outcome {self.outcome!r}")

    @property
    def totals(self) -> tuple:
        """Per-year column sums."""
        return tuple(sum(row[j] for row in self.counts) for j in range(len(self.years)))

    @property
    def cumulated(self) -> tuple:
        """Month totals across years."""
        return tuple(sum(row) for row in self.counts)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.counts)

    def series(self) -> tuple:
        """Counts in chronological order, January of the first year onward."""
        return tuple(self.counts[m][j] for j in range(len(self.years))
                     for m in range(MONTHS_PER_YEAR))


def _check_pair(submitted: CountMatrix, accepted: CountMatrix) -> None:
    if submitted.years != accepted.years:
        raise DataError("submitted and accepted matrices cover different years")
    for m in range(MONTHS_PER_YEAR):
        for j in range(len(submitted.years)):
            if accepted.counts[m][j] > submitted.counts[m][j]:
                raise DataError(
                    f"accepted exceeds submitted in month {m + 1}, year {submitted.years[j]}")


def parse_events(stream: Iterable[str]) -> list:
    """Parse event-level CSV with header journal,submitted_at,decision."""
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise DataError("empty input, expected a header row") from None
    if tuple(h.strip().lower() for h in header) != EVENT_HEADER:
        raise DataError(f"expected header {','.join(EVENT_HEADER)} at line 1")
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 3:
            raise DataError(f"expected 3 columns at line {lineno}, got {len(row)}")
        journal, raw_date, raw_decision = (field.strip() for field in row)
        try:
            submitted_at = date.fromisoformat(raw_date)
        except ValueError as exc:
            raise DataError(f"invalid date {raw_date!r} at line {lineno}: {exc}") from None
        decision = raw_decision.lower()
        if decision not in DECISIONS:
            raise DataError(f"unknown decision {raw_decision!r} at line {lineno}")
        records.append(EventRecord(journal, submitted_at, decision))
    return records


def aggregate(events: Sequence[EventRecord], journal: str,
              years: Sequence[int]) -> tuple:
    """Count events into a (submitted, accepted) matrix pair."""
    years = tuple(sorted(set(int(y) for y in years)))
    if not years:
        raise DataError("empty year range")
    index = {y: j for j, y in enumerate(years)}
    sub = [[0] * len(years) for _ in range(MONTHS_PER_YEAR)]
    acc = [[0] * len(years) for _ in range(MONTHS_PER_YEAR)]
    selected = 0
    for ev in events:
        if ev.journal != journal or ev.submitted_at.year not in index:
            continue
        selected += 1
        m = ev.submitted_at.month - 1
        j = index[ev.submitted_at.year]
        sub[m][j] += 1
        if ev.decision == "accepted":
            acc[m][j] += 1
    if selected == 0:
        raise DataError(f"empty selection: no {journal!r} events in {years[0]}-{years[-1]}")
    submitted = CountMatrix(years, tuple(tuple(r) for r in sub), "submitted")
    accepted = CountMatrix(years, tuple(tuple(r) for r in acc), "accepted")
    return submitted, accepted


def parse_counts(stream: Iterable[str]) -> list:
    """Parse counts CSV with header journal,year,month,submitted,accepted."""
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise DataError("empty input, expected a header row") from None
    if tuple(h.strip().lower() for h in header) != COUNTS_HEADER:
        raise DataError(f"expected header {','.join(COUNTS_HEADER)} at line 1")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 5:
            raise DataError(f"expected 5 columns at line {lineno}, got {len(row)}")
        journal = row[0].strip()
        try:
            year, month, submitted, accepted = (int(v) for v in row[1:])
        except ValueError:
            raise DataError(f"non-integer count field at line {lineno}") from None
        if not 1 <= month <= 12:
            raise DataError(f"month out of range at line {lineno}")
        if submitted < 0 or accepted < 0:
            raise DataError(f"negative count at line {lineno}")
        if accepted > submitted:
            raise DataError(f"accepted exceeds submitted at line {lineno}")
        rows.append((journal, year, month, submitted, accepted))
    return rows


def matrices_from_counts(rows: Sequence[tuple], journal: str,
                         years: "Sequence[int] | None" = None) -> tuple:
    """Build the (submitted, accepted) pair for one journal from counts rows.

    Every selected year must be present as a complete 12-month block; a
    month with no events must be an explicit zero row.
    """
    mine = [r for r in rows if r[0] == journal]
    if not mine:
        raise DataError(f"empty selection: no rows for journal {journal!r}")
    if years is None:
        years = sorted(set(r[1] for r in mine))
    years = tuple(sorted(set(int(y) for y in years)))
    if not years:
        raise DataError("empty year range")
    cells = {}
    for _, year, month, submitted, accepted in mine:
        if year not in years:
            continue
        key = (year, month)
        if key in cells:
            raise DataError(f"duplicate row for {journal} {year}-{month:02d}")
        cells[key] = (submitted, accepted)
    for y in years:
        for m in range(1, MONTHS_PER_YEAR + 1):
            if (y, m) not in cells:
                raise DataError(f"missing month {y}-{m:02d} for journal {journal!r}")
    sub = tuple(tuple(cells[(y, m + 1)][0] for y in years) for m in range(MONTHS_PER_YEAR))
    acc = tuple(tuple(cells[(y, m + 1)][1] for y in years) for m in range(MONTHS_PER_YEAR))
    submitted = CountMatrix(years, sub, "submitted")
    accepted = CountMatrix(years, acc, "accepted")
    _check_pair(submitted, accepted)
    return submitted, accepted


def counts_from_shares(totals: Sequence[int], shares: Sequence[Sequence[float]],
                       years: "Sequence[int] | None" = None,
                       outcome: str = "submitted") -> CountMatrix:
    """Reconstruct integer counts from published share columns and totals.

    Each count is share * total rounded to the nearest integer (half away
    from zero). If rounding leaves a column one short or one over, the
    entry with the largest rounding residual is adjusted and a
    RoundingAdjustment warning records it; a larger mismatch means the
    shares and total are inconsistent.
    """
    totals = tuple(int(t) for t in totals)
    if years is None:
        years = tuple(range(len(totals)))
    years = tuple(int(y) for y in years)
    if len(years) != len(totals):
        raise DataError("totals and years lists differ in length")
    if len(shares) != MONTHS_PER_YEAR:
        raise DataError("share table must have 12 month rows")
    columns = []
    for j, total in enumerate(totals):
        col = [float(shares[m][j]) for m in range(MONTHS_PER_YEAR)]
        if any(s < 0 for s in col):
            raise DataError(f"negative share in column {j}")
        if abs(sum(col) - 1.0) > 5e-4:
            raise DataError(f"share column {j} does not sum to 1")
        raw = [s * total for s in col]
        rounded = [math.floor(x + 0.5) for x in raw]
        delta = total - sum(rounded)
        if abs(delta) > 1:
            raise DataError(f"inconsistent shares: column {j} off by {delta} after rounding")
        if delta != 0:
            residuals = [x - r for x, r in zip(raw, rounded)]
            pick = max(range(MONTHS_PER_YEAR),
                       key=lambda m: residuals[m] if delta > 0 else -residuals[m])
            rounded[pick] += delta
            warnings.warn(
                f"adjusted month {pick + 1} of column {j} by {delta} to match total {total}",
                RoundingAdjustment,
                stacklevel=2,
            )
        columns.append(rounded)
    counts = tuple(tuple(columns[j][m] for j in range(len(totals)))
                   for m in range(MONTHS_PER_YEAR))
    return CountMatrix(years, counts, outcome)
