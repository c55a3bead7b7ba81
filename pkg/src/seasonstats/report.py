"""Report assembly: six analysis tables with CSV, JSON, and Markdown forms.

The documents mirror a fixed publication layout: submitted shares (t1),
accepted shares (t2), conditional acceptance probabilities (t3), monthly
information-entropy terms of the conditionals (t4), the index block (t5),
and the dominant Fourier peaks (t6).

Index-block inputs are taken from the tables at their quoted precision:
shares at the configured precision, acceptance ratios at the four decimal
places the reference layout quotes them with (rounded, then renormalized
where a distribution is required; conditional diversities use the raw
rounded ratios). This keeps the index table arithmetically consistent
with the share and conditional tables as quoted.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_DOWN, ROUND_HALF_UP, Decimal
from typing import Sequence

from .indices import diversity, entropy, exponential_entropy, gini, hhi, monthly_entropy_terms, theil
from .ingest import MONTHS_PER_YEAR, CountMatrix, DataError, _check_pair
from .probability import ConditionalTable, ShareTable, conditional, normalize, shares
from .spectral import SpectralPeak, top_peaks
from .stats import DescriptiveStats, TestResult, chi_square_uniform, describe, t_one_sample, z_one_sample

MONTH_LABELS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
                "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")
DOCUMENT_NAMES = ("t1_submitted", "t2_accepted", "t3_conditional",
                  "t4_monthly_entropy", "t5_indices", "t6_fourier")
FORMATS = ("csv", "json", "md")
TOP_PEAK_COUNT = 2
# acceptance ratios are quoted one place short of shares in the reference
# layout; the index chain reads them at that quotation
RATIO_QUOTED_PLACES = 4


def round_half_away(x: float, places: int) -> float:
    """Round to `places` decimals, halves away from zero."""
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))

def quote_half_down(x: float, places: int) -> float:
    """Round to `places` decimals, halves toward zero.

    The reference tables resolve exact ties this way (17/32 is quoted
    0.5312 and 30/64 is quoted 0.4687), so the index chain quotes its
    inputs with the same rule; rendered output keeps the
    half-away-from-zero convention.
    """
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_DOWN))

def format_number(x: float, places: int) -> str:
    q = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class AnalysisOptions:
    q_orders: tuple = (1.0, 2.0)
    precision: int = 5
    t_null: float = 0.0833333
    z_sigma: "float | None" = None
    z_null: "float | None" = None

    def __post_init__(self):
        if not 1 <= int(self.precision) <= 12:
            raise DataError("precision must lie in 1..12")
        if any(q < 0 for q in self.q_orders):
            raise DataError("diversity orders must be non-negative")
        if (self.z_sigma is None) != (self.z_null is None):
            raise DataError("z test needs both a sigma and a null value")
        if self.z_sigma is not None and self.z_sigma <= 0:
            raise DataError("z sigma must be positive")


@dataclass(frozen=True)
class ShareFooter:
    chi_square: TestResult
    entropy: float
    t: TestResult
    z: "TestResult | None"
    stats: DescriptiveStats


@dataclass(frozen=True)
class ConditionalFooter:
    total: float  # sum of the defined ratios
    cond_entropy: float  # entropy of the raw ratio column
    t: TestResult
    z: "TestResult | None"
    stats: DescriptiveStats


@dataclass(frozen=True)
class IndexColumn:
    label: str
    diversities: tuple  # (order q, value) pairs
    exponential_entropy: float
    theil: float
    hhi: float
    gini: float


@dataclass(frozen=True)
class NamedDocument:
    name: str
    text: str


@dataclass(frozen=True)
class AnalysisBundle:
    journal: str
    years: tuple
    column_labels: tuple  # per-year labels plus the cumulated label
    submitted: ShareTable
    accepted: ShareTable
    conditional: ConditionalTable
    submitted_footers: tuple
    accepted_footers: tuple
    conditional_footers: tuple
    entropy_terms: tuple  # per column, 12 terms with None preserved
    index_blocks: tuple  # (block name, tuple of IndexColumn) pairs
    peaks: tuple  # (series name, list of SpectralPeak) pairs
    options: AnalysisOptions


def _share_footer(share_col, counts_col, options) -> ShareFooter:
    z = None
    if options.z_sigma is not None:
        z = z_one_sample(share_col, options.z_null, options.z_sigma)
    return ShareFooter(
        chi_square=chi_square_uniform(counts_col),
        entropy=entropy(share_col),
        t=t_one_sample(share_col, options.t_null),
        z=z,
        stats=describe(share_col),
    )

def _conditional_footer(col, options) -> ConditionalFooter:
    z = None
    if options.z_sigma is not None:
        z = z_one_sample(col, options.z_null, options.z_sigma)
    return ConditionalFooter(
        total=sum(v for v in col if v is not None),
        cond_entropy=entropy(col),
        t=t_one_sample(col, options.t_null),
        z=z,
        stats=describe(col),
    )

def _index_column(label, vector, options, ratios: bool) -> IndexColumn:
    places = RATIO_QUOTED_PLACES if ratios else options.precision
    rounded = tuple(None if v is None else quote_half_down(v, places)
                    for v in vector)
    normalized = normalize(rounded)
    if ratios:
        divs = tuple((q, diversity(rounded, q)) for q in options.q_orders)
    else:
        divs = tuple((q, diversity(normalized, q)) for q in options.q_orders)
    return IndexColumn(
        label=label,
        diversities=divs,
        exponential_entropy=exponential_entropy(normalized),
        theil=theil(normalized),
        hhi=hhi(normalized),
        gini=gini(normalized),
    )


def build_bundle(submitted: CountMatrix, accepted: CountMatrix,
                 options: "AnalysisOptions | None" = None,
                 journal: str = "") -> AnalysisBundle:
    """Assemble every table for one journal's (submitted, accepted) pair."""
    if options is None:
        options = AnalysisOptions()
    _check_pair(submitted, accepted)
    years = submitted.years
    labels = tuple(str(y) for y in years) + (f"[{years[0]}-{years[-1]}]",)

    sub_shares = shares(submitted)
    acc_shares = shares(accepted)
    cond = conditional(submitted, accepted)

    def _columns(table: ShareTable, matrix: CountMatrix):
        cols = [(table.column(j), matrix.column(j)) for j in range(len(years))]
        cols.append((table.cumulated, matrix.cumulated))
        return cols

    def _context(table_name, label, fn, *args):
        try:
            return fn(*args)
        except ValueError as exc:
            raise DataError(f"{table_name}, column {label}: {exc}") from exc

    sub_footers = tuple(
        _context("t1_submitted", lab, _share_footer, share_col, counts_col, options)
        for lab, (share_col, counts_col) in zip(labels, _columns(sub_shares, submitted))
    )
    acc_footers = tuple(
        _context("t2_accepted", lab, _share_footer, share_col, counts_col, options)
        for lab, (share_col, counts_col) in zip(labels, _columns(acc_shares, accepted))
    )

    cond_cols = [cond.column(j) for j in range(len(years))] + [cond.cumulated]
    cond_footers = tuple(
        _context("t3_conditional", lab, _conditional_footer, col, options)
        for lab, col in zip(labels, cond_cols)
    )
    terms = tuple(monthly_entropy_terms(col) for col in cond_cols)

    index_blocks = (
        ("submitted", tuple(
            _context("t5_indices submitted", lab, _index_column, lab, col, options, False)
            for lab, (col, _) in zip(labels, _columns(sub_shares, submitted)))),
        ("accepted", tuple(
            _context("t5_indices accepted", lab, _index_column, lab, col, options, False)
            for lab, (col, _) in zip(labels, _columns(acc_shares, accepted)))),
        ("conditional", tuple(
            _context("t5_indices conditional", lab, _index_column, lab, col, options, True)
            for lab, col in zip(labels, cond_cols))),
    )

    peaks = (
        ("submitted", top_peaks(submitted.series(), TOP_PEAK_COUNT)),
        ("accepted", top_peaks(accepted.series(), TOP_PEAK_COUNT)),
    )

    return AnalysisBundle(
        journal=journal,
        years=years,
        column_labels=labels,
        submitted=sub_shares,
        accepted=acc_shares,
        conditional=cond,
        submitted_footers=sub_footers,
        accepted_footers=acc_footers,
        conditional_footers=cond_footers,
        entropy_terms=terms,
        index_blocks=index_blocks,
        peaks=peaks,
        options=options,
    )


def _fmt(value, places):
    if value is None:
        return "NA"
    return format_number(value, places)

def _jnum(value, places):
    if value is None:
        return None
    return float(format_number(value, places))


def _share_grid(bundle, table: ShareTable, footers, places):
    header = ["row"] + list(bundle.column_labels)
    rows = []
    for m in range(MONTHS_PER_YEAR):
        cells = [table.per_year[m][j] for j in range(len(bundle.years))]
        cells.append(table.cumulated[m])
        rows.append([MONTH_LABELS[m]] + [_fmt(v, places) for v in cells])
    def footer_row(label, pick):
        rows.append([label] + [_fmt(pick(f), places) for f in footers])
    footer_row("chi_square", lambda f: f.chi_square.statistic)
    footer_row("chi_square_p", lambda f: f.chi_square.p_value)
    footer_row("entropy", lambda f: f.entropy)
    footer_row("t", lambda f: f.t.statistic)
    footer_row("t_p", lambda f: f.t.p_value)
    if footers[0].z is not None:
        footer_row("z", lambda f: f.z.statistic)
        footer_row("z_p", lambda f: f.z.p_value)
    footer_row("mean", lambda f: f.stats.mean)
    footer_row("std_dev", lambda f: f.stats.std_dev)
    footer_row("mean_minus_2sd", lambda f: f.stats.band_low)
    footer_row("mean_plus_2sd", lambda f: f.stats.band_high)
    return header, rows

def _conditional_grid(bundle, places):
    cond = bundle.conditional
    header = ["row"] + list(bundle.column_labels)
    rows = []
    for m in range(MONTHS_PER_YEAR):
        cells = [cond.per_year[m][j] for j in range(len(bundle.years))]
        cells.append(cond.cumulated[m])
        rows.append([MONTH_LABELS[m]] + [_fmt(v, places) for v in cells])
    footers = bundle.conditional_footers
    def footer_row(label, pick):
        rows.append([label] + [_fmt(pick(f), places) for f in footers])
    footer_row("sum", lambda f: f.total)
    footer_row("cond_entropy", lambda f: f.cond_entropy)
    footer_row("t", lambda f: f.t.statistic)
    footer_row("t_p", lambda f: f.t.p_value)
    if footers[0].z is not None:
        footer_row("z", lambda f: f.z.statistic)
        footer_row("z_p", lambda f: f.z.p_value)
    footer_row("mean", lambda f: f.stats.mean)
    footer_row("std_dev", lambda f: f.stats.std_dev)
    footer_row("mean_minus_2sd", lambda f: f.stats.band_low)
    footer_row("mean_plus_2sd", lambda f: f.stats.band_high)
    return header, rows

def _terms_grid(bundle, places):
    header = ["row"] + list(bundle.column_labels)
    rows = []
    for m in range(MONTHS_PER_YEAR):
        rows.append([MONTH_LABELS[m]]
                    + [_fmt(col[m], places) for col in bundle.entropy_terms])
    sums = [sum(v for v in col if v is not None) for col in bundle.entropy_terms]
    stats = [describe(col) for col in bundle.entropy_terms]
    rows.append(["sum"] + [_fmt(v, places) for v in sums])
    rows.append(["mean"] + [_fmt(s.mean, places) for s in stats])
    rows.append(["std_dev"] + [_fmt(s.std_dev, places) for s in stats])
    rows.append(["mean_minus_2sd"] + [_fmt(s.band_low, places) for s in stats])
    rows.append(["mean_plus_2sd"] + [_fmt(s.band_high, places) for s in stats])
    return header, rows

def _index_grid(bundle, places):
    header = ["block", "index"] + list(bundle.column_labels)
    rows = []
    for block_name, columns in bundle.index_blocks:
        for i, (q, _) in enumerate(columns[0].diversities):
            rows.append([block_name, f"D{q:g}"]
                        + [_fmt(col.diversities[i][1], places) for col in columns])
        rows.append([block_name, "exp_entropy"]
                    + [_fmt(col.exponential_entropy, places) for col in columns])
        rows.append([block_name, "theil"] + [_fmt(col.theil, places) for col in columns])
        rows.append([block_name, "hhi"] + [_fmt(col.hhi, places) for col in columns])
        rows.append([block_name, "gini"] + [_fmt(col.gini, places) for col in columns])
    return header, rows

def _peaks_grid(bundle, places):
    header = ["series", "rank", "frequency", "period_months", "amplitude"]
    rows = []
    for series_name, peaks in bundle.peaks:
        for rank, peak in enumerate(peaks, start=1):
            rows.append([series_name, str(rank), _fmt(peak.frequency, places),
                         _fmt(peak.period, places), _fmt(peak.amplitude, places)])
    return header, rows


def _grids(bundle, places):
    return {
        "t1_submitted": _share_grid(bundle, bundle.submitted, bundle.submitted_footers, places),
        "t2_accepted": _share_grid(bundle, bundle.accepted, bundle.accepted_footers, places),
        "t3_conditional": _conditional_grid(bundle, places),
        "t4_monthly_entropy": _terms_grid(bundle, places),
        "t5_indices": _index_grid(bundle, places),
        "t6_fourier": _peaks_grid(bundle, places),
    }


def _csv_text(header, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()

def _md_text(header, rows) -> str:
    table = [header] + rows
    widths = [max(len(str(row[i])) for row in table) for i in range(len(header))]
    def line(cells):
        return "| " + " | ".join(str(c).ljust(w) for c, w in zip(cells, widths)) + " |"
    parts = [line(header),
             "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    parts.extend(line(row) for row in rows)
    return "\n".join(parts) + "\n"


def _share_json(bundle, table, footers, places):
    columns = {}
    for j, label in enumerate(bundle.column_labels):
        if j < len(bundle.years):
            col = [table.per_year[m][j] for m in range(MONTHS_PER_YEAR)]
        else:
            col = list(table.cumulated)
        footer = footers[j]
        entry = {
            "months": {MONTH_LABELS[m]: _jnum(col[m], places) for m in range(MONTHS_PER_YEAR)},
            "footer": {
                "chi_square": _jnum(footer.chi_square.statistic, places),
                "chi_square_p": _jnum(footer.chi_square.p_value, places),
                "entropy": _jnum(footer.entropy, places),
                "t": _jnum(footer.t.statistic, places),
                "t_p": _jnum(footer.t.p_value, places),
                "mean": _jnum(footer.stats.mean, places),
                "std_dev": _jnum(footer.stats.std_dev, places),
                "mean_minus_2sd": _jnum(footer.stats.band_low, places),
                "mean_plus_2sd": _jnum(footer.stats.band_high, places),
            },
        }
        if footer.z is not None:
            entry["footer"]["z"] = _jnum(footer.z.statistic, places)
            entry["footer"]["z_p"] = _jnum(footer.z.p_value, places)
        columns[label] = entry
    return {"columns": columns}

def _conditional_json(bundle, places):
    cond = bundle.conditional
    columns = {}
    for j, label in enumerate(bundle.column_labels):
        if j < len(bundle.years):
            col = [cond.per_year[m][j] for m in range(MONTHS_PER_YEAR)]
        else:
            col = list(cond.cumulated)
        footer = bundle.conditional_footers[j]
        entry = {
            "months": {MONTH_LABELS[m]: _jnum(col[m], places) for m in range(MONTHS_PER_YEAR)},
            "footer": {
                "sum": _jnum(footer.total, places),
                "cond_entropy": _jnum(footer.cond_entropy, places),
                "t": _jnum(footer.t.statistic, places),
                "t_p": _jnum(footer.t.p_value, places),
                "mean": _jnum(footer.stats.mean, places),
                "std_dev": _jnum(footer.stats.std_dev, places),
                "mean_minus_2sd": _jnum(footer.stats.band_low, places),
                "mean_plus_2sd": _jnum(footer.stats.band_high, places),
            },
        }
        if footer.z is not None:
            entry["footer"]["z"] = _jnum(footer.z.statistic, places)
            entry["footer"]["z_p"] = _jnum(footer.z.p_value, places)
        columns[label] = entry
    return {"columns": columns}

def _terms_json(bundle, places):
    columns = {}
    for label, col in zip(bundle.column_labels, bundle.entropy_terms):
        stats = describe(col)
        columns[label] = {
            "months": {MONTH_LABELS[m]: _jnum(col[m], places) for m in range(MONTHS_PER_YEAR)},
            "footer": {
                "sum": _jnum(sum(v for v in col if v is not None), places),
                "mean": _jnum(stats.mean, places),
                "std_dev": _jnum(stats.std_dev, places),
                "mean_minus_2sd": _jnum(stats.band_low, places),
                "mean_plus_2sd": _jnum(stats.band_high, places),
            },
        }
    return {"columns": columns}

def _index_json(bundle, places):
    blocks = {}
    for block_name, columns in bundle.index_blocks:
        block = {}
        for col in columns:
            entry = {f"D{q:g}": _jnum(v, places) for q, v in col.diversities}
            entry["exp_entropy"] = _jnum(col.exponential_entropy, places)
            entry["theil"] = _jnum(col.theil, places)
            entry["hhi"] = _jnum(col.hhi, places)
            entry["gini"] = _jnum(col.gini, places)
            block[col.label] = entry
        blocks[block_name] = {"columns": block}
    return {"blocks": blocks}

def _peaks_json(bundle, places):
    series = {}
    for series_name, peaks in bundle.peaks:
        series[series_name] = [
            {"rank": rank,
             "frequency": _jnum(p.frequency, places),
             "period_months": _jnum(p.period, places),
             "amplitude": _jnum(p.amplitude, places)}
            for rank, p in enumerate(peaks, start=1)
        ]
    return {"series": series}


def render(bundle: AnalysisBundle, format: str, precision: "int | None" = None) -> list:
    """Render the six documents in the requested format."""
    if format not in FORMATS:
        raise DataError(f"unknown format {format!r}, expected one of {', '.join(FORMATS)}")
    places = bundle.options.precision if precision is None else int(precision)
    if not 1 <= places <= 12:
        raise DataError("precision must lie in 1..12")
    if not bundle.years or not bundle.column_labels:
        raise DataError("empty bundle")

    documents = []
    if format in ("csv", "md"):
        grids = _grids(bundle, places)
        for name in DOCUMENT_NAMES:
            header, rows = grids[name]
            text = _csv_text(header, rows) if format == "csv" else _md_text(header, rows)
            documents.append(NamedDocument(name, text))
        return documents

    builders = {
        "t1_submitted": lambda: _share_json(bundle, bundle.submitted, bundle.submitted_footers, places),
        "t2_accepted": lambda: _share_json(bundle, bundle.accepted, bundle.accepted_footers, places),
        "t3_conditional": lambda: _conditional_json(bundle, places),
        "t4_monthly_entropy": lambda: _terms_json(bundle, places),
        "t5_indices": lambda: _index_json(bundle, places),
        "t6_fourier": lambda: _peaks_json(bundle, places),
    }
    for name in DOCUMENT_NAMES:
        body = {"name": name, "journal": bundle.journal,
                "years": list(bundle.years), "precision": places}
        body.update(builders[name]())
        documents.append(NamedDocument(name, json.dumps(body, indent=2) + "\n"))
    return documents
