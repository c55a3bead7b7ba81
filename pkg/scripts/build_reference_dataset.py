"""Rebuild the bundled dataset and golden CLI outputs.

Reconstructs integer monthly counts for both journals from the published
share tables, writes them as data/journal_counts.csv, and regenerates the
golden documents in data/golden/{jscs,entropy}/ by running the CLI on that
file with default options. Run from the repository root:

    python3 scripts/build_reference_dataset.py
"""

import sys
import warnings
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import refvalues as rv  # noqa: E402

from seasonstats.cli import main  # noqa: E402
from seasonstats.ingest import counts_from_shares  # noqa: E402


def build_counts_csv(path: Path) -> None:
    lines = ["journal,year,month,submitted,accepted"]
    for journal, years, sub_totals, sub_shares, acc_totals, acc_shares in (
        ("JSCS", rv.JSCS_YEARS, rv.JSCS_SUB_TOTALS, rv.JSCS_SUB_SHARES,
         rv.JSCS_ACC_TOTALS, rv.JSCS_ACC_SHARES),
        ("Entropy", rv.ENT_YEARS, rv.ENT_SUB_TOTALS, rv.ENT_SUB_SHARES,
         rv.ENT_ACC_TOTALS, rv.ENT_ACC_SHARES),
    ):
        with warnings.catch_warnings():
            warnings.simplefilter("error")  # the tables reconstruct exactly
            sub = counts_from_shares(sub_totals, sub_shares, years, "submitted")
            acc = counts_from_shares(acc_totals, acc_shares, years, "accepted")
        for j, year in enumerate(years):
            for m in range(12):
                lines.append(f"{journal},{year},{m + 1},"
                             f"{sub.counts[m][j]},{acc.counts[m][j]}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(lines) - 1} rows)")


def build_golden(counts_path: Path, out_root: Path) -> None:
    for journal, subdir in (("JSCS", "jscs"), ("Entropy", "entropy")):
        out_dir = out_root / subdir
        code = main(["--input", str(counts_path), "--format", "counts",
                     "--journal", journal, "--out", str(out_dir)])
        if code != 0:
            raise SystemExit(f"golden build failed for {journal} (exit {code})")


if __name__ == "__main__":
    counts_path = ROOT / "data" / "journal_counts.csv"
    build_counts_csv(counts_path)
    build_golden(counts_path, ROOT / "data" / "golden")
