"""Command-line behavior: arguments, exit codes, emitted files."""

import csv
import json
import subprocess
import sys

import pytest

from seasonstats.cli import _parse_orders, _parse_years, build_parser, main
from seasonstats.ingest import DataError

import refvalues as rv


@pytest.fixture()
def counts_csv(tmp_path, jscs_matrices, ent_matrices):
    path = tmp_path / "counts.csv"
    lines = ["journal,year,month,submitted,accepted"]
    for journal, (sub, acc) in (("JSCS", jscs_matrices), ("Entropy", ent_matrices)):
        for j, year in enumerate(sub.years):
            for m in range(12):
                lines.append(
                    f"{journal},{year},{m + 1},{sub.counts[m][j]},{acc.counts[m][j]}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture()
def events_csv(tmp_path):
    path = tmp_path / "events.csv"
    lines = ["journal,submitted_at,decision"]
    # two years, volume growing through the year, acceptance rate varying
    for month in range(1, 13):
        for i in range(month):
            first = "accepted" if i % 2 == 0 else "rejected"
            second = "accepted" if i % 3 == 0 else "rejected"
            lines.append(f"Demo,2021-{month:02d}-{min(i + 1, 28):02d},{first}")
            lines.append(f"Demo,2022-{month:02d}-{min(i + 1, 28):02d},{second}")
    lines.append("Other,2021-01-01,accepted")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def _run(args):
    return main([str(a) for a in args])


def test_counts_end_to_end(counts_csv, tmp_path, capsys):
    out = tmp_path / "out"
    code = _run(["--input", counts_csv, "--format", "counts",
                 "--journal", "JSCS", "--years", "2012:2014", "--out", out])
    assert code == 0
    assert capsys.readouterr().out.strip() == f"wrote 6 documents to {out}"
    files = sorted(p.name for p in out.iterdir())
    assert files == ["t1_submitted.csv", "t2_accepted.csv", "t3_conditional.csv",
                     "t4_monthly_entropy.csv", "t5_indices.csv", "t6_fourier.csv"]
    grid = list(csv.reader((out / "t1_submitted.csv").open()))
    assert grid[0] == ["row", "2012", "2013", "2014", "[2012-2014]"]
    assert grid[1][1] == "0.08202"


def test_counts_json_emit(counts_csv, tmp_path):
    out = tmp_path / "json_out"
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "Entropy",
                 "--emit", "json", "--out", out])
    assert code == 0
    body = json.loads((out / "t5_indices.json").read_text())
    assert body["journal"] == "Entropy"
    assert body["years"] == [2014, 2015, 2016]
    d1 = body["blocks"]["submitted"]["columns"]["2014"]["D1"]
    assert d1 == pytest.approx(11.730, abs=5e-3)


def test_years_subset(counts_csv, tmp_path):
    out = tmp_path / "subset"
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--years", "2012:2013", "--out", out])
    assert code == 0
    grid = list(csv.reader((out / "t1_submitted.csv").open()))
    assert grid[0] == ["row", "2012", "2013", "[2012-2013]"]


def test_events_end_to_end(events_csv, tmp_path):
    out = tmp_path / "ev"
    code = _run(["--input", events_csv, "--format", "events", "--journal", "Demo",
                 "--years", "2021:2022", "--out", out, "--emit", "md"])
    assert code == 0
    text = (out / "t3_conditional.md").read_text()
    assert text.startswith("| row")
    grid_text = (out / "t1_submitted.md").read_text().splitlines()
    assert "[2021-2022]" in grid_text[0]


def test_events_infer_years(events_csv, tmp_path):
    out = tmp_path / "inferred"
    code = _run(["--input", events_csv, "--format", "events",
                 "--journal", "Demo", "--out", out])
    assert code == 0
    grid = list(csv.reader((out / "t1_submitted.csv").open()))
    assert grid[0] == ["row", "2021", "2022", "[2021-2022]"]


def test_unknown_journal_exits_1(counts_csv, tmp_path, capsys):
    code = _run(["--input", counts_csv, "--format", "counts",
                 "--journal", "Nature", "--out", tmp_path / "x"])
    assert code == 1
    assert "empty selection" in capsys.readouterr().err


def test_bad_year_range_exits_1(counts_csv, tmp_path, capsys):
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--years", "2014:2012", "--out", tmp_path / "x"])
    assert code == 1
    assert "year range" in capsys.readouterr().err
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--years", "banana", "--out", tmp_path / "x"])
    assert code == 1


def test_bad_q_exits_1(counts_csv, tmp_path, capsys):
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--q", "1,x", "--out", tmp_path / "x"])
    assert code == 1
    assert "diversity orders" in capsys.readouterr().err


def test_z_flags_must_pair(counts_csv, tmp_path, capsys):
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--z-sigma", "0.02", "--out", tmp_path / "x"])
    assert code == 1
    assert "both" in capsys.readouterr().err


def test_z_flags_add_rows(counts_csv, tmp_path):
    out = tmp_path / "z"
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--z-sigma", "0.0236", "--z-null", "0.0833333", "--out", out])
    assert code == 0
    labels = [row[0] for row in csv.reader((out / "t1_submitted.csv").open())]
    assert "z" in labels and "z_p" in labels


def test_precision_flag(counts_csv, tmp_path):
    out = tmp_path / "p4"
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--precision", "4", "--out", out])
    assert code == 0
    grid = list(csv.reader((out / "t1_submitted.csv").open()))
    assert grid[1][1] == "0.0820"


def test_missing_input_exits_2(tmp_path, capsys):
    code = _run(["--input", tmp_path / "nope.csv", "--format", "counts",
                 "--journal", "JSCS", "--out", tmp_path / "x"])
    assert code == 2
    assert "cannot read input" in capsys.readouterr().err


def test_unwritable_out_exits_2(counts_csv, tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = _run(["--input", counts_csv, "--format", "counts", "--journal", "JSCS",
                 "--out", blocker / "sub"])
    assert code == 2
    assert "cannot write output" in capsys.readouterr().err


def test_missing_required_args_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["--journal", "JSCS"])
    assert exc.value.code == 1


def test_bad_choice_exits_1(counts_csv, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["--input", str(counts_csv), "--format", "parquet",
              "--journal", "JSCS", "--out", str(tmp_path)])
    assert exc.value.code == 1


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "analyze" in capsys.readouterr().out


def test_help_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for flag in ("--input", "--format", "--journal", "--years", "--q",
                 "--precision", "--emit", "--out", "--t-null", "--z-sigma", "--z-null"):
        assert flag in out


def test_module_invocation():
    result = subprocess.run([sys.executable, "-m", "seasonstats", "--version"],
                            capture_output=True, text=True)
    assert result.returncode == 0


def test_year_and_order_parsers():
    assert _parse_years("2012:2014") == (2012, 2013, 2014)
    assert _parse_years("2015") == (2015,)
    with pytest.raises(DataError):
        _parse_years("a:b")
    with pytest.raises(DataError):
        _parse_years("2014:2012")
    assert _parse_orders("1,2,0.5") == (1.0, 2.0, 0.5)
    with pytest.raises(DataError):
        _parse_orders("one")


def test_parser_defaults():
    args = build_parser().parse_args(
        ["--input", "x.csv", "--format", "counts", "--journal", "J"])
    assert args.q == "1,2"
    assert args.precision == 5
    assert args.emit == "csv"
    assert args.out == "."
    assert args.t_null == pytest.approx(0.0833333)
    assert args.z_sigma is None and args.z_null is None
