"""Shared fixtures: the two bundled journals rebuilt from their share tables."""

import warnings
from pathlib import Path

import pytest

from seasonstats.ingest import counts_from_shares
from seasonstats.report import AnalysisOptions, build_bundle

import refvalues as rv

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"


def _matrices(sub_totals, sub_shares, acc_totals, acc_shares, years):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        submitted = counts_from_shares(sub_totals, sub_shares, years, "submitted")
        accepted = counts_from_shares(acc_totals, acc_shares, years, "accepted")
    return submitted, accepted


@pytest.fixture(scope="session")
def jscs_matrices():
    return _matrices(rv.JSCS_SUB_TOTALS, rv.JSCS_SUB_SHARES,
                     rv.JSCS_ACC_TOTALS, rv.JSCS_ACC_SHARES, rv.JSCS_YEARS)


@pytest.fixture(scope="session")
def ent_matrices():
    return _matrices(rv.ENT_SUB_TOTALS, rv.ENT_SUB_SHARES,
                     rv.ENT_ACC_TOTALS, rv.ENT_ACC_SHARES, rv.ENT_YEARS)


@pytest.fixture(scope="session")
def jscs_bundle(jscs_matrices):
    return build_bundle(*jscs_matrices, AnalysisOptions(), journal="JSCS")


@pytest.fixture(scope="session")
def ent_bundle(ent_matrices):
    return build_bundle(*ent_matrices, AnalysisOptions(), journal="Entropy")


@pytest.fixture(scope="session")
def both_bundles(jscs_bundle, ent_bundle):
    return {"JSCS": jscs_bundle, "Entropy": ent_bundle}
