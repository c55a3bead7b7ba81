"""Entropy, diversity, and inequality indices."""

import math

import pytest
from hypothesis import given, strategies as st

from seasonstats.indices import (
    IndexReport,
    diversity,
    entropy,
    exponential_entropy,
    gini,
    hhi,
    lorenz,
    monthly_entropy_terms,
    theil,
)
from seasonstats.probability import shares

import refvalues as rv

UNIFORM_12 = [1 / 12] * 12

# normalized positive distributions for property tests
distributions = (
    st.lists(st.floats(1e-6, 1.0), min_size=2, max_size=24)
    .map(lambda v: [x / sum(v) for x in v])
)


def test_entropy_known_values():
    assert entropy(UNIFORM_12) == pytest.approx(math.log(12), abs=1e-12)
    assert entropy([1.0]) == 0.0
    assert entropy([0.5, 0.5]) == pytest.approx(math.log(2), abs=1e-12)
    assert entropy([1.0, 0.0, 0.0]) == 0.0  # 0 ln 0 = 0


def test_entropy_reference_columns(jscs_matrices, ent_matrices):
    for matrices, offset in ((jscs_matrices, 0), (ent_matrices, 4)):
        table = shares(matrices[0])
        for j in range(3):
            assert entropy(table.column(j)) == pytest.approx(
                rv.T1_ENTROPY[offset + j], abs=5e-4)
        assert entropy(table.cumulated) == pytest.approx(
            rv.T1_ENTROPY[offset + 3], abs=5e-4)


def test_entropy_accepted_columns(jscs_matrices, ent_matrices):
    for matrices, offset in ((jscs_matrices, 0), (ent_matrices, 4)):
        table = shares(matrices[1])
        for j in range(3):
            assert entropy(table.column(j)) == pytest.approx(
                rv.T2_ENTROPY[offset + j], abs=5e-4)
        assert entropy(table.cumulated) == pytest.approx(
            rv.T2_ENTROPY[offset + 3], abs=5e-4)


def test_conditional_entropy_reference(jscs_matrices, ent_matrices):
    from seasonstats.probability import conditional
    for matrices, offset in ((jscs_matrices, 0), (ent_matrices, 4)):
        cond = conditional(*matrices)
        for j in range(3):
            assert entropy(cond.column(j)) == pytest.approx(
                rv.T3_CENTR[offset + j], abs=5e-4)
        assert entropy(cond.cumulated) == pytest.approx(
            rv.T3_CENTR[offset + 3], abs=5e-4)


def test_monthly_terms_reference(jscs_matrices, ent_matrices):
    from seasonstats.probability import conditional
    for matrices, table in ((jscs_matrices, rv.T4_JSCS), (ent_matrices, rv.T4_ENT)):
        cond = conditional(*matrices)
        for j in range(3):
            terms = monthly_entropy_terms(cond.column(j))
            for m in range(12):
                assert terms[m] == pytest.approx(table[m][j], abs=5e-4)
        cum_terms = monthly_entropy_terms(cond.cumulated)
        for m in range(12):
            assert cum_terms[m] == pytest.approx(table[m][3], abs=5e-4)


def test_monthly_terms_preserve_none_and_zero():
    terms = monthly_entropy_terms([0.5, None, 0.0, 0.5])
    assert terms == (pytest.approx(0.5 * math.log(2)), None, 0.0,
                     pytest.approx(0.5 * math.log(2)))
    with pytest.raises(ValueError, match="negative"):
        monthly_entropy_terms([0.5, -0.5])


def test_diversity_orders():
    # uniform distribution: every order gives the plain category count
    for q in (0.0, 0.5, 1.0, 2.0, 4.0):
        assert diversity(UNIFORM_12, q) == pytest.approx(12.0, abs=1e-9)
    assert diversity([0.5, 0.5], 2.0) == pytest.approx(2.0)
    assert diversity([1.0], 1.0) == pytest.approx(1.0)
    with pytest.raises(ValueError, match="non-negative"):
        diversity(UNIFORM_12, -1.0)


def test_diversity_q1_reference(jscs_matrices):
    table = shares(jscs_matrices[0])
    assert diversity(table.column(0), 1.0) == pytest.approx(11.574, abs=5e-3)


def test_richness_counts_positive_entries():
    assert diversity([0.5, 0.5, 0.0], 0.0) == pytest.approx(2.0)


@given(distributions)
def test_diversity_non_increasing_in_q(p):
    orders = (0.0, 0.5, 1.0, 2.0, 4.0)
    values = [diversity(p, q) for q in orders]
    for lo, hi in zip(values[1:], values[:-1]):
        assert lo <= hi + 1e-9


@given(distributions)
def test_index_identities(p):
    h = entropy(p)
    n = len(p)
    assert theil(p) + h == pytest.approx(math.log(n), abs=1e-12)
    assert exponential_entropy(p) == pytest.approx(math.exp(-h), abs=1e-12)
    assert diversity(p, 1.0) * exponential_entropy(p) == pytest.approx(1.0, abs=1e-9)
    assert 1.0 / n <= hhi(p) + 1e-12
    assert hhi(p) <= 1.0 + 1e-12
    assert 0.0 <= h <= math.log(n) + 1e-9


@given(distributions)
def test_gini_bounds_and_uniform_zero(p):
    g = gini(p)
    n = len(p)
    assert -1e-12 <= g <= 1.0 - 1.0 / n + 1e-9
    assert gini([1.0 / n] * n) == pytest.approx(0.0, abs=1e-12)


def test_gini_known_values():
    assert gini([1.0, 0.0, 0.0, 0.0]) == pytest.approx(0.75)
    assert gini([3.0, 1.0]) == pytest.approx(0.25)
    assert gini(rv.JSCS_2012_SUB_COUNTS) == pytest.approx(0.15063, abs=5e-4)


def test_gini_scale_invariant():
    base = [2.0, 5.0, 1.0, 9.0]
    assert gini(base) == pytest.approx(gini([10 * v for v in base]), abs=1e-12)


def test_gini_matches_lorenz_area():
    values = [4.0, 1.0, 7.0, 2.0, 2.0]
    points = lorenz(values)
    # trapezoid area under the curve; Gini = 1 - 2 * area
    area = sum((x1 - x0) * (y0 + y1) / 2
               for (x0, y0), (x1, y1) in zip(points, points[1:]))
    assert gini(values) == pytest.approx(1.0 - 2.0 * area, abs=1e-12)


def test_lorenz_shape():
    points = lorenz([1.0, 3.0])
    assert points[0] == (0.0, 0.0)
    assert points[-1] == (1.0, 1.0)
    assert points[1] == (0.5, 0.25)
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    assert xs == sorted(xs) and ys == sorted(ys)
    with pytest.raises(ValueError):
        lorenz([0.0, 0.0])


def test_none_entries_are_skipped():
    assert entropy([0.5, None, 0.5]) == pytest.approx(math.log(2))
    assert theil([None, 0.5, 0.5]) == pytest.approx(0.0, abs=1e-12)
    assert hhi([0.5, None, 0.5]) == pytest.approx(0.5)
    assert gini([0.5, None, 0.5]) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError, match="no defined"):
        entropy([None, None])


def test_report_from_distribution(jscs_matrices):
    table = shares(jscs_matrices[0])
    report = IndexReport.from_distribution(table.column(0))
    assert report.entropy_H == pytest.approx(2.4487, abs=5e-4)
    assert report.diversity_q1 == pytest.approx(11.574, abs=5e-3)
    assert report.exponential_entropy == pytest.approx(0.08640, abs=5e-4)
    assert report.theil == pytest.approx(0.03619, abs=5e-4)
    assert report.hhi == pytest.approx(0.08945, abs=5e-4)
    assert report.n_categories == 12
    with pytest.raises(ValueError, match="sum to 1"):
        IndexReport.from_distribution([0.5, 0.4])


def test_report_from_ratios(jscs_matrices):
    from seasonstats.probability import conditional
    cond = conditional(*jscs_matrices)
    report = IndexReport.from_ratios(cond.cumulated)
    assert report.entropy_H == pytest.approx(rv.JSCS_CUM_COND_ENTROPY, abs=5e-4)
    assert report.diversity_q1 == pytest.approx(rv.JSCS_CUM_COND_D1, abs=5e-3)
    assert report.exponential_entropy == pytest.approx(0.08438, abs=5e-4)
    assert report.theil == pytest.approx(0.01244, abs=5e-4)
    assert report.hhi == pytest.approx(0.08546, abs=5e-4)
    assert report.gini == pytest.approx(0.08820, abs=1e-3)
