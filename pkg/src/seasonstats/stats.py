"""Descriptive statistics and significance tests for monthly vectors.

Covers the footer rows of the report tables: mean, sample standard
deviation, the mean +/- 2 sigma band, a chi-square goodness-of-fit test
against the uniform month distribution, and one-sample t and z tests.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .special import chi_square_sf, normal_cdf, regularized_beta

MONTHS_PER_YEAR = 12


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    dof: "int | None"
    hypothesized_value: float
    test_kind: str


@dataclass(frozen=True)
class DescriptiveStats:
    mean: float
    std_dev: float
    band_low: float
    band_high: float
    n: int


def _values(x: Sequence["float | None"]) -> list:
    return [float(v) for v in x if v is not None]


def describe(x: Sequence["float | None"]) -> DescriptiveStats:
    """Mean, sample (n-1) standard deviation, and the mean +/- 2 sigma band."""
    values = _values(x)
    if len(values) < 2:
        raise ValueError("need at least 2 values")
    mean = statistics.fmean(values)
    std = statistics.stdev(values)
    return DescriptiveStats(mean, std, mean - 2.0 * std, mean + 2.0 * std, len(values))


def chi_square_uniform(counts: Sequence[int]) -> TestResult:
    """Goodness of fit of integer counts against equal expected counts.

    The statistic is sum((O - T/n)^2 / (T/n)) with T the total count and
    n the number of categories; the p-value is the upper chi-square tail
    with n - 1 degrees of freedom.
    """
    observed = [int(c) for c in counts]
    if any(c < 0 for c in observed):
        raise ValueError("counts must be non-negative")
    total = sum(observed)
    if total == 0:
        raise ValueError("zero total count")
    n = len(observed)
    expected = total / n
    stat = sum((o - expected) ** 2 / expected for o in observed)
    dof = n - 1
    return TestResult(stat, chi_square_sf(stat, dof), dof, expected, "chi_square")


def t_cdf(t: float, dof: int) -> float:
    """Cumulative distribution function of Student's t."""
    if dof < 1:
        raise ValueError("degrees of freedom must be >= 1")
    if t == 0.0:
        return 0.5
    t2 = t * t
    # branch on the smaller beta argument so neither tail loses precision
    if t2 < dof:
        p = 0.5 + 0.5 * regularized_beta(0.5, dof / 2.0, t2 / (dof + t2))
    else:
        p = 1.0 - 0.5 * regularized_beta(dof / 2.0, 0.5, dof / (dof + t2))
    return p if t > 0 else 1.0 - p


def t_one_sample(x: Sequence["float | None"], k: float) -> TestResult:
    """One-sample t-test of the vector mean against a hypothesized value k.

    t = (mean - k) / (s / sqrt(n)) with the sample standard deviation;
    the p-value is the two-sided t-tail with n - 1 degrees of freedom.
    """
    values = _values(x)
    if len(values) < 2:
        raise ValueError("need at least 2 values")
    mean = statistics.fmean(values)
    std = statistics.stdev(values)
    if std == 0.0:
        raise ValueError("degenerate sample: zero standard deviation")
    n = len(values)
    stat = (mean - k) / (std / math.sqrt(n))
    dof = n - 1
    # two-sided tail directly: 2 P(T > |t|) = I_{dof/(dof+t^2)}(dof/2, 1/2)
    p = regularized_beta(dof / 2.0, 0.5, dof / (dof + stat * stat))
    return TestResult(stat, min(p, 1.0), dof, k, "t_one_sample")


def z_one_sample(x: Sequence["float | None"], k: float, sigma: float) -> TestResult:
    """One-sample z-test with known standard deviation sigma."""
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    values = _values(x)
    if not values:
        raise ValueError("empty sample")
    mean = statistics.fmean(values)
    stat = (mean - k) / (sigma / math.sqrt(len(values)))
    p = 2.0 * (1.0 - normal_cdf(abs(stat)))
    return TestResult(stat, min(p, 1.0), None, k, "z_one_sample")
