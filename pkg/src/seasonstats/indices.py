"""Entropy, diversity, and inequality indices for monthly distributions.

All logarithms are natural, so entropies are in nats and a uniform
12-month distribution has entropy ln 12. Vectors may contain None for
months with no defined value; such entries are skipped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

Vector = Sequence["float | None"]


def _defined(p: Vector) -> list[float]:
    out = []
    for v in p:
        if v is None:
            continue
        if v < 0:
            raise ValueError("negative entry in distribution")
        out.append(float(v))
    if not out:
        raise ValueError("no defined entries")
    return out

def entropy(p: Vector) -> float:
    """Shannon entropy sum(-p ln p) with 0 ln 0 = 0.

    Entries need not sum to 1; applied to a raw conditional-probability
    column this is the column's conditional entropy.
    """
    return sum(-v * math.log(v) for v in _defined(p) if v > 0.0)

def monthly_entropy_terms(p: Vector) -> tuple:
    """Per-entry information terms -p ln p, preserving positions and None."""
    terms = []
    for v in p:
        if v is None:
            terms.append(None)
            continue
        if v < 0:
            raise ValueError("negative entry in distribution")
        terms.append(-v * math.log(v) if v > 0.0 else 0.0)
    return tuple(terms)

def diversity(p: Vector, q: float) -> float:
    """Hill diversity of order q, the effective number of categories.

    For q != 1 this is (sum p_i^q)^(1/(1-q)); q = 1 is dispatched to
    exp(entropy) rather than a numeric limit. Raw (unnormalized) vectors
    are accepted; with q = 1 that yields the exponential of the raw
    conditional entropy.
    """
    if q < 0:
        raise ValueError("diversity order must be non-negative")
    values = _defined(p)
    if q == 1.0:
        return math.exp(entropy(values))
    total = sum(v ** q for v in values if v > 0.0)
    result = total ** (1.0 / (1.0 - q))
    if not math.isfinite(result):
        raise ValueError("diversity is not finite for this input")
    return result

def exponential_entropy(p: Vector) -> float:
    """exp(-H), equivalently the product of p_i^p_i."""
    return math.exp(-entropy(p))

def theil(p: Vector) -> float:
    """Theil index ln N - H; zero for a uniform distribution.

    Defined so that theil(p) + entropy(p) = ln N holds exactly for a
    normalized p over N defined categories.
    """
    return math.log(len(_defined(p))) - entropy(p)

def hhi(p: Vector) -> float:
    """Herfindahl-Hirschman concentration: sum of squared shares."""
    return sum(v * v for v in _defined(p))

def lorenz(z: Vector) -> list:
    """Lorenz curve points (population share, cumulative value share).

    Returns n+1 points from (0, 0) to (1, 1) over the ascending-sorted
    values.
    """
    values = sorted(_defined(z))
    total = sum(values)
    if total <= 0:
        raise ValueError("all entries are zero")
    n = len(values)
    points = [(0.0, 0.0)]
    running = 0.0
    for i, v in enumerate(values, start=1):
        running += v
        points.append((i / n, running / total))
    return points

def gini(z: Vector) -> float:
    """Gini coefficient, twice the area between the Lorenz curve and the diagonal.

    Computed in the population mean-absolute-difference form
    G = sum_ij |z_i - z_j| / (2 n^2 mean), which equals the doubled
    Lorenz-curve gap for the piecewise-linear curve of `lorenz`.
    """
    values = _defined(z)
    total = sum(values)
    if total <= 0:
        raise ValueError("all entries are zero")
    n = len(values)
    abs_diff = sum(abs(a - b) for a in values for b in values)
    return abs_diff / (2.0 * n * total)


@dataclass(frozen=True)
class IndexReport:
    """Every index of one distribution, as reported in one table column."""

    entropy_H: float
    monthly_terms: tuple
    diversity_q1: float
    exponential_entropy: float
    theil: float
    hhi: float
    gini: float
    n_categories: int

    @classmethod
    def from_distribution(cls, p: Vector) -> "IndexReport":
        """Indices of a normalized distribution (shares summing to 1)."""
        values = _defined(p)
        if abs(sum(values) - 1.0) > 1e-6:
            raise ValueError("distribution must sum to 1")
        h = entropy(values)
        return cls(
            entropy_H=h,
            monthly_terms=monthly_entropy_terms(p),
            diversity_q1=math.exp(h),
            exponential_entropy=math.exp(-h),
            theil=math.log(len(values)) - h,
            hhi=hhi(values),
            gini=gini(values),
            n_categories=len(values),
        )

    @classmethod
    def from_ratios(cls, r: Vector) -> "IndexReport":
        """Indices of a raw ratio vector (conditional-probability column).

        The entropy and its exponential (diversity of order 1) are taken on
        the raw vector; Theil, HHI, exponential entropy, and Gini are taken
        on the vector normalized to shares. Only this combination makes the
        diversity row consistent with the conditional-entropy row while the
        inequality rows stay comparable across table blocks.
        """
        values = _defined(r)
        raw_h = entropy(values)
        total = sum(values)
        shares = [v / total for v in values]
        return cls(
            entropy_H=raw_h,
            monthly_terms=monthly_entropy_terms(r),
            diversity_q1=math.exp(raw_h),
            exponential_entropy=exponential_entropy(shares),
            theil=theil(shares),
            hhi=hhi(shares),
            gini=gini(shares),
            n_categories=len(values),
        )
