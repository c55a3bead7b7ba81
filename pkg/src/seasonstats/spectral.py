"""Discrete Fourier analysis of monthly count series.

The transform is the plain unnormalized forward DFT of the chronological
series; only the positive-frequency half-spectrum is reported and the DC
term is excluded, so peaks describe periodic structure rather than the
series total.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class SpectralPeak:
    frequency: float  # cycles per month
    period: float  # months, 1 / frequency
    amplitude: float

    def __post_init__(self):
        if not 0.0 < self.frequency <= 0.5:
            raise ValueError("frequency must lie in (0, 0.5]")
        if not math.isclose(self.period, 1.0 / self.frequency, rel_tol=1e-9):
            raise ValueError("period must be the reciprocal of frequency")
        if self.amplitude < 0:
            raise ValueError("amplitude must be non-negative")


def dft_magnitudes(x: Sequence[float]) -> tuple:
    """Magnitudes |X_k| at frequencies k/T for k = 1 .. T//2.

    X_k = sum_t x_t exp(-2 pi i k t / T), evaluated directly; T is small
    (tens of samples) so no FFT is needed.
    """
    series = [float(v) for v in x]
    T = len(series)
    if T < 2:
        raise ValueError("need at least 2 samples")
    out = []
    for k in range(1, T // 2 + 1):
        xk = sum(v * cmath.exp(-2j * math.pi * k * t / T) for t, v in enumerate(series))
        out.append((k / T, abs(xk)))
    return tuple(out)


def top_peaks(x: Sequence[float], k: int) -> list:
    """The k largest spectral peaks, ties broken toward lower frequency."""
    if k < 1:
        raise ValueError("need at least one peak")
    spectrum = dft_magnitudes(x)
    ranked = sorted(spectrum, key=lambda fm: (-fm[1], fm[0]))
    return [SpectralPeak(f, 1.0 / f, m) for f, m in ranked[:k]]
