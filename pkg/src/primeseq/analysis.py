"""Cyclic autocorrelation and the derived randomness and balance statistics.

Every statistic is computed under an explicit convention (symbol mapping plus
normalization) so that any published number can be chased under a declared
setting. The default is bipolar/by-n: bits map to -1/+1 and each lag sum is
divided by the sequence length, which pins the lag-0 peak at exactly 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .sequences import BitSequence

MAPPINGS = ("raw01", "bipolar")
NORMALIZATIONS = ("by-n", "by-peak")


@dataclass(frozen=True)
class CorrelationConvention:
    mapping: str = "bipolar"
    normalization: str = "by-n"

    def __post_init__(self) -> None:
        if self.mapping not in MAPPINGS:
            raise ValueError(f"mapping must be one of {MAPPINGS}, got {self.mapping!r}")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(
                f"normalization must be one of {NORMALIZATIONS}, got {self.normalization!r}"
            )

    @property
    def name(self) -> str:
        return f"{self.mapping}/{self.normalization}"

    def as_dict(self) -> dict[str, str]:
        return {"mapping": self.mapping, "normalization": self.normalization}


DEFAULT_CONVENTION = CorrelationConvention("bipolar", "by-n")


def all_conventions() -> tuple[CorrelationConvention, ...]:
    return tuple(
        CorrelationConvention(m, n) for m in MAPPINGS for n in NORMALIZATIONS
    )


@dataclass(frozen=True)
class CorrelationSeries:
    """Cyclic autocorrelation values at lags 0..N-1 under a declared convention."""

    values: tuple[float, ...]
    convention: CorrelationConvention

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class AnalysisReport:
    randomness: float
    max_offpeak: float
    mean_offpeak: float
    ones_fraction: float
    convention: CorrelationConvention
    sequence_label: str

    def as_dict(self) -> dict[str, object]:
        return {
            "randomness": self.randomness,
            "max_offpeak": self.max_offpeak,
            "mean_offpeak": self.mean_offpeak,
            "ones_fraction": self.ones_fraction,
            "convention": self.convention.as_dict(),
            "sequence_label": self.sequence_label,
        }


def _pack_bits(bits: tuple[int, ...]) -> int:
    x = 0
    for i, b in enumerate(bits):
        if b:
            x |= 1 << i
    return x


def _cyclic_lag_sums(bits: tuple[int, ...], mapping: str) -> list[int]:
    # Bit-packed fast path. Each lag sum is an exact integer, so dividing by N
    # afterwards is bit-identical to a naive double loop over mapped symbols.
    n = len(bits)
    x = _pack_bits(bits)
    mask = (1 << n) - 1
    sums = []
    for k in range(n):
        rotated = ((x >> k) | (x << (n - k))) & mask
        if mapping == "bipolar":
            # product sum over -1/+1 symbols: agreements minus disagreements
            sums.append(n - 2 * (x ^ rotated).bit_count())
        else:
            sums.append((x & rotated).bit_count())
    return sums


def autocorrelation(seq: BitSequence, conv: CorrelationConvention = DEFAULT_CONVENTION) -> CorrelationSeries:
    """Cyclic autocorrelation of seq at every lag 0..N-1.

    Lag k pairs position m with position 1 + ((m + k - 1) mod N); exactly N
    terms enter every lag sum.
    """
    n = seq.length
    if n < 2:
        raise ValueError(f"sequence too short for autocorrelation: length {n}")
    sums = _cyclic_lag_sums(seq.bits, conv.mapping)
    values = [s / n for s in sums]
    if conv.normalization == "by-peak":
        peak = values[0]
        if peak == 0:
            raise ValueError("cannot normalize by peak: lag-0 value is zero")
        values = [v / peak for v in values]
    return CorrelationSeries(tuple(values), conv)


def randomness_measure(corr: CorrelationSeries) -> float:
    """1 minus the mean absolute off-peak correlation; 1 is ideal, 0 fully structured."""
    if corr.n < 2:
        raise ValueError(f"series too short: length {corr.n}")
    r = 1.0 - math.fsum(abs(v) for v in corr.values[1:]) / (corr.n - 1)
    # |c| <= 1 under every convention, so r is in [0, 1] bar the last ulp
    return min(1.0, max(0.0, r))


def off_peak_stats(corr: CorrelationSeries) -> tuple[float, float]:
    """(max, mean) of |c(k)| over the off-peak lags 1..N-1."""
    if corr.n < 2:
        raise ValueError(f"series too short: length {corr.n}")
    mags = [abs(v) for v in corr.values[1:]]
    mx = max(mags)
    # exact summation, then clamp: rounding must not push the mean past the max
    return mx, min(math.fsum(mags) / len(mags), mx)


def balance(seq: BitSequence) -> float:
    """Fraction of ones; 0.5 is ideal for keystream material."""
    return sum(seq.bits) / seq.length


def analyze(seq: BitSequence, conv: CorrelationConvention = DEFAULT_CONVENTION) -> AnalysisReport:
    """Single-pass report: randomness measure, off-peak stats and balance."""
    corr = autocorrelation(seq, conv)
    max_off, mean_off = off_peak_stats(corr)
    return AnalysisReport(
        randomness=randomness_measure(corr),
        max_offpeak=max_off,
        mean_offpeak=mean_off,
        ones_fraction=balance(seq),
        convention=conv,
        sequence_label=seq.label,
    )
