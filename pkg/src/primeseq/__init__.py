"""Binary primes sequences for hardening pseudorandom keystreams.

Generation of prime-indicator XOR sequences and D-sequences, cyclic
autocorrelation analysis under explicit conventions, attacker search-space
accounting and a reproduction harness for the published reference data.
"""
from .primes import (
    PrimeTable,
    count_primes,
    pnt_estimate,
    prime_indicator,
    recommended_shift_count,
    sieve_primes,
)
from .sequences import (
    BitSequence,
    DSequenceSpec,
    ShiftSet,
    binary_primes_sequence,
    d_sequence,
    d_sequence_period,
    format_sequence,
    harden,
    parse_sequence,
    select_shifts,
)
from .analysis import (
    AnalysisReport,
    CorrelationConvention,
    CorrelationSeries,
    DEFAULT_CONVENTION,
    all_conventions,
    analyze,
    autocorrelation,
    balance,
    off_peak_stats,
    randomness_measure,
)
from .adversary import (
    AttackResult,
    SearchSpaceEstimate,
    brute_force_attack,
    estimate_search_space,
    exact_hypothesis_count,
    search_space_log10_consistent,
    search_space_log10_paper,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AttackResult",
    "BitSequence",
    "CorrelationConvention",
    "CorrelationSeries",
    "DEFAULT_CONVENTION",
    "DSequenceSpec",
    "PrimeTable",
    "SearchSpaceEstimate",
    "ShiftSet",
    "all_conventions",
    "analyze",
    "autocorrelation",
    "balance",
    "binary_primes_sequence",
    "brute_force_attack",
    "count_primes",
    "d_sequence",
    "d_sequence_period",
    "estimate_search_space",
    "exact_hypothesis_count",
    "format_sequence",
    "harden",
    "off_peak_stats",
    "parse_sequence",
    "pnt_estimate",
    "prime_indicator",
    "randomness_measure",
    "recommended_shift_count",
    "search_space_log10_consistent",
    "search_space_log10_paper",
    "select_shifts",
    "sieve_primes",
]
