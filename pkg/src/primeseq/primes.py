"""Primality infrastructure: sieve bitmap, prime indicator, counting and the shifter-count rule.

The prime-counting story intentionally has two faces: ``count_primes`` is the
exact count from the sieve, ``pnt_estimate`` is the asymptotic n/ln(n)
approximation. They disagree noticeably at small n (168 vs 144.76 at n=1000),
so callers must pick the one they mean.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

# Sieves beyond this are refused; dense tables above 16M positions are out of scope.
DEFAULT_SIEVE_LIMIT = 1 << 24


@dataclass(frozen=True)
class PrimeTable:
    """Primality bitmap for 0..limit; ``is_prime[k]`` is nonzero iff k is prime."""

    limit: int
    is_prime: bytes = field(repr=False)

    def __post_init__(self) -> None:
        if self.limit < 2:
            raise ValueError(f"prime table limit must be >= 2, got {self.limit}")
        if len(self.is_prime) != self.limit + 1:
            raise ValueError("bitmap length must be limit + 1")
        if self.is_prime[0] or self.is_prime[1]:
            raise ValueError("0 and 1 are not prime")


def sieve_primes(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes up to ``limit`` inclusive."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > DEFAULT_SIEVE_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds supported maximum {DEFAULT_SIEVE_LIMIT}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start::p] = b"\x00" * ((limit - start) // p + 1)
    return PrimeTable(limit=limit, is_prime=bytes(flags))


def prime_indicator(k: int, table: PrimeTable) -> int:
    """1 if position k holds a prime, else 0.

    Non-positive k (and k=1) carry no prime and return 0; this is what makes
    zero-filled shifting of the indicator row well defined.
    """
    if k > table.limit:
        raise ValueError(f"k={k} out of range for table limit {table.limit}")
    if k < 2:
        return 0
    return table.is_prime[k]


def count_primes(n: int, table: PrimeTable) -> int:
    """Exact number of primes <= n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > table.limit:
        raise ValueError(f"n={n} out of range for table limit {table.limit}")
    return sum(table.is_prime[2 : n + 1])


def pnt_estimate(n: int) -> float:
    """Prime number theorem approximation n / ln(n) to the prime count below n."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n / math.log(n)


def recommended_shift_count(n: int) -> int:
    """Number of added shifts suggested for balancing an n-position indicator row.

    Evaluates (1/2) ln(n), rounded half away from zero, with a floor of one
    shift. Non-decreasing in n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return max(1, math.floor(0.5 * math.log(n) + 0.5))


def _trial_division_is_prime(n: int) -> bool:
    # Deterministic check for callers that have no table at hand (small n only).
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
