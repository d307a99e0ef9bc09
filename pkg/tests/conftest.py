"""Shared fixtures and independent oracle implementations.

The oracles deliberately take the dumbest possible path (trial division,
double loops, brute-force order search) so they stay independent of the
package's fast paths.
"""
from __future__ import annotations

import math

import pytest

from primeseq import sieve_primes


@pytest.fixture(scope="session")
def table1000():
    return sieve_primes(1000)


@pytest.fixture(scope="session")
def table2000():
    return sieve_primes(2000)


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def oracle_primes_upto(limit: int) -> list[int]:
    return [k for k in range(2, limit + 1) if oracle_is_prime(k)]


def oracle_autocorrelation(bits, mapping="bipolar", normalization="by-n"):
    n = len(bits)
    s = [2 * b - 1 for b in bits] if mapping == "bipolar" else list(bits)
    values = []
    for k in range(n):
        acc = 0.0
        for m in range(n):
            acc += s[m] * s[(m + k) % n]
        values.append(acc / n)
    if normalization == "by-peak":
        peak = values[0]
        values = [v / peak for v in values]
    return values


def oracle_randomness(values) -> float:
    return 1.0 - sum(abs(v) for v in values[1:]) / (len(values) - 1)


def oracle_offpeak(values) -> tuple[float, float]:
    mags = [abs(v) for v in values[1:]]
    return max(mags), sum(mags) / len(mags)


def oracle_mult_order_of_two(q: int) -> int:
    t, r = 1, 2 % q
    while r != 1:
        r = r * 2 % q
        t += 1
    return t


def oracle_d_bits(q: int, length: int) -> list[int]:
    return [pow(2, i, q) % 2 for i in range(1, length + 1)]


def oracle_bps_bits(n: int, shifts, prime_set) -> list[int]:
    out = []
    for k in range(1, n + 1):
        v = 0
        for a in shifts:
            v ^= 1 if (k - a) in prime_set else 0
        out.append(v)
    return out
