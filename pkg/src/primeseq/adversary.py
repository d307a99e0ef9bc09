"""Eavesdropper accounting: search-space size formulas, exact counting and a toy attack.

Two closed-form search-space figures are exposed side by side because the
headline expression N^2/(2 ln N) * N^(N/ln N) and the product of its three
stated factors, (N/ln N) * (ln N)/2 * N^((ln N)/2), differ enormously. Both
are computed in the log domain; the exact combinatorial count is the ground
truth at small N and the toy attack validates it by enumeration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .primes import PrimeTable, _trial_division_is_prime, count_primes
from .sequences import ShiftSet, BitSequence

# Enumeration caps keeping the toy attack comfortably under a minute.
ATTACK_MAX_LENGTH = 24
ATTACK_MAX_ADDED_SHIFTS = 3


@dataclass(frozen=True)
class SearchSpaceEstimate:
    log10_paper_formula: float
    log10_consistent_formula: float
    exact_count: int | None
    parameters: tuple[int, int]


@dataclass(frozen=True)
class AttackResult:
    consistent_hypotheses: tuple[tuple[int, ShiftSet], ...]
    hypotheses_tested: int
    target_length: int

    def as_dict(self) -> dict[str, object]:
        # wire format: the hypothesis array plus the count, nothing else
        return {
            "consistent_hypotheses": [
                {"q": q, "shifts": list(shifts.shifts), "matched": True}
                for q, shifts in self.consistent_hypotheses
            ],
            "hypotheses_tested": self.hypotheses_tested,
        }


def search_space_log10_paper(n: int) -> float:
    """log10 of the headline attacker-workload expression n^2/(2 ln n) * n^(n/ln n)."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    ln_n = math.log(n)
    return math.log10(n * n / (2.0 * ln_n)) + (n / ln_n) * math.log10(n)


def search_space_log10_consistent(n: int) -> float:
    """log10 of the product of the three stated unknowns: (n/2) * n^((ln n)/2)."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return math.log10(n / 2.0) + 0.5 * math.log(n) * math.log10(n)


def exact_hypothesis_count(n: int, l_max: int, table: PrimeTable) -> int:
    """Exact size of the (prime, added-shift-set) hypothesis space.

    pi(n) prime choices times the number of ways to pick 1..l_max distinct
    added shifts from 1..n-1 (the offset 0 is fixed).
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= l_max <= n - 1:
        raise ValueError(f"l_max must be in 1..{n - 1}, got {l_max}")
    prime_choices = count_primes(n, table)
    shift_choices = sum(math.comb(n - 1, l) for l in range(1, l_max + 1))
    return prime_choices * shift_choices


def _candidate_primes(n: int, table: PrimeTable) -> list[int]:
    # The number of candidates is pi(n); their identities start at the
    # smallest prime >= n, since a D-sequence modulus below its own emitted
    # length would repeat inside the window.
    want = count_primes(n, table)
    out: list[int] = []
    q = n
    while len(out) < want:
        if _trial_division_is_prime(q):
            out.append(q)
        q += 1
    return out


def _d_bits_packed(q: int, n: int) -> int:
    x = 0
    r = 1
    for i in range(n):
        r = (r * 2) % q
        if r & 1:
            x |= 1 << i
    return x


def brute_force_attack(
    observed: BitSequence, n: int, l_max: int, table: PrimeTable
) -> AttackResult:
    """Enumerate every (q, shift set) hypothesis and return those that regenerate observed.

    A hypothesis regenerates by XORing the shifted-indicator sum with the
    candidate D-sequence; matching is bit exact. Output is ordered by q then
    by shifts regardless of enumeration order.
    """
    if n != observed.length:
        raise ValueError(f"n={n} must equal the observed length {observed.length}")
    if n > ATTACK_MAX_LENGTH or l_max > ATTACK_MAX_ADDED_SHIFTS:
        raise ValueError(
            f"instance too large: enforced bounds are n <= {ATTACK_MAX_LENGTH} "
            f"and l_max <= {ATTACK_MAX_ADDED_SHIFTS}, got n={n}, l_max={l_max}"
        )
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= l_max <= n - 1:
        raise ValueError(f"l_max must be in 1..{n - 1}, got {l_max}")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds prime table limit {table.limit}")

    mask = (1 << n) - 1
    target = _pack(observed.bits)
    # indicator row over positions 1..n; a right shift by a in position space
    # is a left shift by a in packed-bit space
    base = 0
    for k in range(2, n + 1):
        if table.is_prime[k]:
            base |= 1 << (k - 1)

    tested = 0
    matches: list[tuple[int, ShiftSet]] = []
    for q in _candidate_primes(n, table):
        d_packed = _d_bits_packed(q, n)
        residual = target ^ d_packed ^ base
        for l in range(1, l_max + 1):
            for added in combinations(range(1, n), l):
                tested += 1
                acc = 0
                for a in added:
                    acc ^= (base << a) & mask
                if acc == residual:
                    matches.append((q, ShiftSet((0, *added))))
    matches.sort(key=lambda h: (h[0], h[1].shifts))
    return AttackResult(tuple(matches), tested, n)


def _pack(bits: tuple[int, ...]) -> int:
    x = 0
    for i, b in enumerate(bits):
        if b:
            x |= 1 << i
    return x


def estimate_search_space(n: int, l_max: int = ATTACK_MAX_ADDED_SHIFTS, table: PrimeTable | None = None) -> SearchSpaceEstimate:
    """Assemble both log-domain figures plus the exact count where tractable.

    The exact count is attached only for n small enough that the toy attack
    could actually walk the space (n <= ATTACK_MAX_LENGTH).
    """
    paper = search_space_log10_paper(n)
    consistent = search_space_log10_consistent(n)
    exact: int | None = None
    if n <= ATTACK_MAX_LENGTH:
        if table is None or table.limit < n:
            from .primes import sieve_primes

            table = sieve_primes(max(n, 2))
        exact = exact_hypothesis_count(n, min(l_max, n - 1), table)
    return SearchSpaceEstimate(paper, consistent, exact, (n, l_max))
