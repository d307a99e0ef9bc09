"""Sequence generation: D-sequences, shifted prime-indicator sums and hardened keystreams.

All sequences are finite binary strings over positions 1..N. Shifting is
non-cyclic right shift with zero fill (a shifted row starts with zeros);
cyclic wraparound happens only inside autocorrelation.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .primes import PrimeTable, _trial_division_is_prime

SHIFT_STRATEGIES = ("explicit", "uniform-random", "evenly-spaced")


@dataclass(frozen=True)
class BitSequence:
    """A finite 0/1 sequence with a free-form provenance label."""

    bits: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if len(bits) < 1:
            raise ValueError("sequence must have at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("sequence elements must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def length(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def to01(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from01(cls, text: str, label: str = "") -> "BitSequence":
        return cls(tuple(1 if c == "1" else 0 for c in text), label)


@dataclass(frozen=True)
class ShiftSet:
    """Distinct non-negative shift offsets, always containing the unshifted 0.

    Stored sorted ascending. The added count L excludes the mandatory 0, so
    a set built from (0, 7, 11, 22) has L = 3.
    """

    shifts: tuple[int, ...]

    def __post_init__(self) -> None:
        shifts = tuple(sorted(self.shifts))
        if len(set(shifts)) != len(shifts):
            raise ValueError(f"duplicate shift offsets in {self.shifts}")
        if any(s < 0 for s in shifts):
            raise ValueError(f"shift offsets must be non-negative, got {self.shifts}")
        if not shifts or shifts[0] != 0:
            raise ValueError("shift set must contain the unshifted offset 0")
        object.__setattr__(self, "shifts", shifts)

    @property
    def added(self) -> tuple[int, ...]:
        return self.shifts[1:]

    @property
    def added_count(self) -> int:
        return len(self.shifts) - 1


@dataclass(frozen=True)
class DSequenceSpec:
    """Parameters for a D-sequence: odd prime modulus q and emitted length."""

    q: int
    length: int

    def __post_init__(self) -> None:
        if self.q % 2 == 0 or self.q < 3 or not _trial_division_is_prime(self.q):
            raise ValueError(f"modulus must be an odd prime, got {self.q}")
        if self.length < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")


def d_sequence(spec: DSequenceSpec, table: PrimeTable) -> BitSequence:
    """Parity trace of the powers of two modulo q: bit i is (2^i mod q) mod 2.

    Runs i = 1..length by iterated modular doubling, one residue of state,
    no big-integer powering. The result is periodic with period ord_q(2).
    """
    if spec.q > table.limit:
        raise ValueError(f"q={spec.q} exceeds prime table limit {table.limit}")
    if not table.is_prime[spec.q]:
        raise ValueError(f"modulus must be an odd prime, got {spec.q}")
    bits = []
    r = 1
    for _ in range(spec.length):
        r = (r * 2) % spec.q
        bits.append(r & 1)
    return BitSequence(tuple(bits), label=f"dseq(q={spec.q},len={spec.length})")


def d_sequence_period(q: int) -> int:
    """Multiplicative order of 2 mod q, the period of the q D-sequence.

    Checks divisors of q-1 in ascending order; the order always divides q-1.
    """
    if q < 3 or q % 2 == 0 or not _trial_division_is_prime(q):
        raise ValueError(f"modulus must be an odd prime, got {q}")
    for d in _sorted_divisors(q - 1):
        if pow(2, d, q) == 1:
            return d
    raise AssertionError("unreachable: ord divides q-1 for odd prime q")


def _sorted_divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _xor_of_shifted_indicators(n: int, offsets: tuple[int, ...], table: PrimeTable) -> list[int]:
    # Positions 1..n; offset a contributes is_prime[k - a], zero below position a + 2.
    flags = table.is_prime
    out = [0] * n
    for a in offsets:
        for k in range(a + 2, n + 1):
            out[k - 1] ^= flags[k - a]
    return out


def binary_primes_sequence(n: int, shift_set: ShiftSet, table: PrimeTable) -> BitSequence:
    """XOR of zero-fill-shifted copies of the prime indicator row over positions 1..n.

    Bit k is the GF(2) sum over the shift set of "is k - a prime", where terms
    with k - a < 2 contribute nothing. With the single offset 0 this is the raw
    indicator row itself.
    """
    if n < 2:
        raise ValueError(f"sequence length must be >= 2, got {n}")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds prime table limit {table.limit}")
    if max(shift_set.shifts) >= n:
        raise ValueError(f"shift {max(shift_set.shifts)} out of range for length {n}")
    bits = _xor_of_shifted_indicators(n, shift_set.shifts, table)
    shifts_text = ",".join(str(s) for s in shift_set.shifts)
    return BitSequence(tuple(bits), label=f"bps(n={n},shifts={shifts_text})")


def harden(pn: BitSequence, bps: BitSequence) -> BitSequence:
    """Positionwise XOR of a pseudorandom sequence with a binary primes sequence.

    An involution: hardening twice with the same bps recovers the input bits.
    """
    if pn.length != bps.length:
        raise ValueError(f"length mismatch: {pn.length} != {bps.length}")
    bits = tuple(a ^ b for a, b in zip(pn.bits, bps.bits))
    return BitSequence(bits, label=f"hardened({pn.label or 'pn'},{bps.label or 'bps'})")


def select_shifts(
    n: int,
    l: int,
    strategy: str = "evenly-spaced",
    seed: int | None = None,
    explicit_values: tuple[int, ...] | None = None,
) -> ShiftSet:
    """Build a shift set of l added offsets (plus the mandatory 0) for length n.

    explicit: validates the caller's values, which must include 0 and exactly
    l added offsets. uniform-random: l distinct draws from 1..n-1, reproducible
    for a given seed. evenly-spaced: round(i*n/(l+1)) for i=1..l, probing
    rightward past collisions.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= l <= n - 1:
        raise ValueError(f"added shift count must be in 1..{n - 1}, got {l}")
    if strategy == "explicit":
        if explicit_values is None:
            raise ValueError("explicit strategy requires explicit_values")
        shift_set = ShiftSet(tuple(explicit_values))
        if shift_set.added_count != l:
            raise ValueError(
                f"explicit values carry {shift_set.added_count} added shifts, expected {l}"
            )
        if max(shift_set.shifts) >= n:
            raise ValueError(f"shift {max(shift_set.shifts)} out of range for length {n}")
        return shift_set
    if strategy == "uniform-random":
        rng = random.Random(seed)
        return ShiftSet((0, *rng.sample(range(1, n), l)))
    if strategy == "evenly-spaced":
        used = {0}
        for i in range(1, l + 1):
            c = _round_half_up_ratio(i * n, l + 1)
            while c in used:
                c += 1
                if c >= n:
                    c = 1
            used.add(c)
        return ShiftSet(tuple(used))
    raise ValueError(f"unknown strategy {strategy!r}, expected one of {SHIFT_STRATEGIES}")


def _round_half_up_ratio(a: int, b: int) -> int:
    # round(a / b) with halves away from zero, in exact integer arithmetic
    return (2 * a + b) // (2 * b)


# --- sequence text format -------------------------------------------------
#
# Optional leading '#' comment lines carry key=value metadata; the body is
# ASCII '0'/'1' with newlines ignored.

_BODY_WIDTH = 64


def format_sequence(seq: BitSequence, metadata: dict[str, object] | None = None) -> str:
    """Render a sequence in the text format, preserving the label as metadata."""
    lines = []
    metadata = dict(metadata or {})
    if seq.label and "label" not in metadata:
        metadata["label"] = seq.label
    for key, value in metadata.items():
        lines.append(f"# {key}={value}")
    body = seq.to01()
    for i in range(0, len(body), _BODY_WIDTH):
        lines.append(body[i : i + _BODY_WIDTH])
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> BitSequence:
    """Parse the text format back into a BitSequence.

    Raises ValueError naming the offending line for any body character other
    than '0' or '1'.
    """
    bits: list[int] = []
    metadata: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            comment = line[1:].strip()
            if "=" in comment:
                key, _, value = comment.partition("=")
                metadata[key.strip()] = value
            continue
        for ch in line:
            if ch == "0":
                bits.append(0)
            elif ch == "1":
                bits.append(1)
            else:
                raise ValueError(f"line {lineno}: invalid character {ch!r} in sequence body")
    if not bits:
        raise ValueError("no sequence data found")
    label = metadata.get("label")
    if label is None:
        label = " ".join(f"{k}={v}" for k, v in metadata.items())
    return BitSequence(tuple(bits), label=label)
