"""Command-line surface: generate, analyze, harden, count and reproduce.

Exit codes: 0 success, 2 usage error, 3 domain error (bad modulus, bad
shifts, malformed sequence file), 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .adversary import brute_force_attack, estimate_search_space
from .analysis import CorrelationConvention, analyze, autocorrelation
from .primes import DEFAULT_SIEVE_LIMIT, recommended_shift_count, sieve_primes
from .reproduce import TARGET_IDS, make_target, run_target
from .sequences import (
    BitSequence,
    DSequenceSpec,
    ShiftSet,
    binary_primes_sequence,
    d_sequence,
    format_sequence,
    harden,
    parse_sequence,
    select_shifts,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _parse_shifts(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"shifts must be comma-separated integers, got {text!r}")
    if 0 not in values:
        values = (0, *values)
    return values


def _check_size(name: str, value: int) -> None:
    if value > DEFAULT_SIEVE_LIMIT:
        raise ValueError(f"{name}={value} exceeds supported maximum {DEFAULT_SIEVE_LIMIT}")


def _resolve_shifts(n: int, shifts_arg: str | None, seed: int | None) -> ShiftSet:
    # explicit values win; otherwise pick recommended-count shifts, randomly
    # when a seed is given, evenly spaced when not
    if shifts_arg is not None:
        return ShiftSet(_parse_shifts(shifts_arg))
    l = recommended_shift_count(n)
    strategy = "uniform-random" if seed is not None else "evenly-spaced"
    return select_shifts(n, l, strategy, seed=seed)


def _emit_sequence(seq: BitSequence, metadata: dict[str, object], out: str | None) -> None:
    text = format_sequence(seq, metadata)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_sequence(path: str) -> BitSequence:
    return parse_sequence(Path(path).read_text())


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "dseq":
        if args.q is None:
            raise ValueError("gen dseq requires --q")
        length = args.len if args.len is not None else args.q
        _check_size("q", args.q)
        table = sieve_primes(max(args.q, 2))
        seq = d_sequence(DSequenceSpec(q=args.q, length=length), table)
        meta = {"kind": "dseq", "q": args.q, "n": length}
    elif args.kind == "bps":
        if args.n is None:
            raise ValueError("gen bps requires --n")
        _check_size("n", args.n)
        shifts = _resolve_shifts(args.n, args.shifts, args.seed)
        table = sieve_primes(args.n)
        seq = binary_primes_sequence(args.n, shifts, table)
        meta = {"kind": "bps", "n": args.n,
                "shifts": ",".join(str(s) for s in shifts.shifts)}
    else:  # hardened
        if args.q is None:
            raise ValueError("gen hardened requires --q")
        length = args.len if args.len is not None else args.q
        _check_size("q", args.q)
        _check_size("len", length)
        shifts = _resolve_shifts(length, args.shifts, args.seed)
        table = sieve_primes(max(args.q, length, 2))
        pn = d_sequence(DSequenceSpec(q=args.q, length=length), table)
        bps = binary_primes_sequence(length, shifts, table)
        seq = harden(pn, bps)
        meta = {"kind": "hardened", "q": args.q, "n": length,
                "shifts": ",".join(str(s) for s in shifts.shifts)}
    label = " ".join(f"{k}={v}" for k, v in meta.items())
    seq = BitSequence(seq.bits, label=label)
    _emit_sequence(seq, meta, args.out)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    seq = _read_sequence(args.input)
    conv = CorrelationConvention(args.convention, args.normalize)
    report = analyze(seq, conv)
    print(json.dumps(report.as_dict()))
    if args.out is not None:
        corr = autocorrelation(seq, conv)
        with open(args.out, "w") as fh:
            fh.write("lag,c\n")
            for lag, value in enumerate(corr.values):
                fh.write(f"{lag},{format(value, '.10g')}\n")
    return EXIT_OK


def _cmd_reproduce(args: argparse.Namespace) -> int:
    target = make_target(args.fig, args.out)
    summary = run_target(target)
    print(json.dumps(summary))
    return EXIT_OK


def _cmd_complexity(args: argparse.Namespace) -> int:
    estimate = estimate_search_space(args.n, args.l_max)
    payload: dict[str, object] = {
        "log10_paper_formula": estimate.log10_paper_formula,
        "log10_consistent_formula": estimate.log10_consistent_formula,
    }
    if estimate.exact_count is not None:
        payload["exact_count"] = estimate.exact_count
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_attack(args: argparse.Namespace) -> int:
    seq = _read_sequence(args.input)
    table = sieve_primes(max(seq.length, 2))
    result = brute_force_attack(seq, seq.length, args.l_max, table)
    print(json.dumps(result.as_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeseq",
        description="Binary primes sequences, D-sequences, hardened keystreams "
        "and their autocorrelation analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a sequence in the text format")
    p_gen.add_argument("kind", choices=("dseq", "bps", "hardened"))
    p_gen.add_argument("--q", type=int, help="odd prime modulus for dseq/hardened")
    p_gen.add_argument("--n", type=int, help="sequence length for bps")
    p_gen.add_argument("--len", type=int, help="emitted length (defaults to q)")
    p_gen.add_argument(
        "--shifts",
        help="comma-separated shift offsets; the unshifted 0 is prepended "
        "implicitly when not listed. Without --shifts, a recommended-count "
        "set is chosen: evenly spaced, or uniform random when --seed is given",
    )
    p_gen.add_argument("--seed", type=int, help="seed for random shift selection")
    p_gen.add_argument("--out", help="output file (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_an = sub.add_parser("analyze", help="report randomness and off-peak statistics")
    p_an.add_argument("input", help="sequence file in the text format")
    p_an.add_argument("--convention", choices=("bipolar", "raw01"), default="bipolar")
    p_an.add_argument("--normalize", choices=("by-n", "by-peak"), default="by-n")
    p_an.add_argument("--out", help="also write the lag,c CSV here")
    p_an.set_defaults(func=_cmd_analyze)

    p_rep = sub.add_parser("reproduce", help="regenerate a published table or figure trace")
    p_rep.add_argument("--fig", choices=TARGET_IDS, required=True)
    p_rep.add_argument("--out", help="output CSV path (default <id>.csv)")
    p_rep.set_defaults(func=_cmd_reproduce)

    p_cx = sub.add_parser("complexity", help="attacker search-space figures")
    p_cx.add_argument("--n", type=int, required=True)
    p_cx.add_argument("--l-max", type=int, default=3, dest="l_max")
    p_cx.set_defaults(func=_cmd_complexity)

    p_at = sub.add_parser("attack", help="toy brute-force key search on a short sequence")
    p_at.add_argument("input", help="observed sequence file in the text format")
    p_at.add_argument("--l-max", type=int, default=1, dest="l_max")
    p_at.set_defaults(func=_cmd_attack)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
