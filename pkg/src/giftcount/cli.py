"""Command-line interface.

Exit codes: 0 success, 1 verification or cross-method mismatch, 2 usage or
resource-guard error. Data goes to stdout (or ``--out``); diagnostics and
timings go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from .errors import GiftcountError, GuardError, InconsistencyError, PreconditionError
from .guesser import GuessQuery, guess_recurrence
from .oracle import GameConfig, count_full_game_playouts, iter_gamma_sequences
from .sequences import (
    RECURRENCE_SIGMAS,
    bit_length,
    g_by_recurrence,
    g_by_sum,
    g_moments,
    g_multinomial,
)
from .stirling import e_table_vertical
from .verify import run_verification

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("plain", "bfile", "csv")
METHODS = ("sum", "multinomial", "moments", "typec", "typed")


class UsageError(Exception):
    pass


def render(values: Sequence[int], fmt: str, offset: int = 0) -> str:
    """Serialize a run of values; every format ends with exactly one newline."""
    if fmt == "bfile":
        lines = [f"{offset + i} {v}" for i, v in enumerate(values)]
    elif fmt == "csv":
        lines = ["n,value"] + [f"{offset + i},{v}" for i, v in enumerate(values)]
    elif fmt == "plain":
        lines = [str(v) for v in values]
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"


def parse_bfile(text: str) -> tuple[int, list[int]]:
    """Inverse of ``render(..., 'bfile')``: returns (offset, values)."""
    indices, values = [], []
    for line in text.splitlines():
        idx, val = line.split(" ")
        indices.append(int(idx))
        values.append(int(val))
    if not indices:
        return 0, []
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise ValueError("b-file indices are not consecutive")
    return indices[0], values


def compute_g(sigma: int, nmax: int, method: str) -> list[int]:
    if method == "sum":
        return list(g_by_sum(sigma, nmax).values)
    if method == "multinomial":
        return [g_multinomial(sigma, n) for n in range(nmax + 1)]
    if method == "moments":
        return [g_moments(sigma, n) for n in range(nmax + 1)]
    if method in ("typec", "typed"):
        if sigma not in RECURRENCE_SIGMAS:
            raise UsageError(f"no stored {method} recurrence for sigma = {sigma}")
        return list(g_by_recurrence(method[-1], sigma, nmax).values)
    raise UsageError(f"unknown method {method!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_g(args) -> int:
    if args.sigma < 0 or args.nmax < 0:
        raise UsageError("--sigma and --nmax must be nonnegative")
    values = compute_g(args.sigma, args.nmax, args.method)
    _emit(render(values, args.format, args.offset), args.out)
    return EXIT_OK


def cmd_e(args) -> int:
    if args.sigma < 0 or args.n < 0:
        raise UsageError("--sigma and --n must be nonnegative")
    table = e_table_vertical(args.sigma, args.n)
    if args.k is not None:
        values, offset = [table[args.n, args.k]], args.k
    else:
        values, offset = list(table.row(args.n)), args.n
    _emit(render(values, args.format, offset), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results, notes = run_verification(args.sigma, args.nmax, deep=args.deep)
    for r in results:
        print(r.line())
    for note in notes:
        print(note)
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    cfg = GameConfig(args.sigma, args.gifts)
    print(count_full_game_playouts(cfg))
    if args.list:
        if args.gifts > 3:
            raise UsageError("--list is limited to --gifts <= 3")
        for seq in iter_gamma_sequences(args.sigma, args.gifts - 1):
            print("".join(map(str, seq)))
    return EXIT_OK


def cmd_guess(args) -> int:
    if args.demo_constant:
        terms = [5] * args.terms
    else:
        terms = list(g_by_sum(args.sigma, args.terms - 1).values)
    # default budget: order and degree up to sigma + 2
    max_order = args.max_order if args.max_order is not None else args.sigma + 2
    max_degree = args.max_degree if args.max_degree is not None else args.sigma + 2
    spec = guess_recurrence(GuessQuery(terms, max_order, max_degree, args.guard))
    if spec is None:
        print("NONE")
        return EXIT_OK
    print(f"lhs: {spec.lhs_coeff}")
    for i, c in enumerate(spec.rhs_coeffs, start=1):
        print(f"rhs[{i}]: {c}")
    print(spec.equation())
    return EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
        if m in ("typec", "typed") and args.sigma not in RECURRENCE_SIGMAS:
            raise UsageError(f"no stored recurrences for sigma = {args.sigma}")
        if m == "moments" and args.sigma < 1:
            raise UsageError("moments needs sigma >= 1")
    results = {}
    for m in methods:
        best = None
        for _ in range(max(args.repeat, 1)):
            start = time.perf_counter()
            values = compute_g(args.sigma, args.nmax, m)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        results[m] = values
        print(f"{m} terms={len(values)} max_bits={bit_length(values)}")
        print(f"{m} wall={best:.6f}s", file=sys.stderr)
    reference_name = methods[0] if methods else None
    for m in methods[1:]:
        if results[m] != results[reference_name]:
            n = next(i for i, (a, b) in enumerate(zip(results[m], results[reference_name])) if a != b)
            print(f"MISMATCH {m} vs {reference_name} at n={n}", file=sys.stderr)
            return EXIT_MISMATCH
    print("AGREE" if methods else "NO METHODS")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giftcount",
        description="Exact gift-exchange counts and restricted Stirling numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("g", help="G_sigma(0..nmax)")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="sum")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--offset", type=int, default=0, help="index of the first term (default 0)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_g)

    p = sub.add_parser("e", help="E_sigma(n, k), one value or a whole row")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_e)

    p = sub.add_parser("verify", help="cross-method verification suite")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--deep", action="store_true", help="also run brute-force oracles")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="count full game playouts H_sigma(gifts)")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--gifts", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list gamma sequences (gifts <= 3)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("guess", help="guess a recurrence for G_sigma from its first terms")
    p.add_argument("--sigma", type=int, default=1)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--max-order", type=int, help="default sigma + 2")
    p.add_argument("--max-degree", type=int, help="default sigma + 2")
    p.add_argument("--guard", type=int, default=5, help="held-out terms (default 5)")
    p.add_argument("--demo-constant", action="store_true", help="use a constant sequence instead")
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("bench", help="time methods and check they agree")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--methods", default="sum,typec,typed")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except GiftcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
