"""Command-line front end.

Subcommands: classify, factor, table8, sieve, arrays, verify, bench.
Exit codes: 0 success, 1 verification failure, 2 usage or argument error.
Negative numeric arguments need a ``--`` separator (``classify -- -2``) or
the ``=`` form (``--first=-26``) so they are not read as options.
"""

from __future__ import annotations

import argparse
import sys

from . import arrays, primes, products
from .primes import Factorization
from .residues import I64_MAX, I64_MIN, decompose

_KIND_BY_NAME = {kind.value: kind for kind in arrays.ArrayKind}

# Defaults chosen so each bare view shows the interesting span: the first
# three 9-wide rows for a1, the six rows crossing 0 for a2, the matching
# 3-wide span for a3, and the ten signed row pairs for oa-ea.
_ARRAY_DEFAULTS = {
    "a1": (1, 3),
    "a2": (-26, 6),
    "a3": (-26, 18),
    "oa-ea": (-29, 10),
}


def _int64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not I64_MIN <= value <= I64_MAX:
        raise argparse.ArgumentTypeError(f"{text} is outside the signed 64-bit range")
    return value


def _factor_cell(f: Factorization) -> str:
    """CSV cell: 'unit' for +-1, empty for primes, compact product otherwise."""
    if f.is_unit:
        return "unit"
    if f.is_prime_value:
        return ""
    return f.expr(times="*")


def cmd_classify(args: argparse.Namespace) -> int:
    c = decompose(args.n)
    if args.format == "csv":
        print("value,type,class,n")
        print(f"{c.value},{c.type_letter.letter},{c.six_class.label},{c.index_n}")
    else:
        print(
            f"value={c.value} type={c.type_letter.letter} "
            f"class={c.six_class.label} n={c.index_n}"
        )
    return 0


def cmd_factor(args: argparse.Namespace) -> int:
    f = primes.factorize(args.n)
    if f.is_unit:
        print(f"{args.n} is a unit")
    elif f.is_prime_value:
        print(f"{args.n} is prime")
    else:
        print(f"{args.n} = {f.expr()}")
    return 0


def cmd_table8(args: argparse.Namespace) -> int:
    rows = primes.alpha_beta_table(args.max_n)
    if args.format == "csv":
        print(
            "n,alpha_type,alpha_value,alpha_factorization,"
            "beta_type,beta_value,beta_factorization"
        )
        for r in rows:
            print(
                f"{r.n},{r.alpha_type.letter},{r.alpha_value},"
                f"{_factor_cell(r.alpha_factorization)},"
                f"{r.beta_type.letter},{r.beta_value},"
                f"{_factor_cell(r.beta_factorization)}"
            )
    else:
        for r in rows:
            line = (
                f"{r.n:>4}  {r.alpha_type.letter} {r.alpha_value:>5} "
                f"{_factor_cell(r.alpha_factorization):<14} "
                f"{r.beta_type.letter} {r.beta_value:>5} "
                f"{_factor_cell(r.beta_factorization)}"
            )
            print(line.rstrip())
    return 0


def cmd_sieve(args: argparse.Namespace) -> int:
    ps = primes.sieve(args.limit)
    if args.format == "csv":
        print("p")
        for p in ps:
            print(p)
    else:
        print(" ".join(str(p) for p in ps))
    return 0


def cmd_arrays(args: argparse.Namespace) -> int:
    kind = _KIND_BY_NAME[args.which]
    default_first, default_rows = _ARRAY_DEFAULTS[args.which]
    first = args.first if args.first is not None else default_first
    rows = args.rows if args.rows is not None else default_rows
    view = arrays.render(kind, first, rows)
    sys.stdout.write(view.to_csv() if args.format == "csv" else view.to_text())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = [
        products.verify_type_closure(args.limit),
        products.verify_class_closure(args.limit),
        primes.prime_location_check(args.limit),
    ]
    for report in reports:
        print(report)
    failed = sum(1 for r in reports if not r.passed)
    if failed:
        print(f"{failed} of {len(reports)} checks FAILED")
        return 1
    print(f"all {len(reports)} checks passed")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    report = primes.bench(args.limit)
    match = "yes" if report.primes_match else "NO"
    if args.format == "csv":
        print(
            "limit,naive_seconds,wheel_seconds,naive_candidates,"
            "wheel_candidates,candidate_ratio,prime_count,primes_match"
        )
        print(
            f"{report.limit},{report.naive_seconds:.6f},{report.wheel_seconds:.6f},"
            f"{report.naive_candidates},{report.wheel_candidates},"
            f"{report.candidate_ratio:.6f},{report.prime_count},"
            f"{'true' if report.primes_match else 'false'}"
        )
    else:
        print(f"limit: {report.limit}")
        print(f"naive sieve: {report.naive_seconds:.6f} s  ({report.naive_candidates} candidate flags)")
        print(f"wheel sieve: {report.wheel_seconds:.6f} s  ({report.wheel_candidates} candidate flags)")
        print(f"candidate ratio: {report.candidate_ratio:.6f}")
        print(f"primes found: {report.prime_count}")
        print(f"outputs match: {match}")
    if args.plot is not None:
        from . import plots

        plots.save_bench_figure(report, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0 if report.primes_match else 1


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("text", "csv"), default="text", help="output format (default text)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixwheel",
        description=(
            "Classify integers by digital-root type (a-i) and mod-6 class "
            "(alpha-zeta), factor and sieve on the 6k+-1 wheel, and render "
            "the classification arrays."
        ),
        epilog="Negative arguments: use '--' (sixwheel classify -- -2) or the = form (--first=-26).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="type letter, class and index of an integer")
    p.add_argument("n", type=_int64, help="integer to classify")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("factor", help="canonical prime factorization")
    p.add_argument("n", type=_int64, help="nonzero integer")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("table8", help="alpha/beta values with factorizations, rows 0..max-n")
    p.add_argument("--max-n", type=int, default=100, help="last row index (default 100)")
    _add_format(p)
    p.set_defaults(func=cmd_table8)

    p = sub.add_parser("sieve", help="primes up to a limit (segmented wheel sieve)")
    p.add_argument("--limit", type=int, required=True, help="inclusive upper bound")
    _add_format(p)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("arrays", help="render a classification array view")
    p.add_argument(
        "--which", choices=sorted(_KIND_BY_NAME), default="a1", help="which array (default a1)"
    )
    p.add_argument("--first", type=int, default=None, help="first value (row-aligned)")
    p.add_argument("--rows", type=int, default=None, help="row count (pairs for oa-ea)")
    _add_format(p)
    p.set_defaults(func=cmd_arrays)

    p = sub.add_parser("verify", help="run the exhaustive closure and prime-location checks")
    p.add_argument("--limit", type=int, default=3000, help="|x|,|y| bound (default 3000)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the naive sieve against the wheel sieve")
    p.add_argument("--limit", type=int, default=1_000_000, help="sieve bound (default 1000000)")
    p.add_argument("--plot", metavar="PATH", default=None, help="also write a comparison figure")
    _add_format(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
