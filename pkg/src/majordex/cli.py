"""Command-line front end: ``majordex {compositions,gray,perms,verify,bench}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import bench, verify
from .colexgen import gen_colex
from .graygen import gen1_gray, gen1_gray_bounded, gen2_gray
from .permgen import gen_perm_major
from .seqcore import CLOSE_TRIPLES, BoundingSequence, max_weight, min_colex


def _fmt(seq) -> str:
    return " ".join(map(str, seq))


def _parse_bounds(text: str, n: int) -> tuple[int, ...]:
    if text.strip() == "subexcedant":
        return tuple(range(n))
    parts = text.replace(",", " ").split()
    try:
        b = tuple(int(x) for x in parts)
    except ValueError:
        raise ValueError(f"bounds must be naturals or 'subexcedant', got {text!r}") from None
    if len(b) != n:
        raise ValueError(f"expected {n} bounds, got {len(b)}")
    BoundingSequence(b)
    return b


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        return range(int(text), int(text) + 1)
    return range(int(lo), int(hi) + 1)


def _check_weight(parser, k, n):
    if n < 0:
        parser.error(f"--n must be non-negative, got {n}")
    if not 0 <= k <= max_weight(n):
        parser.error(f"--k must lie in 0..{max_weight(n)} for n={n}, got {k}")


def cmd_compositions(args, parser) -> int:
    if args.n < 0 or args.k < 0:
        parser.error("--n and --k must be non-negative")
    try:
        b = _parse_bounds(args.bounds, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    out = []
    if args.unsafe_general_bounds:
        print("warning: Gray-style ordering over general bounds; consecutive "
              "compositions are not guaranteed to be close", file=sys.stderr)
        count = gen1_gray_bounded(args.k, args.n, b, out.append)
    else:
        count = gen_colex(args.k, args.n, b, out.append)
    if args.format == "json":
        print(json.dumps([list(c) for c in out]))
    else:
        sys.stdout.write("".join(_fmt(c) + "\n" for c in out))
    print(f"count: {count}", file=sys.stderr)
    return 0


def cmd_gray(args, parser) -> int:
    _check_weight(parser, args.k, args.n)
    write = sys.stdout.write
    if args.emit == "full":
        count = gen1_gray(args.k, args.n, lambda c: write(_fmt(c) + "\n"), direction=args.direction)
    else:
        first = min_colex(args.k, args.n)

        def emit(d):
            if d.p == 0:
                write(_fmt(first) + "\n")
            else:
                write(f"{d.p} {d.u} {_fmt(d.window)}\n")

        count = gen2_gray(args.k, args.n, emit)
    print(f"count: {count}", file=sys.stderr)
    return 0


def cmd_perms(args, parser) -> int:
    _check_weight(parser, args.k, args.n)
    write = sys.stdout.write
    count = gen_perm_major(args.k, args.n, lambda e: write(_fmt(e.sigma) + "\n"))
    print(f"count: {count}", file=sys.stderr)
    return 0


def cmd_verify(args, parser) -> int:
    if args.n_max < 1:
        parser.error("--n-max must be at least 1")
    triples = CLOSE_TRIPLES
    if args.inject_fault == "closeness":
        # drop one admissible difference; the Gray suite must notice
        triples = CLOSE_TRIPLES - {(1, -2, 1), (-1, 2, -1)}
    failures = verify.run(args.n_max, args.suite, triples, workers=verify.workers_from_env())
    for msg in failures:
        print(f"FAIL {msg}")
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    status = "FAIL" if failures else "PASS"
    print(f"{status}: suites={','.join(suites)} n<={args.n_max} failures={len(failures)}")
    return 1 if failures else 0


def cmd_bench(args, parser) -> int:
    try:
        n_range = _parse_range(args.n_range)
    except ValueError:
        parser.error(f"--n-range must look like LO:HI, got {args.n_range!r}")
    stats = bench.sweep(args.generator, n_range, args.k_policy)
    if args.json:
        print(bench.to_json(stats))
    else:
        print(f"{'gen':>6} {'n':>3} {'k':>4} {'objects':>12} {'ratio':>8} {'qchain':>6} {'ms':>10}")
        for s in stats:
            print(f"{s.generator:>6} {s.n:>3} {s.k:>4} {s.objects:>12} {s.ratio:>8.3f} "
                  f"{s.max_qchain:>6} {s.elapsed_ns / 1e6:>10.1f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majordex",
        description="Gray codes for subexcedant sequences and permutations with a given major index.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compositions", help="bounded compositions in co-lex order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bounds", default="subexcedant",
                   help="comma/space separated bounds, or 'subexcedant' (default)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--unsafe-general-bounds", action="store_true",
                   help="use Gray-style ordering over the given bounds (no closeness guarantee)")
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser("gray", help="Gray code of fixed-weight subexcedant sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", choices=("full", "delta"), default="full")
    p.add_argument("--direction", type=int, choices=(0, 1), default=0,
                   help="1 lists the code in reverse (full mode only)")
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("perms", help="permutations with major index k, in Gray order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_perms)

    p = sub.add_parser("verify", help="run the exhaustive property suites")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--inject-fault", choices=("closeness",), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="work-per-object measurements")
    p.add_argument("--generator", choices=bench.GENERATORS, default="gray2")
    p.add_argument("--n-range", default="10:12", help="inclusive range LO:HI")
    p.add_argument("--k-policy", choices=sorted(bench.K_POLICIES), default="mid")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
