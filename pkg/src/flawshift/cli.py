"""Command-line interface: ``flawshift <command> ...``."""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from typing import List, Optional, TextIO

from .bijections import apply_f_classic
from .checks import CHECKS, run_all
from .errors import DomainError, FlawshiftError
from .factors import factor_to_dot, format_cycle, middle_factor, odd_factor, verify_factor
from .flips import pi_direct, pi_recursive, recover_origin
from .generator import ColumnIterator, iter_grid
from .oracle import max_k, random_lattice_path
from .paths import format_path, parse_path

_TO_BITS = bytes.maketrans(b"UD", b"10")


def _emit_view(out: TextIO, view, bits: bool) -> None:
    raw = view.tobytes()
    if bits:
        raw = raw.translate(_TO_BITS)
    out.write(raw.decode("ascii") + "\n")


def _positions(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def cmd_column(args, out: TextIO) -> int:
    x = parse_path(args.path)
    it = ColumnIterator(x)
    out.write(format_path(x, args.bits) + "\n")
    if args.delta:
        write = out.write
        for delta, _ in it:
            write(f"{delta.up_flip} {delta.down_flip}\n")
    else:
        for _, view in it:
            _emit_view(out, view, args.bits)
    return 0


def cmd_grid(args, out: TextIO) -> int:
    for delta, view in iter_grid(args.k):
        if delta is None or not args.delta:
            _emit_view(out, view, args.bits)
        else:
            out.write(f"{delta.up_flip} {delta.down_flip}\n")
    return 0


def cmd_pi(args, out: TextIO) -> int:
    x = parse_path(args.path)
    p = pi_direct(x) if args.method == "direct" else pi_recursive(x)
    out.write(f"{p}\n")
    return 0


def cmd_origin(args, out: TextIO) -> int:
    x = parse_path(args.path)
    w = recover_origin(x)
    out.write(f"U_x {_positions(w.up_set)}\n")
    out.write(f"D_x {_positions(w.down_set)}\n")
    out.write(f"origin {format_path(w.origin, args.bits)}\n")
    return 0


def _cmd_factor(args, out: TextIO, build) -> int:
    fac = build(args.k)
    if args.dot:
        out.write(factor_to_dot(fac))
    else:
        for c in fac.cycles:
            out.write(format_cycle(c) + "\n")
    if args.verify:
        rep = verify_factor(fac)
        print(rep.summary(), file=sys.stderr)
        return 0 if rep.passed else 1
    return 0


def cmd_verify(args, out: TextIO) -> int:
    if args.k > max_k():
        raise DomainError(f"k={args.k} exceeds the enumeration cap {max_k()} (set FLAWSHIFT_MAX_K)")
    results = run_all(args.k, args.check, args.jobs)
    for r in results:
        out.write(r.row() + "\n")
    ok = all(r.passed for r in results)
    out.write(("all passed" if ok else "FAILED") + "\n")
    return 0 if ok else 1


def cmd_bench(args, out: TextIO) -> int:
    k = args.k
    rng = random.Random(args.seed)
    origin = recover_origin(random_lattice_path(k, rng)).origin
    init_times = []
    yield_times: List[int] = []
    max_ops = 0
    clock = time.perf_counter_ns
    for _ in range(args.reps):
        t0 = clock()
        it = ColumnIterator(origin)
        init_times.append(clock() - t0)
        nxt = it.__next__
        for _ in range(it.remaining):
            t = clock()
            nxt()
            yield_times.append(clock() - t)
        max_ops = max(max_ops, it.max_ops)

    classic_times = []
    cur = origin
    for _ in range(min(args.classic_steps, k)):
        t = clock()
        cur = apply_f_classic(cur)
        classic_times.append(clock() - t)

    yield_times.sort()
    lines = [
        ("k", k),
        ("reps", args.reps),
        ("init_ms_min", min(init_times) / 1e6),
        ("init_ms_mean", statistics.fmean(init_times) / 1e6),
        ("yield_ns_mean", statistics.fmean(yield_times)),
        ("yield_ns_median", yield_times[len(yield_times) // 2]),
        ("yield_ns_p99", yield_times[min(len(yield_times) - 1, int(len(yield_times) * 0.99))]),
        ("yield_ns_max", yield_times[-1]),
        ("yield_ops_max", max_ops),
        ("classic_steps", len(classic_times)),
        ("classic_ns_mean", statistics.fmean(classic_times) if classic_times else 0.0),
    ]
    for name, value in lines:
        if isinstance(value, float):
            out.write(f"{name} {value:.3f}\n")
        else:
            out.write(f"{name} {value}\n")
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flawshift", description="Minimum-change Chung-Feller bijection toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("column", help="print x, f(x), ..., up to k flaws")
    p.add_argument("path")
    p.add_argument("--delta", action="store_true", help="print 'up down' flip pairs after the first path")
    p.add_argument("--bits", action="store_true", help="print paths as 1/0 (up = 1)")
    p.set_defaults(func=cmd_column)

    p = sub.add_parser("grid", help="saw-tooth enumeration of every path with 2k steps")
    p.add_argument("k", type=_positive)
    p.add_argument("--delta", action="store_true")
    p.add_argument("--bits", action="store_true")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("pi", help="flip-order permutation of a zero-flaw Dyck path")
    p.add_argument("path")
    p.add_argument("--method", choices=("recursive", "direct"), default="recursive")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("origin", help="zero-flaw origin of a path and the differing positions")
    p.add_argument("path")
    p.add_argument("--bits", action="store_true")
    p.set_defaults(func=cmd_origin)

    for name, build in (("oddfactor", odd_factor), ("middlefactor", middle_factor)):
        p = sub.add_parser(name, help=f"cycle factor ({name}) for the given k")
        p.add_argument("k", type=_positive)
        p.add_argument("--dot", action="store_true", help="emit a Graphviz graph instead of cycle lines")
        p.add_argument("--verify", action="store_true", help="certify the factor; report on stderr")
        p.set_defaults(func=lambda a, o, b=build: _cmd_factor(a, o, b))

    p = sub.add_parser("verify", help="run the brute-force property suite at k")
    p.add_argument("k", type=_positive)
    p.add_argument("--check", action="append", choices=list(CHECKS), help="run only this check (repeatable)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time initialization and per-path cost of a full column")
    p.add_argument("k", type=_positive)
    p.add_argument("reps", type=_positive)
    p.add_argument("--classic-steps", type=int, default=20, help="applications of the classic map to time")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except FlawshiftError as exc:
        print(f"flawshift: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
