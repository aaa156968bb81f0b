"""Command-line front end: ``eval``, ``table``, ``solve`` and ``bench``.

Exit codes: 0 success, 2 usage or domain error, 3 I/O error, 4 tolerance
unreachable.  Only flags are consulted, never the environment.
"""

import argparse
import csv
import sys

from . import core, oracle, rivals
from .errors import DomainError, ToleranceUnreachable

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_UNREACHABLE = 4

CSV_HEADER = ["var", "k", "lower", "upper", "ref", "rel_err_lower", "rel_err_upper"]


class _UsageError(Exception):
    def __init__(self, flag, message):
        super().__init__(f"{flag}: {message}")


def fmt(value):
    """17 significant digits: round-trips every double."""
    return "%.17g" % float(value)


def _parse_bool(text):
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _parse_int_list(text):
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("list must be nonempty")
    return values


def _check(flag, check, value):
    try:
        return check(value)
    except DomainError as exc:
        raise _UsageError(flag, str(exc)) from None


def _check_digits(digits):
    if digits < 30:
        raise _UsageError("--digits", "oracle precision needs at least 30 digits")
    return oracle.PrecisionConfig(digits=digits)


def _emit(pairs, stream=None):
    stream = stream or sys.stdout
    print(" ".join(f"{key}={value}" for key, value in pairs), file=stream)


# -- eval -----------------------------------------------------------------------


def cmd_eval(args):
    k = _check("--k", core.check_order, args.k)
    strategy = core.Strategy(args.strategy)
    if args.p is not None:
        p = _check("--p", core.check_dof, args.p)
        pairs = [("p", fmt(p))]
    else:
        x = _check("--x", core.check_wallis_arg, args.x)
        p = 2 * x + 1
        pairs = [("x", fmt(x))]
    cfg = _check_digits(args.digits) if args.oracle else None

    if args.p is not None:
        bounds = core.ratio_bounds(p, k, strategy)
    else:
        bounds = core.wallis_bounds(x, k, strategy)
    pairs += [
        ("k", k),
        ("strategy", strategy.value),
        ("lower", fmt(bounds.lower)),
        ("upper", fmt(bounds.upper)),
        ("width", fmt(bounds.upper - bounds.lower)),
        ("cap", fmt(core.relative_error_cap(p, k))),
    ]
    if cfg is not None:
        ref = oracle.ratio_reference(p, cfg) if args.p is not None else oracle.wallis_reference(x, cfg)
        mid = ref.mid
        pairs += [
            ("ref", fmt(mid)),
            ("rel_err_lower", fmt((bounds.lower - mid) / mid)),
            ("rel_err_upper", fmt((bounds.upper - mid) / mid)),
        ]
    _emit(pairs)
    return EXIT_OK


# -- table ----------------------------------------------------------------------


def make_grid(start, stop, count, log=False):
    if count < 2:
        raise _UsageError("--count", "count must be at least 2")
    if not start < stop:
        raise _UsageError("--to", "the grid needs start < stop")
    if log:
        if start <= 0:
            raise _UsageError("--from", "a logarithmic grid needs a positive start")
        ratio = stop / start
        grid = [start * ratio ** (i / (count - 1)) for i in range(count)]
    else:
        step = (stop - start) / (count - 1)
        grid = [start + i * step for i in range(count)]
    grid[-1] = stop
    return grid


def table_rows(variable, grid, orders, strategy=core.Strategy.CACHED, cfg=None):
    """Yield ``(var, k, lower, upper, ref, rel_err_lower, rel_err_upper)`` as floats.

    The relative errors are formed in double arithmetic from the double
    ``ref``, so recomputing them from the printed columns is exact.
    """
    cfg = cfg or oracle.PrecisionConfig()
    for value in grid:
        if variable == "x":
            ref = float(oracle.wallis_reference(value, cfg).mid)
        else:
            ref = float(oracle.ratio_reference(value, cfg).mid)
        for k in orders:
            if variable == "x":
                b = core.wallis_bounds(value, k, strategy)
            else:
                b = core.ratio_bounds(value, k, strategy)
            lower, upper = float(b.lower), float(b.upper)
            yield value, k, lower, upper, ref, (lower - ref) / ref, (upper - ref) / ref


def write_table(stream, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    unresolved = 0
    for var, k, lower, upper, ref, rel_lo, rel_hi in rows:
        if not rel_lo < 0 < rel_hi:
            unresolved += 1
        writer.writerow([fmt(var), k, fmt(lower), fmt(upper), fmt(ref), fmt(rel_lo), fmt(rel_hi)])
    return unresolved


def cmd_table(args):
    variable = args.variable
    check = core.check_dof if variable == "p" else core.check_wallis_arg
    start = _check("--from", check, args.start)
    grid = make_grid(start, args.stop, args.count, args.log)
    orders = [_check("--orders", core.check_order, k) for k in args.orders]
    cfg = _check_digits(args.digits)
    rows = list(table_rows(variable, grid, orders, core.Strategy(args.strategy), cfg))
    try:
        if args.output in (None, "-"):
            unresolved = write_table(sys.stdout, rows)
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                unresolved = write_table(fh, rows)
    except OSError as exc:
        print(f"error: cannot write table: {exc}", file=sys.stderr)
        return EXIT_IO
    if unresolved:
        print(
            f"warning: {unresolved} row(s) have a relative error below double resolution",
            file=sys.stderr,
        )
    return EXIT_OK


# -- solve ----------------------------------------------------------------------


def cmd_solve(args):
    p = _check("--p", core.check_dof, args.p)
    if not 0 < args.eps < 1:
        raise _UsageError("--eps", f"eps must lie in (0, 1), got {args.eps!r}")
    try:
        k = core.min_order_for_tolerance(p, args.eps)
    except ToleranceUnreachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    pairs = [("k", k), ("cap", fmt(core.relative_error_cap(p, k)))]
    if k > 0:
        pairs.append(("cap_prev", fmt(core.relative_error_cap(p, k - 1))))
    _emit(pairs)
    return EXIT_OK


# -- bench ----------------------------------------------------------------------


def opcount_rows(k_list, evals):
    """OpCount totals per strategy for ``evals`` evaluations of ``U_k`` at distinct points."""
    points = [0.5 + 99.5 * i / max(evals - 1, 1) for i in range(evals)]
    for k in k_list:
        cache = core.build_exponent_cache(k)
        for strategy in core.Strategy:
            tally = core.OpCount()
            for p in points:
                if strategy is core.Strategy.CACHED:
                    core.upper_bound_cached(p, cache, tally)
                elif strategy is core.Strategy.DIRECT:
                    core.upper_bound_direct(p, k, tally=tally)
                else:
                    core.bounds_recursive(p, k, tally=tally)
            yield strategy, k, tally


def cmd_bench(args):
    if args.mode == "opcount":
        k_list = [_check("--k-list", core.check_order, k) for k in args.k_list]
        if args.evals < 1:
            raise _UsageError("--evals", "evals must be positive")
        for strategy, k, tally in opcount_rows(k_list, args.evals):
            _emit([
                ("strategy", strategy.value),
                ("k", k),
                ("evals", args.evals),
                ("logs", tally.logs),
                ("mults", tally.mults),
                ("adds", tally.adds),
                ("pows", tally.pows),
                ("arith", tally.arithmetic),
            ])
        return EXIT_OK

    if args.x is None or args.eps is None:
        raise _UsageError("--mode", "race mode needs --x and --eps")
    if not args.x > 0:
        raise _UsageError("--x", f"the race needs x > 0, got {args.x!r}")
    if not 0 < args.eps < 1:
        raise _UsageError("--eps", f"eps must lie in (0, 1), got {args.eps!r}")
    report = rivals.convergence_race(args.x, args.eps, args.cap)
    for name, entry in report.entries.items():
        _emit([
            ("family", name),
            ("parameter", entry.parameter),
            ("capped", str(entry.capped).lower()),
            ("rel_error", "nan" if entry.rel_error is None else fmt(entry.rel_error)),
        ])
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wallisbounds",
        description="Certified bounds on the Wallis ratio and the Student density ratio.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    strategies = [s.value for s in core.Strategy]

    ev = sub.add_parser("eval", help="bounds at one point")
    where = ev.add_mutually_exclusive_group(required=True)
    where.add_argument("--p", type=float, help="degrees of freedom p > 0")
    where.add_argument("--x", type=float, help="Wallis argument x > -1/2")
    ev.add_argument("--k", type=int, required=True, help="order of the bounds")
    ev.add_argument("--strategy", choices=strategies, default="cached")
    ev.add_argument("--oracle", action="store_true", help="also print the reference value")
    ev.add_argument("--digits", type=int, default=50, help="oracle precision (default 50)")
    ev.set_defaults(func=cmd_eval)

    tb = sub.add_parser("table", help="CSV of relative errors over a grid")
    var = tb.add_mutually_exclusive_group(required=True)
    var.add_argument("--p", dest="variable", action="store_const", const="p")
    var.add_argument("--x", dest="variable", action="store_const", const="x")
    tb.add_argument("--from", dest="start", type=float, required=True)
    tb.add_argument("--to", dest="stop", type=float, required=True)
    tb.add_argument("--count", type=int, default=100)
    tb.add_argument("--log", type=_parse_bool, nargs="?", const=True, default=False,
                    help="logarithmic spacing (--log, --log=true, --log=false)")
    tb.add_argument("--orders", type=_parse_int_list, default=[1, 2, 3])
    tb.add_argument("--strategy", choices=strategies, default="cached")
    tb.add_argument("--digits", type=int, default=50)
    tb.add_argument("--output", default="-", help="output path, '-' for stdout")
    tb.set_defaults(func=cmd_table)

    sv = sub.add_parser("solve", help="smallest order certifying a relative error")
    sv.add_argument("--p", type=float, required=True)
    sv.add_argument("--eps", type=float, required=True)
    sv.set_defaults(func=cmd_solve)

    bn = sub.add_parser("bench", help="operation counts or rival convergence race")
    bn.add_argument("--mode", choices=["opcount", "race"], required=True)
    bn.add_argument("--k-list", type=_parse_int_list, default=[8, 16, 32])
    bn.add_argument("--evals", type=int, default=100)
    bn.add_argument("--x", type=float)
    bn.add_argument("--eps", type=float)
    bn.add_argument("--cap", type=int, default=rivals.ITERATION_CAP)
    bn.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
