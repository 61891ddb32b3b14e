"""Command-line front end; the only module that touches files or stdout.

Exit codes: 0 = feasible/complete, 2 = infeasible, 1 = usage, I/O, budget,
or internal error.  Output is deterministic: identical argv and input
files yield byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from .errors import (
    BudgetExceededError,
    FareyApproxError,
    InfeasibleError,
    InvalidInputError,
)
from .farey import ExactHit, FareyPair, farey_neighbors, farey_sequence
from .mediants import subdivide
from .rationals import DEFAULT_PRECISION, format_rational, parse_rational, parse_real
from .selftest import run_selftest
from .simultaneous import (
    DEFAULT_MAX_SCAN,
    ConstraintSet,
    Infeasible,
    Solution,
    brute_force_solve,
    compare,
    compose_solve,
    dirichlet_solve,
    epsilon_threshold,
)

_SCAN_ENV = "FAREY_APPROX_MAX_SCAN"


def _max_scan() -> int:
    raw = os.environ.get(_SCAN_ENV)
    if raw is None:
        return DEFAULT_MAX_SCAN
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise InvalidInputError(f"{_SCAN_ENV} must be a positive integer, got {raw!r}")
    return value


def _read_constraints(path: str, precision: int) -> ConstraintSet:
    text = Path(path).read_text(encoding="utf-8")
    items = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"{path}:{lineno}: expected 'X T', got {raw.strip()!r}")
        try:
            x = parse_real(parts[0], precision)
            t = parse_rational(parts[1])
        except InvalidInputError as exc:
            raise InvalidInputError(f"{path}:{lineno}: {exc}") from None
        if t <= 0:
            raise InvalidInputError(f"{path}:{lineno}: tolerance weight must be positive")
        items.append((x, t))
    if not items:
        raise InvalidInputError(f"{path}: no constraints found")
    return ConstraintSet(tuple(items))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _solution_json(sol: Solution) -> dict:
    obj = {
        "method": sol.method,
        "q": sol.q,
        "ps": list(sol.ps),
        "errors": [format_rational(e) for e in sol.errors],
        "epsilon": format_rational(sol.epsilon),
    }
    if sol.satisfies_constraints is not None:
        obj["satisfies_constraints"] = sol.satisfies_constraints
    return obj


def _infeasible_json(inf: Infeasible) -> dict:
    return {"infeasible": True, "reason": inf.reason}


def _parse_positive_epsilon(text: str) -> Fraction:
    eps = parse_rational(text)
    if eps <= 0:
        raise InvalidInputError("epsilon must be positive")
    return eps


def _int_nth_root(x: int, n: int) -> int:
    # floor(x ** (1/n)) by integer Newton iteration.
    if x < 0 or n < 1:
        raise InvalidInputError("nth root needs x >= 0, n >= 1")
    if x < 2 or n == 1:
        return x
    r = 1 << -(-x.bit_length() // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            return r
        r = s


def _build_grid(args) -> tuple[Fraction, ...]:
    if args.grid is not None:
        points = tuple(_parse_positive_epsilon(part) for part in args.grid.split(","))
    else:
        if args.eps_max is None or args.eps_min is None or args.points is None:
            raise InvalidInputError("sweep needs --grid or all of --eps-max/--eps-min/--points")
        top = _parse_positive_epsilon(args.eps_max)
        bottom = _parse_positive_epsilon(args.eps_min)
        count = args.points
        if count < 2 or bottom >= top:
            raise InvalidInputError("need --points >= 2 and --eps-min < --eps-max")
        if args.geometric:
            # Exact-rational ratio approximating (bottom/top)**(1/(count-1));
            # endpoints are kept exact.
            scale = 10**24
            lam = bottom / top
            m = count - 1
            root = _int_nth_root(lam.numerator * scale**m // lam.denominator, m)
            if root < 1:
                raise InvalidInputError("geometric grid too extreme for the fixed ratio scale")
            ratio = Fraction(root, scale)
            points = tuple(top * ratio**k for k in range(m)) + (bottom,)
        else:
            span = top - bottom
            points = tuple(
                bottom + span * Fraction(count - 1 - k, count - 1) for k in range(count)
            )
    if any(a <= b for a, b in zip(points, points[1:])):
        raise InvalidInputError("grid must be strictly descending")
    return points


def _cmd_farey(args) -> int:
    lo = parse_rational(args.lo) if args.lo is not None else None
    hi = parse_rational(args.hi) if args.hi is not None else None
    for term in farey_sequence(args.order):
        if lo is not None and term < lo:
            continue
        if hi is not None and term > hi:
            break
        sys.stdout.write(format_rational(term) + "\n")
    return 0


def _cmd_neighbors(args) -> int:
    x = parse_real(args.x, args.precision)
    found = farey_neighbors(x, args.order)
    if isinstance(found, ExactHit):
        value = format_rational(found.value)
        obj = {"kind": "exact", "value": value, "left": value, "right": value}
    else:
        obj = {
            "kind": "pair",
            "left": format_rational(found.left),
            "right": format_rational(found.right),
        }
    obj["order"] = args.order
    obj["precision"] = args.precision
    _emit_json(obj)
    return 0


def _cmd_subdivide(args) -> int:
    lo = parse_real(args.lo, args.precision)
    hi = parse_real(args.hi, args.precision)
    gap = _parse_positive_epsilon(args.gap)
    base = FareyPair(lo, hi, args.order)
    denom_bound = args.max_denom
    if denom_bound is None:
        denom_bound = max(math.ceil(1 / gap), lo.denominator, hi.denominator)
    result = subdivide(base, gap, denom_bound, max_points=args.max_points)
    for point in result.points:
        sys.stdout.write(format_rational(point) + "\n")
    gaps = [b - a for a, b in zip(result.points, result.points[1:])]
    _emit_json(
        {
            "points": len(result.points),
            "max_gap": format_rational(max(gaps)),
            "min_gap": format_rational(min(gaps)),
            "gap_bound": format_rational(result.gap_bound),
            "denom_bound": result.denom_bound,
            "max_denominator": max(p.denominator for p in result.points),
            "precision": args.precision,
        }
    )
    return 0


def _cmd_solve(args) -> int:
    cs = _read_constraints(args.input, args.precision)
    eps = _parse_positive_epsilon(args.epsilon)
    if args.method == "compose":
        sol = compose_solve(cs, eps)
        obj = _solution_json(sol)
        obj["precision"] = args.precision
        _emit_json(obj)
        return 0
    result = brute_force_solve(cs, eps, max_scan=_max_scan())
    if isinstance(result, Infeasible):
        obj = _infeasible_json(result)
        obj["epsilon"] = format_rational(eps)
        obj["precision"] = args.precision
        _emit_json(obj)
        return 2
    obj = _solution_json(result)
    obj["precision"] = args.precision
    _emit_json(obj)
    return 0


def _cmd_dirichlet(args) -> int:
    cs = _read_constraints(args.input, args.precision)
    sol = dirichlet_solve(cs.xs, args.T, max_scan=_max_scan())
    obj = _solution_json(sol)
    obj["T"] = args.T
    obj["precision"] = args.precision
    _emit_json(obj)
    return 0


def _cmd_sweep(args) -> int:
    cs = _read_constraints(args.input, args.precision)
    grid = _build_grid(args)
    report = epsilon_threshold(cs, grid, max_scan=_max_scan())
    if args.csv:
        rows = ["epsilon,feasible,q,max_error"]
        for eps, ok, wit in zip(report.grid, report.feasible, report.witnesses):
            if wit is None:
                rows.append(f"{format_rational(eps)},false,,")
            else:
                rows.append(
                    f"{format_rational(eps)},true,{wit.q},{format_rational(wit.max_error)}"
                )
        sys.stdout.write("\n".join(rows) + "\n")
    else:
        _emit_json(
            {
                "grid": [format_rational(g) for g in report.grid],
                "feasible": list(report.feasible),
                "epsilon0": None if report.epsilon0 is None else format_rational(report.epsilon0),
                "witnesses": [
                    None if w is None else _solution_json(w) for w in report.witnesses
                ],
                "precision": args.precision,
            }
        )
    return 0 if report.epsilon0 is not None else 2


def _cmd_compare(args) -> int:
    cs = _read_constraints(args.input, args.precision)
    eps = _parse_positive_epsilon(args.epsilon)
    report = compare(cs, eps, args.T, max_scan=_max_scan())
    constrained = (
        _solution_json(report.constrained)
        if isinstance(report.constrained, Solution)
        else _infeasible_json(report.constrained)
    )
    _emit_json(
        {
            "epsilon": format_rational(report.epsilon),
            "constrained": constrained,
            "dirichlet_T": report.dirichlet_T,
            "dirichlet": _solution_json(report.dirichlet),
            "q_bound_constrained": format_rational(report.q_bound_constrained),
            "q_bound_dirichlet": report.q_bound_dirichlet,
            "max_error_constrained": (
                None
                if report.max_error_constrained is None
                else format_rational(report.max_error_constrained)
            ),
            "max_error_dirichlet": format_rational(report.max_error_dirichlet),
            "precision": args.precision,
        }
    )
    return 0


def _cmd_selftest(args) -> int:
    return run_selftest(sys.stdout)


def _add_precision(sub) -> None:
    sub.add_argument(
        "--precision",
        type=int,
        default=DEFAULT_PRECISION,
        help="decimal digits kept for named constants (default %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="farey-approx",
        description="Simultaneous rational approximation with joint error/denominator control",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("farey", help="list a Farey sequence, one fraction per line")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--from", dest="lo", default=None, help="smallest value to emit")
    p.add_argument("--to", dest="hi", default=None, help="largest value to emit")
    p.set_defaults(func=_cmd_farey)

    p = subs.add_parser("neighbors", help="bracket a value between consecutive Farey terms")
    p.add_argument("--x", required=True)
    p.add_argument("--order", type=int, required=True)
    _add_precision(p)
    p.set_defaults(func=_cmd_neighbors)

    p = subs.add_parser("subdivide", help="gap-bounded mediant subdivision of a Farey pair")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--gap", required=True, help="upper bound for consecutive gaps")
    p.add_argument("--max-denom", type=int, default=None)
    p.add_argument("--max-points", type=int, default=10_000)
    _add_precision(p)
    p.set_defaults(func=_cmd_subdivide)

    p = subs.add_parser("solve", help="find one denominator fitting every constraint")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", required=True)
    p.add_argument("--method", choices=("brute", "compose"), default="brute")
    _add_precision(p)
    p.set_defaults(func=_cmd_solve)

    p = subs.add_parser("dirichlet", help="classical pigeonhole baseline solver")
    p.add_argument("--input", required=True)
    p.add_argument("--T", type=int, required=True)
    _add_precision(p)
    p.set_defaults(func=_cmd_dirichlet)

    p = subs.add_parser("sweep", help="feasibility sweep over a descending epsilon grid")
    p.add_argument("--input", required=True)
    p.add_argument("--grid", default=None, help='comma-separated rationals, e.g. "1/2,1/4,1/8"')
    p.add_argument("--eps-max", default=None)
    p.add_argument("--eps-min", default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--geometric", action="store_true")
    p.add_argument("--csv", action="store_true", help="one row per grid point")
    _add_precision(p)
    p.set_defaults(func=_cmd_sweep)

    p = subs.add_parser("compare", help="constrained solver vs. pigeonhole baseline")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", required=True)
    p.add_argument("--T", type=int, required=True)
    _add_precision(p)
    p.set_defaults(func=_cmd_compare)

    p = subs.add_parser("selftest", help="packaged smoke test")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv: list[str]) -> int:
    """Dispatch a CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FareyApproxError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
