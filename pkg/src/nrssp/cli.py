"""Command-line front end: ``nrssp solve|exact|ratio|verify|gen|bench``.

Exit codes: 0 success, 1 parse/usage error, 2 infeasible instance,
3 oracle limit exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .approx import approx_solve, list_schedule, verify_order_class
from .bench import render_decimal, run_sweep
from .formats import (
    FormatError,
    dumps,
    instance_to_json,
    order_from_json,
    read_instance,
    read_json,
    schedule_from_json,
    schedule_to_json,
)
from .gen import GenConfig, gen_random, gen_tight
from .model import InfeasibleInstanceError, check_feasibility, format_rational, objective, parse_rational
from .oracle import DEFAULT_MAX_JOBS, OracleLimitError, approximation_ratio, exact_solve

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_ORACLE_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    if args.order == ["auto"]:
        order, sched, value = approx_solve(inst)
    elif len(args.order) == 2 and args.order[0] == "file":
        order = order_from_json(read_json(args.order[1]), inst.n, args.order[1])
        sched = list_schedule(inst, order)
        value = objective(inst, sched)
    else:
        raise UsageError("--order expects 'auto' or 'file PATH'")
    _emit(dumps(schedule_to_json(order, sched, value)), args.output)
    return EXIT_OK


def cmd_exact(args) -> int:
    inst = read_instance(args.input)
    order, sched, value = exact_solve(inst, max_jobs=args.max_jobs, n_jobs=args.jobs)
    _emit(dumps(schedule_to_json(order, sched, value)), args.output)
    return EXIT_OK


def cmd_ratio(args) -> int:
    inst = read_instance(args.input)
    ratio = approximation_ratio(inst, max_jobs=args.max_jobs)
    print(format_rational(ratio))
    if args.decimal:
        print(f"decimal rendering: {render_decimal(ratio)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = read_instance(args.input)
    order, sched, claimed = schedule_from_json(read_json(args.schedule), args.schedule)
    if len(sched) != inst.n:
        raise FormatError(args.schedule, f"schedule has {len(sched)} jobs, instance has {inst.n}")
    report = check_feasibility(inst, sched)
    print(f"feasible: {str(report.feasible).lower()}")
    for v in report.violations:
        print(f"  violation {v}")
    actual = objective(inst, sched)
    if actual != claimed:
        print(f"objective mismatch: file says {format_rational(claimed)}, completion times give {format_rational(actual)}")
    if args.order_class:
        result = verify_order_class(inst, order)
        if result.member:
            print("in O(a,p): true")
        else:
            print(f"in O(a,p): false (condition {result.first.condition})")
            for v in result.violations:
                print(f"  {v}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "tight":
        inst = gen_tight(args.epsilon)
    else:
        inst = gen_random(_gen_config(args, args.seed))
    _emit(dumps(instance_to_json(inst)), args.output)
    return EXIT_OK


def _gen_config(args, seed: int) -> GenConfig:
    try:
        return GenConfig(
            n_range=(args.n_min, args.n_max),
            q_range=(args.q_min, args.q_max),
            value_grid=args.grid,
            max_units=args.max_units,
            enforce_ratio_bound=args.ratio_bound,
            supply_mode=args.supply,
            seed=seed,
        )
    except ValueError as err:
        raise UsageError(str(err))


def cmd_bench(args) -> int:
    if args.family == "tight":
        if not args.epsilon:
            raise UsageError("bench --family tight needs at least one --epsilon")
        report = run_sweep("tight", epsilons=args.epsilon, max_jobs=args.max_jobs, jobs=args.jobs)
    else:
        report = run_sweep("random", config=_gen_config(args, args.seed), count=args.count,
                           max_jobs=args.max_jobs, jobs=args.jobs)
    if args.format == "csv":
        text = report.to_csv()
    else:
        text = dumps(report.to_json(wall_times=not args.no_wall_times))
    _emit(text, args.out)
    mx = report.max_ratio
    if mx is not None and args.out not in (None, "-"):
        print(f"max ratio {format_rational(mx)} (decimal rendering {render_decimal(mx)}) "
              f"at {report.argmax_instance}", file=sys.stderr)
    return EXIT_OK


def _add_random_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--q-min", type=int, default=1)
    p.add_argument("--q-max", type=int, default=5)
    p.add_argument("--grid", type=int, default=4, help="values are multiples of 1/GRID")
    p.add_argument("--max-units", type=int, default=12)
    p.add_argument("--ratio-bound", action="store_true", help="force a_j/p_j <= 1")
    p.add_argument("--supply", choices=["balanced", "surplus"], default="balanced")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nrssp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="order jobs and list-schedule them")
    p.add_argument("--input", required=True)
    p.add_argument("--order", nargs="+", default=["auto"], metavar="auto|file PATH")
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="optimal schedule by exhaustive search")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--max-jobs", type=int, default=DEFAULT_MAX_JOBS)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("ratio", help="heuristic/optimal objective ratio")
    p.add_argument("--input", required=True)
    p.add_argument("--max-jobs", type=int, default=DEFAULT_MAX_JOBS)
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify", help="check a schedule file against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--order-class", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write an instance file")
    gsub = p.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("tight")
    g.add_argument("--epsilon", type=_rational_arg, required=True)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("random")
    _add_random_options(g)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="approximation-ratio sweep")
    p.add_argument("--family", choices=["tight", "random"], required=True)
    p.add_argument("--epsilon", type=_rational_arg, action="append", default=[])
    p.add_argument("--count", type=int, default=100)
    _add_random_options(p)
    p.add_argument("--max-jobs", type=int, default=DEFAULT_MAX_JOBS)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--no-wall-times", action="store_true", help="omit timing fields from JSON")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InfeasibleInstanceError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OracleLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ORACLE_LIMIT
    except (FormatError, UsageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
