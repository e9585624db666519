"""Exact optimum by enumerating every processing order.

For a fixed order the earliest-start list schedule is componentwise minimal,
and weights are positive, so the best list schedule over all orders is an
optimal schedule. Enumeration walks orders lexicographically and shares the
schedule of every common prefix.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .approx import approx_solve, list_schedule
from .model import InfeasibleInstanceError, Instance, Schedule

DEFAULT_MAX_JOBS = 10


class OracleLimitError(ValueError):
    """Instance too large for exhaustive search."""

    def __init__(self, n: int, max_jobs: int):
        self.n = n
        self.max_jobs = max_jobs
        super().__init__(f"exact solver refuses n={n}: limit is {max_jobs} jobs")


def _search(form, first: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Best (scaled objective, order) among orders, optionally with a fixed first job."""
    n = len(form.p)
    p, a = form.p, form.a
    best_val = None
    best_order: list[int] = []
    order: list[int] = []
    used = [False] * n

    def visit(prev: int, need: int, value: int) -> None:
        nonlocal best_val, best_order
        for j in range(n):
            if used[j]:
                continue
            req = need + a[j]
            end = max(prev, form.earliest_supply_time(req)) + p[j]
            val = value + a[j] * end
            if len(order) == n - 1:
                if best_val is None or val < best_val:
                    best_val = val
                    best_order = order + [j + 1]
                continue
            used[j] = True
            order.append(j + 1)
            visit(end, req, val)
            order.pop()
            used[j] = False

    if first is None:
        visit(0, 0, 0)
    else:
        j = first - 1
        end = form.earliest_supply_time(a[j]) + p[j]
        used[j] = True
        order.append(first)
        if n == 1:
            best_val, best_order = a[j] * end, [first]
        else:
            visit(end, a[j], a[j] * end)
    return best_val, tuple(best_order)


def _search_first(args):
    inst, first = args
    return _search(inst.integer_form, first)


def exact_solve(
    inst: Instance, max_jobs: int = DEFAULT_MAX_JOBS, n_jobs: int = 1
) -> tuple[tuple[int, ...], Schedule, Fraction]:
    """Return an optimal order (lexicographically smallest on ties), its schedule, and the optimum.

    ``n_jobs > 1`` splits the search by first job across processes; the
    result does not depend on the worker count.
    """
    if inst.n > max_jobs:
        raise OracleLimitError(inst.n, max_jobs)
    if inst.total_requirement > inst.total_supply:
        raise InfeasibleInstanceError(inst.total_requirement, inst.total_supply)
    form = inst.integer_form
    if n_jobs > 1 and inst.n > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(_search_first, [(inst, f) for f in range(1, inst.n + 1)]))
        val, order = min(parts)
    else:
        val, order = _search(form)
    sched = list_schedule(inst, order)
    return order, sched, Fraction(val, form.time_scale * form.amount_scale)


def approximation_ratio(inst: Instance, max_jobs: int = DEFAULT_MAX_JOBS) -> Fraction:
    """Heuristic objective over optimal objective, exactly."""
    f_exact = exact_solve(inst, max_jobs=max_jobs)[2]
    return approx_solve(inst)[2] / f_exact
