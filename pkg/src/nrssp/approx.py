"""Reverse-greedy job ordering, list scheduling, and the order-class check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .model import (
    InfeasibleInstanceError,
    Instance,
    Schedule,
    check_permutation,
    format_rational,
    objective,
)


def order_jobs(inst: Instance) -> tuple[int, ...]:
    """Build a processing order from the back.

    At each step the candidates are the unplaced jobs whose requirement fits
    under the requirement already placed behind them. With no candidate, the
    smallest-requirement job goes next; otherwise the candidate with the
    smallest ``a_j / p_j``. Ties go to the smallest job index.
    """
    n = inst.n
    r = inst.ratios
    rest = list(range(n))
    placed = Fraction(0)
    order = [0] * n
    for i in range(n - 1, -1, -1):
        small = [j for j in rest if inst.a[j] <= placed]
        if small:
            pick = min(small, key=lambda j: (r[j], j))
        else:
            pick = min(rest, key=lambda j: (inst.a[j], j))
        order[i] = pick + 1
        placed += inst.a[pick]
        rest.remove(pick)
    return tuple(order)


def _list_schedule_int(form, order: Sequence[int]) -> list[int]:
    """Integer-scaled list schedule; returns completion times by job position."""
    C = [0] * len(order)
    prev = 0
    need = 0
    for j in order:
        need += form.a[j - 1]
        start = max(prev, form.earliest_supply_time(need))
        prev = start + form.p[j - 1]
        C[j - 1] = prev
    return C


def list_schedule(inst: Instance, order: Sequence[int]) -> Schedule:
    """Start each job in ``order`` as early as the machine and the stock allow."""
    o = check_permutation(order, inst.n)
    if inst.total_requirement > inst.total_supply:
        raise InfeasibleInstanceError(inst.total_requirement, inst.total_supply)
    form = inst.integer_form
    ts = form.time_scale
    return Schedule([Fraction(c, ts) for c in _list_schedule_int(form, o)])


@dataclass(frozen=True)
class OrderClassViolation:
    condition: str  # "i", "ii" or "iii"
    j: int  # position in the order (1-based)
    i: int | None = None  # second position, when the condition compares two
    values: dict = field(default_factory=dict)

    def __str__(self) -> str:
        where = f"j={self.j}" if self.i is None else f"j={self.j}, i={self.i}"
        vals = ", ".join(f"{k}={format_rational(v)}" for k, v in self.values.items())
        return f"condition {self.condition} ({where}): {vals}"


@dataclass(frozen=True)
class OrderClassResult:
    member: bool
    violations: tuple[OrderClassViolation, ...] = ()

    def __bool__(self) -> bool:
        return self.member

    @property
    def first(self) -> OrderClassViolation | None:
        return self.violations[0] if self.violations else None


def verify_order_class(inst: Instance, order: Sequence[int]) -> OrderClassResult:
    """Check the three order-class conditions; violations come back in check order.

    (i) the last job has the minimum requirement; (ii) a job heavier than
    everything behind it is no heavier than anything ahead of it; (iii) a job
    that fits under its tail has a ratio no larger than any earlier job that
    also fits under that tail.
    """
    o = check_permutation(order, inst.n)
    n = inst.n
    a = [inst.a[j - 1] for j in o]
    r = [inst.ratios[j - 1] for j in o]
    tail = [Fraction(0)] * (n + 1)
    for k in range(n - 1, -1, -1):
        tail[k] = tail[k + 1] + a[k]

    found: list[OrderClassViolation] = []
    amin = min(inst.a)
    if a[-1] != amin:
        found.append(OrderClassViolation("i", n, values={"a_last": a[-1], "a_min": amin}))

    for j in range(n - 1):
        if a[j] > tail[j + 1]:
            for i in range(j + 1):
                if a[i] < a[j]:
                    found.append(
                        OrderClassViolation("ii", j + 1, i + 1,
                                            {"a_j": a[j], "tail": tail[j + 1], "a_i": a[i]})
                    )
    for j in range(n - 1):
        if a[j] <= tail[j + 1]:
            for i in range(j + 1):
                if a[i] <= tail[j + 1] and r[i] < r[j]:
                    found.append(
                        OrderClassViolation("iii", j + 1, i + 1,
                                            {"r_j": r[j], "r_i": r[i], "tail": tail[j + 1]})
                    )
    return OrderClassResult(not found, tuple(found))


def approx_solve(inst: Instance) -> tuple[tuple[int, ...], Schedule, Fraction]:
    """Order with :func:`order_jobs`, schedule with :func:`list_schedule`."""
    o = order_jobs(inst)
    sched = list_schedule(inst, o)
    return o, sched, objective(inst, sched)
