"""Exact data model: instances, schedules, feasibility, objective, order statistics.

Jobs are numbered 1..n in permutations and messages; vectors (``p``, ``a``,
completion times) are plain tuples indexed from 0, so job ``j`` lives at
position ``j - 1``.
"""
from __future__ import annotations

import bisect
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")
_DECIMAL_RE = re.compile(r"[+-]?\d+\.\d+")


class InfeasibleInstanceError(ValueError):
    """Total resource requirement exceeds total supply."""

    def __init__(self, total_requirement: Fraction, total_supply: Fraction):
        self.total_requirement = total_requirement
        self.total_supply = total_supply
        super().__init__(
            f"infeasible instance: total requirement {format_rational(total_requirement)} "
            f"exceeds total supply {format_rational(total_supply)}"
        )


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``sign? digits ("/" digits)?`` or an exact decimal ``digits.digits``.

    Ints and Fractions pass through. Floats are rejected, since they would
    smuggle rounding into the model.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot interpret {type(text).__name__} as an exact rational")
    s = text.strip()
    if _RATIONAL_RE.fullmatch(s):
        num, _, den = s.partition("/")
        if den and int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)
    if _DECIMAL_RE.fullmatch(s):
        return Fraction(s)
    raise ValueError(f"malformed rational literal {text!r}")


def format_rational(x: Fraction) -> str:
    """Canonical reduced form: ``"3"`` or ``"-7/2"``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _vec(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def sigma(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Prefix sums ``(v1, v1+v2, ..., sum v)``."""
    out = []
    acc = Fraction(0)
    for v in values:
        acc += v
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class IntegerForm:
    """Instance rescaled to integers: times by ``time_scale``, amounts by ``amount_scale``."""

    time_scale: int
    amount_scale: int
    p: tuple[int, ...]
    a: tuple[int, ...]
    u: tuple[int, ...]
    cum_b: tuple[int, ...]

    def earliest_supply_time(self, requirement: int) -> int | None:
        """Earliest supply time whose prefix supply covers ``requirement``."""
        i = bisect.bisect_left(self.cum_b, requirement)
        if i == len(self.cum_b):
            return None
        return self.u[i]


@dataclass(frozen=True)
class Instance:
    """One NR-SSP instance with weights equal to resource requirements."""

    p: tuple[Fraction, ...]
    a: tuple[Fraction, ...]
    u: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __init__(self, p, a, u, b):
        object.__setattr__(self, "p", _vec(p))
        object.__setattr__(self, "a", _vec(a))
        object.__setattr__(self, "u", _vec(u))
        object.__setattr__(self, "b", _vec(b))
        self._validate()

    def _validate(self) -> None:
        if len(self.p) != len(self.a):
            raise ValueError(f"p has {len(self.p)} entries but a has {len(self.a)}")
        if len(self.u) != len(self.b):
            raise ValueError(f"u has {len(self.u)} entries but b has {len(self.b)}")
        if not self.p:
            raise ValueError("an instance needs at least one job")
        if not self.u:
            raise ValueError("an instance needs at least one supply")
        for j, (pj, aj) in enumerate(zip(self.p, self.a), start=1):
            if pj <= 0:
                raise ValueError(f"job {j}: processing time must be positive, got {format_rational(pj)}")
            if aj <= 0:
                raise ValueError(f"job {j}: requirement must be positive, got {format_rational(aj)}")
        for i, bi in enumerate(self.b, start=1):
            if bi <= 0:
                raise ValueError(f"supply {i}: amount must be positive, got {format_rational(bi)}")
        if self.u[0] < 0:
            raise ValueError(f"supply 1: time must be nonnegative, got {format_rational(self.u[0])}")
        for i in range(1, len(self.u)):
            if self.u[i] <= self.u[i - 1]:
                raise ValueError(
                    f"supply {i + 1}: times must be strictly increasing "
                    f"({format_rational(self.u[i - 1])} then {format_rational(self.u[i])})"
                )

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def q(self) -> int:
        return len(self.u)

    @property
    def total_requirement(self) -> Fraction:
        return sum(self.a, Fraction(0))

    @property
    def total_supply(self) -> Fraction:
        return sum(self.b, Fraction(0))

    @property
    def ratios(self) -> tuple[Fraction, ...]:
        return tuple(aj / pj for aj, pj in zip(self.a, self.p))

    @cached_property
    def integer_form(self) -> IntegerForm:
        ts = math.lcm(*(x.denominator for x in self.p + self.u))
        rs = math.lcm(*(x.denominator for x in self.a + self.b))
        cum = []
        acc = 0
        for bi in self.b:
            acc += int(bi * rs)
            cum.append(acc)
        return IntegerForm(
            time_scale=ts,
            amount_scale=rs,
            p=tuple(int(x * ts) for x in self.p),
            a=tuple(int(x * rs) for x in self.a),
            u=tuple(int(x * ts) for x in self.u),
            cum_b=tuple(cum),
        )

    def relabel(self, order: Sequence[int]) -> "Instance":
        """Renumber jobs so that new job ``k`` is old job ``order[k-1]``."""
        order = check_permutation(order, self.n)
        return Instance(
            p=[self.p[j - 1] for j in order],
            a=[self.a[j - 1] for j in order],
            u=self.u,
            b=self.b,
        )


@dataclass(frozen=True)
class Schedule:
    """Completion times, one per job in job-index order."""

    C: tuple[Fraction, ...]

    def __init__(self, C):
        object.__setattr__(self, "C", _vec(C))

    def __len__(self) -> int:
        return len(self.C)

    def starts(self, inst: Instance) -> tuple[Fraction, ...]:
        _check_dims(inst, self)
        return tuple(c - p for c, p in zip(self.C, inst.p))


@dataclass(frozen=True)
class OrderStats:
    """Tail sums and lambda indices for an instance and a permutation.

    ``Astar[k]`` and ``Ao[k]`` hold the tail sums starting at position ``k+1``;
    both have ``n + 1`` entries ending in 0. ``lam[j-1]`` is the 1-based
    lambda index for ``j = 1..n+1``.
    """

    r: tuple[Fraction, ...]
    Astar: tuple[Fraction, ...]
    Ao: tuple[Fraction, ...]
    lam: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """One broken feasibility rule with its witnesses."""

    rule: str  # "negative-start" | "overlap" | "resource-balance"
    detail: dict = field(default_factory=dict)

    def __str__(self) -> str:
        parts = ", ".join(
            f"{k}={format_rational(v) if isinstance(v, Fraction) else v}" for k, v in self.detail.items()
        )
        return f"{self.rule}: {parts}"


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...] = ()


def check_permutation(order: Sequence[int], n: int) -> tuple[int, ...]:
    """Return ``order`` as a tuple after checking it is a permutation of 1..n."""
    o = tuple(int(j) for j in order)
    if sorted(o) != list(range(1, n + 1)):
        raise ValueError(f"{list(o)} is not a permutation of 1..{n}")
    return o


def _check_dims(inst: Instance, sched: Schedule) -> None:
    if len(sched.C) != inst.n:
        raise ValueError(f"schedule has {len(sched.C)} completion times for {inst.n} jobs")


def objective(inst: Instance, sched: Schedule) -> Fraction:
    """Total weighted completion time with weights ``a``."""
    _check_dims(inst, sched)
    return sum((aj * cj for aj, cj in zip(inst.a, sched.C)), Fraction(0))


def cumulative_supply(inst: Instance, T: RationalLike) -> Fraction:
    """Total amount supplied at times ``u_i <= T``."""
    T = parse_rational(T)
    k = bisect.bisect_right(inst.u, T)
    return sum(inst.b[:k], Fraction(0))


def check_feasibility(inst: Instance, sched: Schedule) -> FeasibilityReport:
    """Check nonnegative starts, no machine overlap and resource balance.

    The demand side of the balance condition is a step function that only
    jumps at start times, so checking there covers every ``T >= 0``.
    """
    starts = sched.starts(inst)
    violations: list[Violation] = []

    for j, s in enumerate(starts, start=1):
        if s < 0:
            violations.append(Violation("negative-start", {"job": j, "start": s}))

    by_start = sorted(range(inst.n), key=lambda j: (starts[j], sched.C[j]))
    for x in range(inst.n):
        for y in range(x + 1, inst.n):
            j, k = by_start[x], by_start[y]
            if starts[k] >= sched.C[j]:
                break
            violations.append(
                Violation(
                    "overlap",
                    {"job": j + 1, "other": k + 1, "start": starts[j], "end": sched.C[j],
                     "other_start": starts[k], "other_end": sched.C[k]},
                )
            )

    for T in sorted({max(s, Fraction(0)) for s in starts}):
        demand = sum((a for a, s in zip(inst.a, starts) if s <= T), Fraction(0))
        supply = cumulative_supply(inst, T)
        if demand > supply:
            violations.append(Violation("resource-balance", {"T": T, "demand": demand, "supply": supply}))

    return FeasibilityReport(not violations, tuple(violations))


def normalize(inst: Instance) -> Instance:
    """Trim supply from the last delivery backwards until it matches total demand."""
    need, have = inst.total_requirement, inst.total_supply
    if have < need:
        raise InfeasibleInstanceError(need, have)
    excess = have - need
    u, b = list(inst.u), list(inst.b)
    while excess > 0:
        if b[-1] <= excess:
            excess -= b.pop()
            u.pop()
        else:
            b[-1] -= excess
            excess = Fraction(0)
    return Instance(inst.p, inst.a, u, b)


def scale_resources(inst: Instance, c: RationalLike) -> Instance:
    """Multiply every requirement and supply amount by ``c > 0``."""
    c = parse_rational(c)
    if c <= 0:
        raise ValueError(f"scale factor must be positive, got {format_rational(c)}")
    return Instance(inst.p, [c * x for x in inst.a], inst.u, [c * x for x in inst.b])


def ratio_bound_scale(inst: Instance) -> Fraction:
    """Factor that brings ``max a_j / p_j`` down to exactly 1."""
    return 1 / max(inst.ratios)


def _tail_sums(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(values) + 1)
    for k in range(len(values) - 1, -1, -1):
        out[k] = out[k + 1] + values[k]
    return tuple(out)


def compute_order_stats(inst: Instance, order: Sequence[int]) -> OrderStats:
    o = check_permutation(order, inst.n)
    n = inst.n
    Astar = _tail_sums(inst.a)
    Ao = _tail_sums([inst.a[j - 1] for j in o])
    lam = []
    for j in range(n):
        # Ao is nonincreasing, so the last position still covering Astar[j] is lambda
        k = next(k for k in range(n - 1, -1, -1) if Ao[k] >= Astar[j])
        lam.append(k + 1)
    # lambda_{n+1} = n+1 so that Ao at that index is the zero tail
    lam.append(n + 1)
    return OrderStats(r=inst.ratios, Astar=Astar, Ao=Ao, lam=tuple(lam))
