"""Instance sources: the tight three-job family, seeded random instances,
and the just-in-time supply transformations used as test fixtures."""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import Instance, RationalLike, Schedule, format_rational, parse_rational, sigma

#: Recorded in reports so a seed can be traced back to the generator that used it.
RNG_NAME = "python-random-mt19937/v1"


@dataclass(frozen=True)
class GenConfig:
    """Random instance family.

    Every generated value is ``k / value_grid`` with ``1 <= k <= max_units``
    (supply times may also be 0 and reach up to the total processing time).
    """

    n_range: tuple[int, int] = (2, 7)
    q_range: tuple[int, int] = (1, 5)
    value_grid: int = 4
    max_units: int = 12
    enforce_ratio_bound: bool = False
    supply_mode: str = "balanced"
    seed: int = 0

    def __post_init__(self):
        for name in ("n_range", "q_range"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must be a nonempty range of positive integers, got {(lo, hi)}")
        if self.value_grid < 1:
            raise ValueError("value_grid must be >= 1")
        if self.max_units < 1:
            raise ValueError("max_units must be >= 1")
        if self.supply_mode not in ("balanced", "surplus"):
            raise ValueError(f"supply_mode must be 'balanced' or 'surplus', got {self.supply_mode!r}")


def gen_tight(e: RationalLike) -> Instance:
    """Three jobs whose heuristic/optimal ratio tends to 3 as ``e -> 0``."""
    e = parse_rational(e)
    if not 0 < e < Fraction(1, 10):
        raise ValueError(f"e must lie in (0, 1/10), got {format_rational(e)}")
    p = (e, e, Fraction(1))
    a = (1 - e, Fraction(1), 1 + e)
    return to_sigma_supply(Instance(p, a, [0], [sum(a)]))


def _split(total: int, parts: int, rng: random.Random) -> list[int]:
    """Random composition of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [hi - lo for lo, hi in zip([0] + cuts, cuts + [total])]


def gen_random(cfg: GenConfig) -> Instance:
    rng = random.Random(cfg.seed)
    D = cfg.value_grid
    n = rng.randint(*cfg.n_range)
    p_units = [rng.randint(1, cfg.max_units) for _ in range(n)]
    if cfg.enforce_ratio_bound:
        a_units = [rng.randint(1, pu) for pu in p_units]
    else:
        a_units = [rng.randint(1, cfg.max_units) for _ in range(n)]

    need = sum(a_units)
    total = need
    if cfg.supply_mode == "surplus":
        total += rng.randint(1, cfg.max_units)
    q = min(rng.randint(*cfg.q_range), total)
    amounts = _split(total, q, rng)
    horizon = sum(p_units)
    pooled: dict[int, int] = defaultdict(int)
    for b in amounts:
        pooled[rng.randint(0, horizon)] += b
    times = sorted(pooled)
    return Instance(
        p=[Fraction(x, D) for x in p_units],
        a=[Fraction(x, D) for x in a_units],
        u=[Fraction(t, D) for t in times],
        b=[Fraction(pooled[t], D) for t in times],
    )


def is_staircase(inst: Instance, sched: Schedule) -> bool:
    """Whether jobs run in index order with room for each one before it ends."""
    C, p = sched.C, inst.p
    if len(C) != inst.n or C[0] < p[0]:
        return False
    return all(C[j + 1] - C[j] >= p[j + 1] for j in range(inst.n - 1))


def to_just_in_time(inst: Instance, sched: Schedule) -> Instance:
    """Supply each job's requirement exactly at its start in ``sched``."""
    if not is_staircase(inst, sched):
        raise ValueError("schedule is not a staircase (need C_1 >= p_1 and C_{j+1} - C_j >= p_{j+1})")
    return Instance(inst.p, inst.a, sched.starts(inst), inst.a)


def to_sigma_supply(inst: Instance) -> Instance:
    """Just-in-time supplies for the back-to-back schedule in index order."""
    C = sigma(inst.p)
    return Instance(inst.p, inst.a, [c - p for c, p in zip(C, inst.p)], inst.a)


def to_unit_processing(inst: Instance) -> Instance:
    """Set processing times equal to requirements, then supply back-to-back."""
    return to_sigma_supply(Instance(inst.a, inst.a, inst.u, inst.b))


def random_staircase(inst: Instance, rng: random.Random, max_gap_units: int = 4,
                     grid: int = 4) -> Schedule:
    """Staircase schedule in index order with random idle gaps on ``1/grid``."""
    C = []
    t = Fraction(0)
    for pj in inst.p:
        t += Fraction(rng.randint(0, max_gap_units), grid) + pj
        C.append(t)
    return Schedule(C)


def delay_supplies(inst: Instance, delays: Sequence[RationalLike]) -> Instance:
    """Postpone each supply by a nonnegative delay, merging coincident deliveries."""
    delays = [parse_rational(d) for d in delays]
    if len(delays) != inst.q or any(d < 0 for d in delays):
        raise ValueError("need one nonnegative delay per supply")
    pooled: dict[Fraction, Fraction] = defaultdict(Fraction)
    for u, b, d in zip(inst.u, inst.b, delays):
        pooled[u + d] += b
    times = sorted(pooled)
    return Instance(inst.p, inst.a, times, [pooled[t] for t in times])
