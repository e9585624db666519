"""Approximation-ratio sweeps over the tight family and random families."""
from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .approx import approx_solve
from .gen import RNG_NAME, GenConfig, gen_random, gen_tight
from .model import Instance, format_rational, parse_rational
from .oracle import DEFAULT_MAX_JOBS, OracleLimitError, exact_solve

CSV_COLUMNS = [
    "instance_id", "n", "q", "f_approx", "f_exact",
    "ratio_exact", "ratio_decimal", "order_approx", "order_exact",
]


def render_decimal(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering of ``x`` to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


@dataclass
class BenchRecord:
    instance_id: str
    n: int
    q: int
    f_approx: Fraction | None = None
    f_exact: Fraction | None = None
    ratio: Fraction | None = None
    order_approx: tuple[int, ...] = ()
    order_exact: tuple[int, ...] = ()
    wall_time_approx: float = 0.0
    wall_time_exact: float = 0.0
    skipped: str | None = None

    def to_json(self) -> dict:
        out = {
            "instance_id": self.instance_id,
            "n": self.n,
            "q": self.q,
            "f_approx": None if self.f_approx is None else format_rational(self.f_approx),
            "f_exact": None if self.f_exact is None else format_rational(self.f_exact),
            "ratio_exact": None if self.ratio is None else format_rational(self.ratio),
            "ratio_decimal": None if self.ratio is None else render_decimal(self.ratio),
            "order_approx": list(self.order_approx),
            "order_exact": list(self.order_exact),
            "wall_time_approx": self.wall_time_approx,
            "wall_time_exact": self.wall_time_exact,
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


@dataclass
class BenchReport:
    family: str
    config: dict
    records: list[BenchRecord] = field(default_factory=list)

    @property
    def solved(self) -> list[BenchRecord]:
        return [r for r in self.records if r.ratio is not None]

    @property
    def max_ratio(self) -> Fraction | None:
        solved = self.solved
        return max(r.ratio for r in solved) if solved else None

    @property
    def argmax_instance(self) -> str | None:
        solved = self.solved
        if not solved:
            return None
        return max(solved, key=lambda r: r.ratio).instance_id

    @property
    def mean_ratio(self) -> Fraction | None:
        solved = self.solved
        return sum((r.ratio for r in solved), Fraction(0)) / len(solved) if solved else None

    def to_json(self, wall_times: bool = True) -> dict:
        records = [r.to_json() for r in self.records]
        if not wall_times:
            for r in records:
                r.pop("wall_time_approx")
                r.pop("wall_time_exact")
        mx, mean = self.max_ratio, self.mean_ratio
        return {
            "family": self.family,
            "config": self.config,
            "rng": RNG_NAME,
            "max_ratio": None if mx is None else format_rational(mx),
            "max_ratio_decimal": None if mx is None else render_decimal(mx),
            "argmax_instance": self.argmax_instance,
            "mean_ratio_decimal": None if mean is None else render_decimal(mean),
            "skipped": sum(1 for r in self.records if r.skipped),
            "records": records,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in self.records:
            d = rec.to_json()
            writer.writerow([
                d["instance_id"], d["n"], d["q"],
                d["f_approx"] or "", d["f_exact"] or "",
                d["ratio_exact"] or "", d["ratio_decimal"] or "",
                " ".join(map(str, d["order_approx"])),
                " ".join(map(str, d["order_exact"])),
            ])
        return buf.getvalue()


def evaluate(instance_id: str, inst: Instance, max_jobs: int = DEFAULT_MAX_JOBS) -> BenchRecord:
    rec = BenchRecord(instance_id, inst.n, inst.q)
    t0 = time.perf_counter()
    rec.order_approx, _, rec.f_approx = approx_solve(inst)
    rec.wall_time_approx = time.perf_counter() - t0
    t0 = time.perf_counter()
    try:
        rec.order_exact, _, rec.f_exact = exact_solve(inst, max_jobs=max_jobs)
    except OracleLimitError as err:
        rec.skipped = str(err)
        return rec
    rec.wall_time_exact = time.perf_counter() - t0
    rec.ratio = rec.f_approx / rec.f_exact
    return rec


def _evaluate_args(args):
    return evaluate(*args)


def tight_instances(epsilons: Sequence) -> list[tuple[str, Instance]]:
    es = [parse_rational(e) for e in epsilons]
    return [(f"tight-{k:04d}-e={format_rational(e)}", gen_tight(e)) for k, e in enumerate(es)]


def random_instances(cfg: GenConfig, count: int) -> list[tuple[str, Instance]]:
    master = random.Random(cfg.seed)
    out = []
    for k in range(count):
        seed = master.getrandbits(64)
        out.append((f"random-{k:04d}-seed={seed}", gen_random(replace(cfg, seed=seed))))
    return out


def run_sweep(
    family: str,
    *,
    epsilons: Sequence = (),
    config: GenConfig | None = None,
    count: int = 0,
    max_jobs: int = DEFAULT_MAX_JOBS,
    jobs: int = 1,
) -> BenchReport:
    """Solve every instance of a family both ways and collect the ratios."""
    if family == "tight":
        items = tight_instances(epsilons)
        echo = {"epsilons": [format_rational(parse_rational(e)) for e in epsilons]}
    elif family == "random":
        cfg = config or GenConfig()
        items = random_instances(cfg, count)
        echo = {**asdict(cfg), "count": count}
        echo["n_range"], echo["q_range"] = list(cfg.n_range), list(cfg.q_range)
    else:
        raise ValueError(f"unknown family {family!r} (expected 'tight' or 'random')")
    echo["max_jobs"] = max_jobs

    work = [(iid, inst, max_jobs) for iid, inst in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate_args, work))
    else:
        records = [evaluate(*w) for w in work]
    records.sort(key=lambda r: r.instance_id)
    return BenchReport(family, echo, records)
