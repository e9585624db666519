"""Single-machine scheduling with one non-renewable resource, weights equal to requirements."""
from .approx import OrderClassResult, approx_solve, list_schedule, order_jobs, verify_order_class
from .bench import BenchRecord, BenchReport, run_sweep
from .estimator import ExactScheduler, ListScheduler, check_instance
from .gen import (
    GenConfig,
    delay_supplies,
    gen_random,
    gen_tight,
    to_just_in_time,
    to_sigma_supply,
    to_unit_processing,
)
from .model import (
    FeasibilityReport,
    InfeasibleInstanceError,
    Instance,
    OrderStats,
    Schedule,
    check_feasibility,
    compute_order_stats,
    cumulative_supply,
    format_rational,
    normalize,
    objective,
    parse_rational,
    scale_resources,
)
from .oracle import OracleLimitError, approximation_ratio, exact_solve

__version__ = "0.1.0"
