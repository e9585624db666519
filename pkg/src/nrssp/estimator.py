"""scikit-learn style wrappers around the solvers.

``fit`` takes one instance (an :class:`Instance`, an instance JSON dict, or a
``(p, a, u, b)`` tuple), stores the order and schedule, and ``predict``
returns completion times. ``score`` is the negated objective so that
higher is better, as scikit-learn scorers expect.
"""
from __future__ import annotations

from fractions import Fraction

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .approx import list_schedule, order_jobs, verify_order_class
from .formats import instance_from_json
from .model import Instance, check_feasibility, check_permutation, objective, ratio_bound_scale, scale_resources
from .oracle import DEFAULT_MAX_JOBS, exact_solve


def check_instance(X) -> Instance:
    """Coerce ``X`` to an :class:`Instance`, like ``check_array`` does for matrices."""
    if isinstance(X, Instance):
        return X
    if isinstance(X, dict):
        return instance_from_json(X)
    if isinstance(X, (tuple, list)) and len(X) == 4:
        return Instance(*X)
    raise TypeError(f"expected an Instance, an instance dict or a (p, a, u, b) tuple, got {type(X).__name__}")


class _SchedulerMixin:
    def predict(self, X=None) -> tuple[Fraction, ...]:
        """Completion times; for a new instance the fitted order is reused."""
        check_is_fitted(self, "order_")
        if X is None:
            return self.completion_
        inst = check_instance(X)
        return list_schedule(inst, self.order_).C

    def fit_predict(self, X, y=None) -> tuple[Fraction, ...]:
        return self.fit(X, y).completion_

    def score(self, X, y=None) -> Fraction:
        inst = check_instance(X)
        return -objective(inst, list_schedule(inst, self.order_))

    def _store(self, inst: Instance, order) -> None:
        sched = list_schedule(inst, order)
        self.order_ = tuple(order)
        self.completion_ = sched.C
        self.objective_ = objective(inst, sched)
        self.n_jobs_in_ = inst.n
        if self.check:
            report = check_feasibility(inst, sched)
            if not report.feasible:
                raise AssertionError(f"list schedule failed feasibility: {report.violations}")


class ListScheduler(_SchedulerMixin, BaseEstimator):
    """Reverse-greedy ordering followed by list scheduling.

    Parameters
    ----------
    order : "auto" or sequence of int
        ``"auto"`` runs the ordering heuristic; a 1-based permutation is
        scheduled as given.
    rescale : bool
        Scale requirements and supplies so that ``max a_j/p_j = 1`` before
        ordering. The order and the schedule do not change under this
        scaling; the objective is reported on the original instance.
    check : bool
        Re-check the fitted schedule for feasibility.
    """

    def __init__(self, order="auto", rescale=False, check=False):
        self.order = order
        self.rescale = rescale
        self.check = check

    def fit(self, X, y=None):
        inst = check_instance(X)
        if isinstance(self.order, str):
            if self.order != "auto":
                raise ValueError(f"order must be 'auto' or a permutation, got {self.order!r}")
            work = scale_resources(inst, ratio_bound_scale(inst)) if self.rescale else inst
            o = order_jobs(work)
            self.in_order_class_ = True
        else:
            o = check_permutation(self.order, inst.n)
            self.in_order_class_ = verify_order_class(inst, o).member
        self._store(inst, o)
        return self


class ExactScheduler(_SchedulerMixin, BaseEstimator):
    """Optimal order by exhaustive enumeration (desk-scale instances only)."""

    def __init__(self, max_jobs=DEFAULT_MAX_JOBS, n_jobs=1, check=False):
        self.max_jobs = max_jobs
        self.n_jobs = n_jobs
        self.check = check

    def fit(self, X, y=None):
        inst = check_instance(X)
        o, _, _ = exact_solve(inst, max_jobs=self.max_jobs, n_jobs=self.n_jobs)
        self._store(inst, o)
        return self
