"""JSON file formats for instances, schedules and orders.

Rationals are written as strings in reduced form (``"21/20"``); on input,
decimal strings such as ``"0.05"`` and JSON integers are accepted too.
Job indices in files are 1-based.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .model import Instance, Schedule, check_permutation, format_rational, parse_rational


class FormatError(ValueError):
    """Malformed input; the message starts with where the problem is."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


def _load(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"{source}:{err.lineno}:{err.colno}", err.msg) from None


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, float):
        raise FormatError(where, f"floating-point number {value!r}; write rationals as strings like \"1/20\"")
    try:
        return parse_rational(value)
    except (TypeError, ValueError) as err:
        raise FormatError(where, str(err)) from None


def _object(value: Any, keys: set[str], where: str) -> dict:
    if not isinstance(value, dict):
        raise FormatError(where, f"expected an object, got {type(value).__name__}")
    unknown = sorted(set(value) - keys)
    if unknown:
        raise FormatError(where, f"unknown key(s) {', '.join(map(repr, unknown))}")
    missing = sorted(keys - set(value))
    if missing:
        raise FormatError(where, f"missing key(s) {', '.join(map(repr, missing))}")
    return value


def _array(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise FormatError(where, f"expected an array, got {type(value).__name__}")
    return value


def instance_from_json(doc: Any, source: str = "instance") -> Instance:
    doc = _object(doc, {"jobs", "supplies"}, source)
    p, a, u, b = [], [], [], []
    for k, job in enumerate(_array(doc["jobs"], f"{source}.jobs")):
        where = f"{source}.jobs[{k}]"
        job = _object(job, {"p", "a"}, where)
        p.append(_rational(job["p"], f"{where}.p"))
        a.append(_rational(job["a"], f"{where}.a"))
    for k, sup in enumerate(_array(doc["supplies"], f"{source}.supplies")):
        where = f"{source}.supplies[{k}]"
        sup = _object(sup, {"u", "b"}, where)
        u.append(_rational(sup["u"], f"{where}.u"))
        b.append(_rational(sup["b"], f"{where}.b"))
    try:
        return Instance(p, a, u, b)
    except ValueError as err:
        raise FormatError(source, str(err)) from None


def instance_to_json(inst: Instance) -> dict:
    return {
        "jobs": [{"p": format_rational(p), "a": format_rational(a)} for p, a in zip(inst.p, inst.a)],
        "supplies": [{"u": format_rational(u), "b": format_rational(b)} for u, b in zip(inst.u, inst.b)],
    }


def schedule_to_json(order: Sequence[int], sched: Schedule, value: Fraction) -> dict:
    return {
        "order": list(order),
        "completion": [format_rational(c) for c in sched.C],
        "objective": format_rational(value),
    }


def schedule_from_json(doc: Any, source: str = "schedule") -> tuple[tuple[int, ...], Schedule, Fraction]:
    doc = _object(doc, {"order", "completion", "objective"}, source)
    order = _indices(doc["order"], f"{source}.order")
    C = [_rational(c, f"{source}.completion[{k}]")
         for k, c in enumerate(_array(doc["completion"], f"{source}.completion"))]
    if len(order) != len(C):
        raise FormatError(source, f"order has {len(order)} entries but completion has {len(C)}")
    try:
        order = check_permutation(order, len(C))
    except ValueError as err:
        raise FormatError(f"{source}.order", str(err)) from None
    return order, Schedule(C), _rational(doc["objective"], f"{source}.objective")


def _indices(value: Any, where: str) -> tuple[int, ...]:
    out = []
    for k, j in enumerate(_array(value, where)):
        if not isinstance(j, int) or isinstance(j, bool):
            raise FormatError(f"{where}[{k}]", f"job index must be an integer, got {j!r}")
        out.append(j)
    return tuple(out)


def order_from_json(doc: Any, n: int, source: str = "order") -> tuple[int, ...]:
    """An order file is a bare array of job indices or any object with an ``order`` key."""
    if isinstance(doc, dict):
        if "order" not in doc:
            raise FormatError(source, "missing key 'order'")
        doc, source = doc["order"], f"{source}.order"
    order = _indices(doc, source)
    try:
        return check_permutation(order, n)
    except ValueError as err:
        raise FormatError(source, str(err)) from None


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as err:
        raise FormatError(str(path), err.strerror or str(err)) from None
    return _load(text, str(path))


def loads_instance(text: str, source: str = "instance") -> Instance:
    return instance_from_json(_load(text, source), source)


def read_instance(path: str | Path) -> Instance:
    return instance_from_json(read_json(path), str(path))


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"
