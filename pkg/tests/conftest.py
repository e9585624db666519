from fractions import Fraction

import pytest
from hypothesis import strategies as st

from nrssp import Instance, gen_tight

E = Fraction(1, 20)


@pytest.fixture
def tight():
    return gen_tight(E)


def grid_values(max_units=8, grid=4):
    return st.integers(1, max_units).map(lambda k: Fraction(k, grid))


@st.composite
def instances(draw, max_n=5, max_q=4, ratio_bound=False, surplus=True):
    """Small instances on a 1/4 grid with total supply covering total demand."""
    n = draw(st.integers(1, max_n))
    p = draw(st.lists(grid_values(), min_size=n, max_size=n))
    if ratio_bound:
        a = [draw(st.integers(1, int(pj * 4)).map(lambda k: Fraction(k, 4))) for pj in p]
    else:
        a = draw(st.lists(grid_values(), min_size=n, max_size=n))
    q = draw(st.integers(1, max_q))
    times = sorted(draw(st.sets(st.integers(0, 24), min_size=q, max_size=q)))
    need = sum(a)
    weights = draw(st.lists(st.integers(1, 5), min_size=q, max_size=q))
    b = [need * w / sum(weights) for w in weights]
    if surplus:
        b[-1] += draw(st.integers(0, 3)) / Fraction(4)
    return Instance(p, a, [Fraction(t, 4) for t in times], b)


@st.composite
def instance_and_order(draw, **kw):
    inst = draw(instances(**kw))
    order = tuple(draw(st.permutations(range(1, inst.n + 1))))
    return inst, order


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit-criterion tests")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines, key=lambda x: int(x[0].split()[0])):
            terminalreporter.write_line(f"{verdict}  criterion {name}")
