from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import E, instances
from nrssp import (
    GenConfig,
    Instance,
    Schedule,
    approx_solve,
    approximation_ratio,
    exact_solve,
    gen_random,
    gen_tight,
    normalize,
    objective,
    order_jobs,
    scale_resources,
    verify_order_class,
)
from nrssp.gen import delay_supplies, is_staircase, to_just_in_time, to_sigma_supply, to_unit_processing
from nrssp.model import sigma

F = Fraction


class TestTight:
    def test_e_1_20(self):
        inst = gen_tight(E)
        assert inst.p == (E, E, 1)
        assert inst.a == (F(19, 20), 1, F(21, 20))
        assert inst.u == (0, F(1, 20), F(1, 10))
        assert inst.b == (F(19, 20), 1, F(21, 20))

    def test_small_e(self):
        inst = gen_tight(F(1, 10000))
        assert inst.p == (F(1, 10000), F(1, 10000), 1)
        assert inst.a == (F(9999, 10000), 1, F(10001, 10000))

    @pytest.mark.parametrize("e", [F(1, 10), 0, F(-1, 20), F(1, 5)])
    def test_out_of_range(self, e):
        with pytest.raises(ValueError):
            gen_tight(e)

    def test_decimal_string(self):
        assert gen_tight("0.05") == gen_tight(E)

    @pytest.mark.parametrize("den", [11, 20, 37, 100, 1000, 10**6])
    def test_order_and_ratio(self, den):
        e = F(1, den)
        inst = gen_tight(e)
        assert order_jobs(inst) == (3, 2, 1)
        assert approximation_ratio(inst) == (3 + 6 * e - 2 * e**2) / (1 + 6 * e + e**2)


class TestRandom:
    def test_deterministic(self):
        cfg = GenConfig(seed=42)
        assert gen_random(cfg) == gen_random(cfg)
        assert gen_random(cfg) != gen_random(GenConfig(seed=43))

    @settings(max_examples=200)
    @given(st.integers(0, 2**63), st.booleans(), st.sampled_from(["balanced", "surplus"]),
           st.integers(1, 6))
    def test_invariants(self, seed, bound, mode, grid):
        cfg = GenConfig(n_range=(1, 8), q_range=(1, 6), value_grid=grid,
                        enforce_ratio_bound=bound, supply_mode=mode, seed=seed)
        inst = gen_random(cfg)
        assert 1 <= inst.n <= 8 and 1 <= inst.q <= 6
        assert all(x * grid == int(x * grid) for x in inst.p + inst.a + inst.u + inst.b)
        if bound:
            assert max(inst.ratios) <= 1
        if mode == "balanced":
            assert inst.total_supply == inst.total_requirement
            assert normalize(inst) == inst
        else:
            assert inst.total_supply > inst.total_requirement

    @pytest.mark.parametrize("kwargs", [
        dict(n_range=(0, 3)), dict(n_range=(3, 2)), dict(q_range=(0, 1)),
        dict(value_grid=0), dict(supply_mode="lavish"),
    ])
    def test_bad_config(self, kwargs):
        with pytest.raises(ValueError):
            GenConfig(**kwargs)


class TestTransformations:
    def test_just_in_time_tight(self):
        inst = gen_tight(E)
        out = to_just_in_time(inst, Schedule([E, 2 * E, 1 + 2 * E]))
        assert out.u == (0, F(1, 20), F(2, 20))
        assert out.b == (F(19, 20), 1, F(21, 20))

    def test_just_in_time_single(self):
        out = to_just_in_time(Instance([1], [3], [0], [3]), Schedule([2]))
        assert out.u == (1,) and out.b == (3,)

    def test_just_in_time_rejects(self):
        inst = Instance([1, 1], [1, 1], [0], [2])
        with pytest.raises(ValueError):
            to_just_in_time(inst, Schedule([1, F(3, 2)]))
        with pytest.raises(ValueError):
            to_just_in_time(inst, Schedule([F(1, 2), 3]))
        assert not is_staircase(inst, Schedule([2, 1]))

    def test_sigma_supply(self):
        out = to_sigma_supply(Instance([1, 2], [F(1, 2), 1], [0], [5]))
        assert out.u == (0, 1) and out.b == (F(1, 2), 1)

    def test_sigma_single(self):
        out = to_sigma_supply(Instance([3], [2], [4], [9]))
        assert out.u == (0,) and out.b == (2,)

    def test_sigma_identity_on_tight(self):
        inst = gen_tight(E)
        assert to_sigma_supply(inst) == inst

    def test_unit_processing(self):
        out = to_unit_processing(Instance([5, 5], [1, 2], [0], [3]))
        assert out.p == (1, 2) and out.u == (0, 1) and out.b == (1, 2)

    def test_unit_processing_identity(self):
        inst = to_sigma_supply(Instance([1, 2, 3], [1, 2, 3], [0], [6]))
        assert to_unit_processing(inst) == inst

    @settings(max_examples=100)
    @given(instances(max_n=6))
    def test_sigma_optima(self, inst):
        s = to_sigma_supply(inst)
        assert exact_solve(s)[2] == objective(s, Schedule(sigma(s.p)))
        d = to_unit_processing(inst)
        assert exact_solve(d)[2] == objective(d, Schedule(sigma(d.a)))

    @settings(max_examples=200)
    @given(instances(max_n=8, ratio_bound=True))
    def test_order_class_contained(self, inst):
        o = order_jobs(inst)
        assert verify_order_class(inst, o)
        assert verify_order_class(to_unit_processing(inst), o)

    def test_delay_merges(self):
        inst = Instance([1], [2], [0, 1], [1, 1])
        out = delay_supplies(inst, [1, 0])
        assert out.u == (1,) and out.b == (2,)
        with pytest.raises(ValueError):
            delay_supplies(inst, [-1, 0])
