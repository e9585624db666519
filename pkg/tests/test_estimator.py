from fractions import Fraction

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from nrssp import ExactScheduler, ListScheduler, check_instance, gen_tight
from nrssp.formats import instance_to_json

F = Fraction


def test_list_scheduler(tight):
    est = ListScheduler(check=True).fit(tight)
    assert est.order_ == (3, 2, 1)
    assert est.predict() == (F(23, 20), F(22, 20), F(21, 20))
    assert est.objective_ == F(1318, 400)
    assert est.score(tight) == -F(1318, 400)
    assert est.in_order_class_


def test_fixed_order(tight):
    est = ListScheduler(order=(1, 2, 3)).fit(tight)
    assert est.completion_ == (F(1, 20), F(2, 20), F(22, 20))
    assert not est.in_order_class_


def test_rescale_keeps_order(tight):
    assert ListScheduler(rescale=True).fit(tight).order_ == ListScheduler().fit(tight).order_


def test_exact_scheduler(tight):
    est = ExactScheduler().fit(tight)
    assert est.order_ == (1, 2, 3)
    assert est.objective_ == F(521, 400)
    assert est.fit_predict(tight) == (F(1, 20), F(2, 20), F(22, 20))


def test_params_and_clone():
    est = ListScheduler(order="auto", rescale=True)
    assert est.get_params() == {"order": "auto", "rescale": True, "check": False}
    c = clone(est.set_params(check=True))
    assert c.get_params()["check"] is True
    assert ExactScheduler(max_jobs=8).get_params()["max_jobs"] == 8


def test_not_fitted(tight):
    with pytest.raises(NotFittedError):
        ListScheduler().predict(tight)


def test_predict_other_instance(tight):
    est = ListScheduler().fit(tight)
    other = gen_tight(F(1, 50))
    assert est.predict(other) == (1 + 3 * F(1, 50), 1 + 2 * F(1, 50), 1 + F(1, 50))


def test_check_instance(tight):
    assert check_instance(tight) is tight
    assert check_instance(instance_to_json(tight)) == tight
    assert check_instance((tight.p, tight.a, tight.u, tight.b)) == tight
    with pytest.raises(TypeError):
        check_instance("nope")
    with pytest.raises(ValueError):
        ListScheduler(order="greedy").fit(tight)
