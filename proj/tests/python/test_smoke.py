"""Smoke tests for the python bindings."""

import pytest

import ggslcs


def test_permutation_arithmetic():
    x = ggslcs.Permutation.from_images([2, 1, 3])
    y = ggslcs.Permutation.from_images([1, 3, 2])
    assert (x * y).images == [3, 1, 2]
    assert ggslcs.commutator(x, y).images == [2, 3, 1]
    assert x.inverse() == x
    assert ggslcs.Permutation(5).is_identity()


def test_classification():
    e = ggslcs.classify_vector(3, [1, 0])
    assert e.epsilon == 1 and e.delta == 1
    assert e.is_fg_type and not e.is_periodic
    with pytest.raises(ValueError):
        ggslcs.classify_vector(3, [0, 0])


def test_quotient_and_series():
    g = ggslcs.CongruenceQuotient(3, [1, 0], 3)
    assert g.order_valuation() == 10
    assert g.stabilizer_valuation(2) == 6
    assert g.x_word(9).is_identity()
    assert g.contains(g.x_word(5))

    report = ggslcs.lower_central_series(3, [1, 0], 3)
    assert report["nilpotency_class"] == 8
    assert report["index_exponents"] == [2, 1, 2, 1, 1, 1, 1, 1]


def test_schedule():
    s = ggslcs.interval_schedule(3, 4)
    assert s.class_c == 23
    doubled = [i + 1 for i, e in enumerate(s.exponents) if e == 2]
    assert doubled == [1, 3, 5, 6, 7]
    assert s.generator_tags[4] == ["x(5)", "y_5(5)"]


def test_run_check():
    r = ggslcs.run_check("theorem-4-1", 3, [1, 0], 2)
    assert r.passed
    assert all(d.passed for d in r.details)
    with pytest.raises(ValueError):
        ggslcs.run_check("theorem-4-6", 3, [1, 1], 3)  # not FG-type


def test_wreath_helpers():
    assert ggslcs.lambda_vector(5, 3) == [1, 3, 1, 0, 0]
    assert ggslcs.gamma_level_field([1, 1, 1], 3) == 3
    assert ggslcs.delta_map([1, 0, 0], 3) == [2, 1, 0]
    assert ggslcs.iterated_delta_p_minus_2([0, 0, 1], 3) == [1, 0, 2]
