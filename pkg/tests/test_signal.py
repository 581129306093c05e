import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mobius_xform.errors import DomainError
from mobius_xform.signal import (ExactEvaluator, FourierCoefficients, UniformGrid, eval_series,
                                 mean_estimate, nearest_int, random_coefficients, sample_at)


def test_eval_series_examples():
    assert eval_series(FourierCoefficients(0.0, (1.0,), (0.0,)), 0) == 1.0
    assert eval_series(FourierCoefficients(2.5, (0.0, 0.0), (0.0, 0.0)), 0.37) == 2.5
    assert eval_series(FourierCoefficients(0.0, (0.0,), (1.0,)), Fraction(1, 4)) == pytest.approx(1.0, abs=1e-15)


def test_eval_series_respects_period():
    c = FourierCoefficients(0.0, (1.0,), (0.0,), T=2.0)
    assert eval_series(c, 1.0) == pytest.approx(-1.0, abs=1e-15)


def test_nearest_int_ties_round_up():
    assert nearest_int(Fraction(5, 2)) == 3
    assert nearest_int(Fraction(-5, 2)) == -2
    assert nearest_int(2.4) == 2


def test_zero_order_grid_rounds_quarter_to_three_tenths():
    samples = [10.0 * i for i in range(10)]
    g = UniformGrid.over_period(samples, 1, "zero-order")
    assert sample_at(g, Fraction(1, 4)) == 30.0  # [10 * 1/4] / 10 = 3/10


def test_first_order_midpoint():
    g = UniformGrid([0.0, 1.0], Fraction(1, 2), 1, "first-order")
    assert sample_at(g, Fraction(1, 4)) == 0.5


@pytest.mark.parametrize("rule", ["zero-order", "first-order"])
def test_grid_points_are_exact(rule):
    samples = list(np.random.default_rng(1).standard_normal(12))
    g = UniformGrid.over_period(samples, 1, rule)
    for i, x in enumerate(samples):
        assert sample_at(g, Fraction(i, 12)) == x


def test_grid_must_span_one_period():
    with pytest.raises(DomainError):
        UniformGrid([1.0, 2.0, 3.0], Fraction(1, 4), 1)


def test_mean_estimate_examples():
    assert mean_estimate(UniformGrid.over_period([4.0] * 7, 1)) == 4.0
    assert mean_estimate(ExactEvaluator(FourierCoefficients(3.0, (1.0,), (2.0,)))) == 3.0
    g = UniformGrid.from_function(lambda t: math.cos(2 * math.pi * t), 10, 1)
    assert abs(mean_estimate(g)) < 1e-12


times = st.fractions(min_value=-3, max_value=3, max_denominator=64)


@given(times, st.sampled_from(["zero-order", "first-order"]))
def test_grid_periodicity(t, rule):
    samples = list(np.random.default_rng(5).standard_normal(8))
    g = UniformGrid.over_period(samples, 1, rule)
    assert sample_at(g, t) == sample_at(g, t + 1)


@given(times)
def test_exact_periodicity(t):
    src = ExactEvaluator(random_coefficients(4, np.random.default_rng(3)))
    assert sample_at(src, t) == pytest.approx(sample_at(src, t + 1), abs=1e-12)


@given(times)
def test_zero_order_returns_a_grid_sample(t):
    samples = list(np.random.default_rng(7).standard_normal(9))
    g = UniformGrid.over_period(samples, 1, "zero-order")
    assert sample_at(g, t) in samples
