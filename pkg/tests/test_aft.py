from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mobius_xform.aft import (MOBIUS, REED_SHIH, REED_TUFTS, AverageId, bruns_average,
                              distinct_sample_times, reed_shih, reed_tufts, required_sample_times,
                              rt_average, rt_cn, shih_matrices, ts_average, ts_harmonic)
from mobius_xform.errors import DomainError
from mobius_xform.oracle import coefficient_vector, compare, fourier_series_numeric
from mobius_xform.signal import (ExactEvaluator, FourierCoefficients, UniformGrid,
                                 random_coefficients, sample_at)


def series(a0=0.0, a=(), b=()):
    n = max(len(a), len(b), 1)
    a = tuple(a) + (0.0,) * (n - len(a))
    b = tuple(b) + (0.0,) * (n - len(b))
    return ExactEvaluator(FourierCoefficients(a0, a, b))


COS1 = series(a=(1.0,))
ZERO = series()


def test_ts_average_examples():
    src = ExactEvaluator(random_coefficients(3, np.random.default_rng(0)))
    assert ts_average(src, 1, Fraction(1, 7)) == sample_at(src, Fraction(1, 7))
    assert ts_average(series(a0=2.0), 5, 0.3) == pytest.approx(2.0)
    assert ts_average(COS1, 2, 0) == pytest.approx(0.0, abs=1e-15)


def test_ts_harmonic_examples():
    src = series(a=(1.5,))
    assert ts_harmonic(src, 1, 0, 4) == pytest.approx(1.5, abs=1e-12)
    assert ts_harmonic(src, 4, 0, 4) == ts_average(src, 4, 0)
    assert ts_harmonic(ZERO, 2, 0, 4) == 0.0


def test_ts_harmonic_even_signal():
    src = series(a=(0.5, -1.0, 2.0, 0.25))
    for k, ak in enumerate((0.5, -1.0, 2.0, 0.25), start=1):
        assert ts_harmonic(src, k, 0, 4) == pytest.approx(ak, abs=1e-12)


def test_rt_average_examples():
    src = series(a0=0.7, a=(1.0, 0.4), b=(0.2,))
    assert rt_average(src, 1, 0) == pytest.approx(sample_at(src, 0) - 0.7, abs=1e-14)
    assert rt_average(series(a0=0.0), 3, Fraction(1, 3)) == 0.0
    assert rt_average(COS1, 2, 0) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(DomainError):
        rt_average(COS1, 2, 1)


def test_rt_cn_examples():
    src = series(a=(0.0, 0.0, 1.25))
    assert rt_cn(src, 3, 0, 3) == rt_average(src, 3, 0)
    assert rt_cn(src, 3, 0, 6) == pytest.approx(1.25, abs=1e-12)
    assert rt_cn(ZERO, 2, 0, 4) == 0.0


def test_bruns_average_examples():
    assert bruns_average(series(a0=4.0), 6, 0) == pytest.approx(0.0, abs=1e-15)
    assert bruns_average(COS1, 2, 0) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        bruns_average(COS1, 3, 0)


def test_bruns_queries_table_times():
    seen = []

    class Spy(ExactEvaluator):
        def at_phase(self, phase):
            seen.append(phase)
            return super().at_phase(phase)

    bruns_average(Spy(COS1.coeffs), 2, 0)
    assert sorted(seen) == [0, Fraction(1, 2)]


def _check_recovery(result, coeffs, tol=1e-10):
    err = compare(coefficient_vector(result.coeffs), coefficient_vector(coeffs))
    assert err.max_abs <= tol, err


def test_reed_tufts_synthetic():
    c = FourierCoefficients(0.0, (2.0, 0.0, 1.0), (0.0, 3.0, 0.0))
    _check_recovery(reed_tufts(ExactEvaluator(c), 3), c)


def test_reed_tufts_first_sine_uses_quarter_shift():
    src = series(a0=0.3, a=(0.1,), b=(-0.8,))
    res = reed_tufts(src, 1)
    assert res.coeffs.b[0] == pytest.approx(rt_cn(src, 1, Fraction(1, 4), 1, mean=0.3), abs=1e-14)


def test_reed_shih_synthetic():
    c = FourierCoefficients(0.0, (1.0, -2.0, 0.0, 0.5, 0.0), (0.0, 1.0, 1.0, 0.0, -1.0))
    _check_recovery(reed_shih(ExactEvaluator(c), 5), c)


@pytest.mark.parametrize("fn", [reed_tufts, reed_shih])
def test_zero_signal(fn):
    res = fn(series(a=(0.0,) * 4), 4)
    assert not np.any(coefficient_vector(res.coeffs))


@given(st.integers(1, 16), st.integers(0, 2**31), st.sampled_from([reed_tufts, reed_shih]))
def test_exact_recovery(N, seed, fn):
    c = random_coefficients(N, np.random.default_rng(seed))
    src = ExactEvaluator(c)
    res = fn(src, N)
    _check_recovery(res, c)
    ref = fourier_series_numeric(src, N, 2 * N + 3)
    _check_recovery(res, ref)


def test_shih_matrices_n5():
    A, B = shih_matrices(5)
    eye = np.eye(5, dtype=int)
    assert A.tolist() == (eye + np.array([[0, 0, -1, 0, -1]] + [[0] * 5] * 4)).tolist()
    assert B.tolist() == (eye + np.array([[0, 0, 1, 0, -1]] + [[0] * 5] * 4)).tolist()


@pytest.mark.parametrize("blocklength", [8, 16, 32])
def test_reed_shih_multiplication_budget(blocklength):
    H = blocklength // 2
    res = reed_shih(ExactEvaluator(random_coefficients(H, np.random.default_rng(H))), H)
    total = res.counter
    assert total.nontrivial_mults == total.scale_mults <= blocklength
    assert res.ops.stage(MOBIUS).nontrivial_mults == 0
    assert blocklength ** 2 / 4 <= total.adds <= blocklength ** 2


def test_reed_tufts_mobius_stage_is_trivial():
    res = reed_tufts(ExactEvaluator(random_coefficients(12, np.random.default_rng(2))), 12)
    assert res.ops.stage(MOBIUS).nontrivial_mults == 0
    assert res.ops.stage(MOBIUS).trivial_mults > 0


def test_required_sample_times_examples():
    sched = dict(required_sample_times(5))
    assert sched[AverageId("B", 4, Fraction(0))] == [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    assert sched[AverageId("B", 10, Fraction(1, 20))] == [
        Fraction(n, 20) for n in (1, 3, 5, 7, 9, 11, 13, 15, 17, 19)]
    (aid, times), = required_sample_times(1)[:1]
    assert str(aid) == "B_2(0)" and times == [0, Fraction(1, 2)]
    assert len(distinct_sample_times(required_sample_times(5))) == 40


def test_reed_tufts_schedule_is_exact():
    sched = required_sample_times(4, REED_TUFTS)
    assert all(isinstance(t, Fraction) and 0 <= t < 1 for _, ts in sched for t in ts)


def test_zero_order_grid_degradation():
    N = 5
    c = random_coefficients(N, np.random.default_rng(0))
    exact = ExactEvaluator(c)
    errs = []
    for mult in (2, 4, 8):
        L = mult * N
        grid = UniformGrid.over_period([sample_at(exact, Fraction(i, L)) for i in range(L)], 1)
        res = reed_shih(grid, N)
        errs.append(compare(coefficient_vector(res.coeffs)[1:], coefficient_vector(c)[1:]).rmse)
    assert all(np.isfinite(errs))
    assert errs[0] > errs[1] > errs[2]


def test_threads_do_not_change_results():
    src = ExactEvaluator(random_coefficients(9, np.random.default_rng(4)))
    one = reed_shih(src, 9, workers=1)
    many = reed_shih(src, 9, workers=4)
    assert np.array_equal(coefficient_vector(one.coeffs), coefficient_vector(many.coeffs))
    assert one.counter == many.counter
