"""Arithmetic Fourier transforms.

Three variants recover Fourier-series coefficients of a periodic signal from
averages of (mostly non-uniform) samples followed by a finite Moebius
inversion:

* Tufts-Sadasiv: harmonics v_k(t) of an even, zero-mean signal from the
  averages S_n(t) = (1/n) sum_m v(t - m/n).
* Reed-Tufts: cosine and sine coefficients from shifted averages S_n(alpha)
  of the mean-removed signal; the sine part uses the shift 1/2**(k+2) where
  n = 2**k (2m+1).
* Reed-Shih: Bruns alternating averages B_2n(alpha); only odd l enter the
  inversion, so a_n and b_n cost the same.

The inversion stage only adds and subtracts (mu is -1, 0 or 1). Sample
times are carried as exact fractions of the period.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple

import numpy as np

from ._parallel import map_ordered
from .errors import DomainError
from .moebius import factor_pow2, inversion_terms, signed_sum, table_for
from .ops import A0_STAGE, OpCounter, StagedOps
from .signal import FourierCoefficients, Number, SignalSource, mean_estimate

TUFTS_SADASIV = "tufts-sadasiv"
REED_TUFTS = "reed-tufts"
REED_SHIH = "reed-shih"
ALGORITHMS = (TUFTS_SADASIV, REED_TUFTS, REED_SHIH)

AVERAGES = "averages"
MOBIUS = "mobius"


def _check_pos(n, what):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"{what} must be a positive integer, got {n!r}", module="aft")


def _shift(alpha: Number) -> Number:
    if not -1 < alpha < 1:
        raise DomainError(f"shift alpha must lie in (-1, 1), got {alpha}", module="aft")
    if isinstance(alpha, Rational):
        return Fraction(alpha)
    return float(alpha)


class AverageId(NamedTuple):
    """``S_n(shift)`` (kind "S") or ``B_n(shift)`` (kind "B", n even)."""

    kind: str
    order: int
    shift: Fraction

    def __str__(self):
        return f"{self.kind}_{self.order}({self.shift})"


def _plain_sum(src, phases, ops):
    acc = 0.0
    for i, p in enumerate(phases):
        acc = acc + src.at_phase(p)
        if ops is not None and i:
            ops.count_adds()
    return acc


def ts_average(src: SignalSource, n: int, t: Number, ops: OpCounter | None = None) -> float:
    """S_n(t) = (1/n) sum_{m<n} v(t - m T/n)."""
    _check_pos(n, "n")
    base = _as_phase(t, src.period)
    total = _plain_sum(src, (base - Fraction(m, n) for m in range(n)), ops)
    if ops is not None:
        ops.count_scale()
    return total / n


def _as_phase(t, T):
    if isinstance(t, Rational) and isinstance(T, Rational):
        return Fraction(t) / Fraction(T)
    return float(t) / float(T)


def ts_harmonic(src: SignalSource, k: int, t: Number, N: int,
                ops: OpCounter | None = None) -> float:
    """k-th harmonic v_k(t) of an even, zero-mean signal bandlimited to N.

    The sum over m is truncated at N // k since S_n vanishes for n > N.
    For a signal that is not even the value is the harmonic of its even
    part only.
    """
    _check_pos(k, "k")
    _check_pos(N, "N")
    if k > N:
        raise DomainError(f"harmonic k={k} exceeds N={N}", module="aft")
    table = table_for(N)
    terms = [(s, ts_average(src, l * k, t, ops)) for l, s in inversion_terms(k, N, table)]
    return signed_sum(terms, ops)


def rt_average(src: SignalSource, n: int, alpha: Number, mean: float | None = None,
               ops: OpCounter | None = None) -> float:
    """S_n(alpha) = (1/n) sum_{m<n} vbar(m T/n + alpha T), vbar = v - a0."""
    _check_pos(n, "n")
    alpha = _shift(alpha)
    if mean is None:
        mean = mean_estimate(src)
    total = _plain_sum(src, (Fraction(m, n) + alpha for m in range(n)), ops)
    if ops is not None:
        ops.count_scale()
        ops.count_adds()  # mean removal, once per average
    return total / n - mean


def rt_cn(src: SignalSource, n: int, alpha: Number, N: int, mean: float | None = None,
          ops: OpCounter | None = None) -> float:
    """c_n(alpha) = sum_{l <= N/n} mu(l) S_{ln}(alpha)."""
    _check_pos(n, "n")
    _check_pos(N, "N")
    if n > N:
        raise DomainError(f"n={n} exceeds N={N}", module="aft")
    if mean is None:
        mean = mean_estimate(src)
    table = table_for(N)
    terms = [(s, rt_average(src, l * n, alpha, mean, ops)) for l, s in inversion_terms(n, N, table)]
    return signed_sum(terms, ops)


def bruns_average(src: SignalSource, two_n: int, alpha: Number,
                  ops: OpCounter | None = None) -> float:
    """B_2n(alpha) = (1/2n) sum_{m<2n} (-1)^m v(m T/2n + alpha T)."""
    _check_pos(two_n, "two_n")
    if two_n % 2:
        raise DomainError(f"Bruns average order must be even, got {two_n}", module="aft")
    alpha = _shift(alpha)
    acc = 0.0
    for m in range(two_n):
        x = src.at_phase(Fraction(m, two_n) + alpha)
        acc = acc + x if m % 2 == 0 else acc - x
    if ops is not None:
        ops.count_trivial(two_n)
        ops.count_adds(two_n - 1)
        ops.count_scale()
    return acc / two_n


@dataclass
class AftResult:
    coeffs: FourierCoefficients
    ops: StagedOps
    averages: dict[AverageId, float] = field(default_factory=dict)

    @property
    def counter(self) -> OpCounter:
        return self.ops.total


def _sine_shift_rt(n: int) -> Fraction:
    return Fraction(1, 2 ** (factor_pow2(n).k + 2))


def _average_plan(N: int, algorithm: str) -> list[AverageId]:
    """Every average the coefficient formulas use, in evaluation order."""
    table = table_for(N)
    if algorithm == REED_SHIH:
        return ([AverageId("B", 2 * j, Fraction(0)) for j in range(1, N + 1)]
                + [AverageId("B", 2 * j, Fraction(1, 4 * j)) for j in range(1, N + 1)])
    if algorithm == REED_TUFTS:
        ids = [AverageId("S", j, Fraction(0)) for j in range(1, N + 1)]
        seen = set(ids)
        for n in range(1, N + 1):
            alpha = _sine_shift_rt(n)
            for l, _ in inversion_terms(n, N, table):
                aid = AverageId("S", l * n, alpha)
                if aid not in seen:
                    seen.add(aid)
                    ids.append(aid)
        return ids
    if algorithm == TUFTS_SADASIV:
        return [AverageId("S", j, Fraction(0)) for j in range(1, N + 1)]
    raise DomainError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}",
                      module="aft")


def _evaluate_averages(src, ids, mean, workers):
    def one(aid):
        ops = OpCounter()
        if aid.kind == "B":
            val = bruns_average(src, aid.order, aid.shift, ops)
        else:
            val = rt_average(src, aid.order, aid.shift, mean, ops)
        return val, ops

    results = map_ordered(one, ids, workers)
    values = {aid: val for aid, (val, _) in zip(ids, results)}
    total = OpCounter()
    for _, ops in results:
        total = total + ops
    return values, total


def _a0_with_ops(src, ops: StagedOps) -> float:
    a0 = mean_estimate(src)
    L = getattr(src, "L", None)
    if L is not None:
        ops.stage(A0_STAGE).count_adds(L - 1)
        ops.stage(A0_STAGE).count_scale()
    return a0


def reed_tufts(src: SignalSource, N: int, workers: int | None = None) -> AftResult:
    """Fourier coefficients a_n = c_n(0), b_n = (-1)^m c_n(1/2**(k+2))."""
    _check_pos(N, "N")
    ops = StagedOps()
    a0 = _a0_with_ops(src, ops)
    ids = _average_plan(N, REED_TUFTS)
    avg, avg_ops = _evaluate_averages(src, ids, a0, workers)
    ops.stages[AVERAGES] = avg_ops
    mob = ops.stage(MOBIUS)
    table = table_for(N)
    a, b = [], []
    for n in range(1, N + 1):
        terms = inversion_terms(n, N, table)
        a.append(signed_sum([(s, avg[AverageId("S", l * n, Fraction(0))]) for l, s in terms], mob))
        alpha = _sine_shift_rt(n)
        cn = signed_sum([(s, avg[AverageId("S", l * n, alpha)]) for l, s in terms], mob)
        mob.count_trivial()
        b.append(-cn if factor_pow2(n).m % 2 else cn)
    return AftResult(FourierCoefficients(a0, a, b, src.period), ops, avg)


def shih_terms(n: int, N: int, sine: bool) -> list[tuple[int, int]]:
    """``(l, sign)`` pairs of the Reed-Shih sum for coefficient n (odd l, sign != 0)."""
    out = []
    for l, s in inversion_terms(n, N, table_for(N), odd_only=True):
        if sine and (l - 1) // 2 % 2:
            s = -s
        out.append((l, s))
    return out


def reed_shih(src: SignalSource, N: int, workers: int | None = None) -> AftResult:
    """Simplified AFT from Bruns alternating averages.

    a_n = sum_{odd l} mu(l) B_{2nl}(0) and
    b_n = sum_{odd l} mu(l) (-1)^((l-1)/2) B_{2nl}(1/(4nl)).
    The raw signal is used; alternating signs cancel the mean.
    """
    _check_pos(N, "N")
    ops = StagedOps()
    a0 = _a0_with_ops(src, ops)
    ids = _average_plan(N, REED_SHIH)
    avg, avg_ops = _evaluate_averages(src, ids, None, workers)
    ops.stages[AVERAGES] = avg_ops
    mob = ops.stage(MOBIUS)
    a, b = [], []
    for n in range(1, N + 1):
        a.append(signed_sum(
            [(s, avg[AverageId("B", 2 * n * l, Fraction(0))]) for l, s in shih_terms(n, N, False)],
            mob))
        b.append(signed_sum(
            [(s, avg[AverageId("B", 2 * n * l, Fraction(1, 4 * n * l))])
             for l, s in shih_terms(n, N, True)],
            mob))
    return AftResult(FourierCoefficients(a0, a, b, src.period), ops, avg)


def shih_matrices(N: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer matrices mapping [B_2(.), ..., B_2N(.)] to a and b."""
    _check_pos(N, "N")
    A = np.zeros((N, N), dtype=int)
    B = np.zeros((N, N), dtype=int)
    for n in range(1, N + 1):
        for l, s in shih_terms(n, N, False):
            A[n - 1, n * l - 1] = s
        for l, s in shih_terms(n, N, True):
            B[n - 1, n * l - 1] = s
    return A, B


def required_sample_times(N: int, algorithm: str = REED_SHIH) -> list[tuple[AverageId, list[Fraction]]]:
    """Sample times (fractions of the period, reduced to [0, 1)) per average."""
    _check_pos(N, "N")
    out = []
    for aid in _average_plan(N, algorithm):
        if algorithm == TUFTS_SADASIV:
            times = {(-Fraction(m, aid.order)) % 1 for m in range(aid.order)}
        else:
            times = {(Fraction(m, aid.order) + aid.shift) % 1 for m in range(aid.order)}
        out.append((aid, sorted(times)))
    return out


def distinct_sample_times(schedule) -> list[Fraction]:
    return sorted({t for _, times in schedule for t in times})
