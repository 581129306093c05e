"""Signal sources for the arithmetic Fourier transforms.

A source answers "what is v at time t" for arbitrary, possibly off-grid,
times. Two kinds exist: an exact evaluator of a finite Fourier series and a
uniform grid covering exactly one period, read back by rounding to the
nearest sample (zero-order) or by linear interpolation (first-order).

Times are accepted as floats or :class:`fractions.Fraction`. Fractions
keep the rounding decision exact, which matters at ties such as
``10 * 1/4 = 2.5``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

import numpy as np

from .errors import DomainError

Number = Union[float, int, Fraction]

ZERO_ORDER = "zero-order"
FIRST_ORDER = "first-order"
GRID_RULES = (ZERO_ORDER, FIRST_ORDER)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class FourierCoefficients:
    """a0 + sum a_n cos(2 pi n t / T) + sum b_n sin(2 pi n t / T)."""

    a0: float
    a: tuple[float, ...]
    b: tuple[float, ...]
    T: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise DomainError("a and b must have equal length", module="signal")
        if not self.T > 0:
            raise DomainError(f"period must be positive, got {self.T}", module="signal")

    @property
    def N(self) -> int:
        return len(self.a)

    @classmethod
    def zeros(cls, N: int, T: float = 1.0) -> FourierCoefficients:
        return cls(0.0, (0.0,) * N, (0.0,) * N, T)


def random_coefficients(N: int, rng: np.random.Generator, T: float = 1.0,
                        with_mean: bool = True) -> FourierCoefficients:
    """Standard-normal coefficients for a signal bandlimited to N harmonics."""
    a0 = float(rng.standard_normal()) if with_mean else 0.0
    return FourierCoefficients(a0, tuple(rng.standard_normal(N)), tuple(rng.standard_normal(N)), T)


def _frac_part(x: Number) -> Number:
    if isinstance(x, Fraction):
        return x - math.floor(x)
    return x % 1.0


def nearest_int(x: Number) -> int:
    """Nearest integer; ties go up (away from zero for x >= 0)."""
    if isinstance(x, Rational):
        return math.floor(Fraction(x) + Fraction(1, 2))
    return math.floor(x + 0.5)


def eval_series(coeffs: FourierCoefficients, t: Number) -> float:
    """Evaluate the finite Fourier series at time ``t`` (seconds)."""
    return _eval_phase(coeffs, _phase(t, coeffs.T))


def _phase(t: Number, T: Number) -> Number:
    if isinstance(t, Rational) and isinstance(T, Rational):
        return Fraction(t) / Fraction(T)
    return float(t) / float(T)


def _eval_phase(coeffs: FourierCoefficients, phase: Number) -> float:
    acc = coeffs.a0
    for n, (an, bn) in enumerate(zip(coeffs.a, coeffs.b), start=1):
        # reduce n*phase first so large harmonics keep full precision
        ang = TWO_PI * float(_frac_part(n * phase))
        acc += an * math.cos(ang) + bn * math.sin(ang)
    return acc


class SignalSource:
    """Interface: ``period`` and ``at_phase(p)`` with p in units of the period."""

    period: Number

    def at_phase(self, phase: Number) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class ExactEvaluator(SignalSource):
    coeffs: FourierCoefficients

    @property
    def period(self):
        return self.coeffs.T

    def at_phase(self, phase: Number) -> float:
        return _eval_phase(self.coeffs, _frac_part(phase))


@dataclass(frozen=True)
class UniformGrid(SignalSource):
    """Samples at i*T0, i = 0..L-1, with L*T0 == T."""

    samples: tuple[float, ...]
    T0: Number
    T: Number = 1
    rule: str = ZERO_ORDER

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(float(x) for x in self.samples))
        L = len(self.samples)
        if L == 0:
            raise DomainError("grid needs at least one sample", module="signal")
        if not (self.T0 > 0 and self.T > 0):
            raise DomainError("T0 and T must be positive", module="signal")
        if self.rule not in GRID_RULES:
            raise DomainError(f"unknown rule {self.rule!r}; expected one of {GRID_RULES}",
                              module="signal")
        if isinstance(self.T0, Rational) and isinstance(self.T, Rational):
            spans = Fraction(self.T0) * L == Fraction(self.T)
        else:
            spans = math.isclose(float(self.T0) * L, float(self.T), rel_tol=1e-12)
        if not spans:
            raise DomainError(f"grid must span one period: L*T0 = {L}*{self.T0} != T = {self.T}",
                              module="signal")

    @classmethod
    def over_period(cls, samples: Sequence[float], T: Number = 1,
                    rule: str = ZERO_ORDER) -> UniformGrid:
        L = len(samples)
        if isinstance(T, Rational):
            T0 = Fraction(T) / L
        else:
            T0 = float(T) / L
        return cls(tuple(samples), T0, T, rule)

    @classmethod
    def from_function(cls, f, L: int, T: Number = 1, rule: str = ZERO_ORDER) -> UniformGrid:
        """Sample ``f(t)`` at ``t = i*T/L``."""
        return cls.over_period([f(i * float(T) / L) for i in range(L)], T, rule)

    @property
    def period(self):
        return self.T

    @property
    def L(self) -> int:
        return len(self.samples)

    def at_phase(self, phase: Number) -> float:
        L = self.L
        x = _frac_part(phase) * L  # grid position in [0, L)
        if self.rule == ZERO_ORDER:
            return self.samples[nearest_int(x) % L]
        i0 = math.floor(x)
        w = float(x - i0)
        i0 %= L
        if w == 0.0:
            return self.samples[i0]
        return (1.0 - w) * self.samples[i0] + w * self.samples[(i0 + 1) % L]


def sample_at(src: SignalSource, t: Number) -> float:
    """Value of ``src`` at time ``t`` in seconds."""
    return src.at_phase(_phase(t, src.period))


def mean_estimate(src: SignalSource) -> float:
    """a0: the stored mean for exact sources, the sample mean for grids."""
    if isinstance(src, ExactEvaluator):
        return src.coeffs.a0
    if isinstance(src, UniformGrid):
        return math.fsum(src.samples) / src.L
    raise DomainError(f"no mean rule for {type(src).__name__}", module="signal")
