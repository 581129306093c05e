"""Fractional-index interpolation.

A discrete transform pair fixes what ``v_r`` means for noninteger ``r``:
expand ``v`` in the transform kernel and evaluate the expansion at ``r``.
That gives ``v_r = sum_i w_i(r) v_i`` with

    w_i(r) = (1/N) sum_k ker(2 pi k i / N) ker(2 pi k r / N)

for ker in {cos, sin, cas}. The cosine kernel reproduces the even part of
``v`` and the sine kernel the odd part; the Hartley (cas) kernel reproduces
``v`` itself, and its weights sum to one.

Resolvers turn those weights into a rule: the full (ideal) sum, the ``m``
largest weights renormalised, or plain rounding of the index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

import numpy as np

from .errors import DegenerateWeightError, DomainError
from .ops import OpCounter
from .signal import nearest_int

COSINE = "fourier-cosine"
SINE = "fourier-sine"
HARTLEY = "hartley"
KERNELS = (COSINE, SINE, HARTLEY)

CLOSED = "closed"
DIRECT = "direct-sum"
ASYMPTOTIC = "asymptotic"
MODES = (CLOSED, DIRECT, ASYMPTOTIC)

IDEAL = "ideal"
ZERO = "zero-order"
SYM_ZERO = "symmetric-zero-order"
TOP_M = "top-m"
STRATEGIES = (IDEAL, ZERO, SYM_ZERO, TOP_M)

# top-m retention order: largest signed weight, or largest |w|
LARGEST = "largest"
MAGNITUDE = "magnitude"
SELECTIONS = (LARGEST, MAGNITUDE)

# closed forms divide by sin(pi (i -+ r) / N); below this use the direct sum
SINGULAR_EPS = 1e-9
# closed vs direct agreement budget used by the test-suite
AGREEMENT_TOL = 1e-8
# |eta| below this is treated as a vanishing normaliser
ETA_EPS = 1e-12


def sa(x: float) -> float:
    """Sampling function sin(x)/x, 1 at the origin."""
    if x == 0:
        return 1.0
    return math.sin(x) / x


def cas(x):
    return np.cos(x) + np.sin(x)


_KERNEL_FN = {COSINE: np.cos, SINE: np.sin, HARTLEY: cas}


@dataclass(frozen=True)
class WeightSpec:
    kernel: str = HARTLEY
    mode: str = CLOSED
    N: int = 2

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise DomainError(f"unknown kernel {self.kernel!r}; expected one of {KERNELS}",
                              module="interp")
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}; expected one of {MODES}",
                              module="interp")
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 2:
            raise DomainError(f"blocklength N must be an integer >= 2, got {self.N!r}",
                              module="interp")


def _direct(kernel, N, i, r):
    ker = _KERNEL_FN[kernel]
    k = np.arange(N)
    return float(np.dot(ker(2 * np.pi * k * i / N), ker(2 * np.pi * k * r / N))) / N


def _sincos_pi(a, X, h, N):
    """sin and cos of pi * a * (X + h) / N for integer a, X and small h.

    The integer part is reduced modulo 2N exactly, so values near the
    zeros of the closed-form denominators keep full relative precision.
    """
    P = (a * X) % (2 * N)
    if P == 0:
        s0, c0 = 0.0, 1.0
    elif P == N:
        s0, c0 = 0.0, -1.0
    else:
        s0, c0 = math.sin(math.pi * P / N), math.cos(math.pi * P / N)
    g = math.pi * a * h / N
    sg, cg = math.sin(g), math.cos(g)
    return s0 * cg + c0 * sg, c0 * cg - s0 * sg


def _dirichlet(N, X, h, den):
    # (N - 1/2)/N * Sa((N - 1/2)/N * 2 pi x) / Sa(pi x / N), x = X + h,
    # written as sin((2N-1) pi x / N) / (2N sin(pi x / N))
    if X == 0 and h == 0:
        return (N - 0.5) / N
    num, _ = _sincos_pi(2 * N - 1, X, h, N)
    return num / (2 * N * den)


def _closed(kernel, N, i, r):
    R = round(r)
    f = r - R
    dX, dh = i - R, -f  # i - r
    sX, sh = i + R, f   # i + r
    sin_d, _ = _sincos_pi(1, dX, dh, N)
    sin_s, _ = _sincos_pi(1, sX, sh, N)
    if abs(sin_d) < SINGULAR_EPS or abs(sin_s) < SINGULAR_EPS:
        return _direct(kernel, N, i, r)
    if kernel == COSINE:
        return 1 / (2 * N) + 0.5 * _dirichlet(N, dX, dh, sin_d) + 0.5 * _dirichlet(N, sX, sh, sin_s)
    if kernel == SINE:
        return 0.5 * _dirichlet(N, dX, dh, sin_d) - 0.5 * _dirichlet(N, sX, sh, sin_s)
    # (cot x - cos((2N-1) x) / sin x) / 2N with x = pi (i + r) / N, using
    # cos x - cos((2N-1) x) = 2 sin(N x) sin((N-1) x) to avoid cancellation
    sin_nx, _ = _sincos_pi(N, sX, sh, N)
    sin_n1x, _ = _sincos_pi(N - 1, sX, sh, N)
    return 1 / (2 * N) + _dirichlet(N, dX, dh, sin_d) + sin_nx * sin_n1x / (N * sin_s)


def weight_asymptotic(kernel: str, i: float, r: float) -> float:
    """Large-N limit of the weighting function (N drops out)."""
    d, s = 2 * math.pi * (i - r), 2 * math.pi * (i + r)
    if kernel == COSINE:
        return sa(d) / 2 + sa(s) / 2
    if kernel == SINE:
        return sa(d) / 2 - sa(s) / 2
    if kernel == HARTLEY:
        tail = 0.0 if s == 0 else (1 - math.cos(2 * math.pi * r)) / s
        return sa(d) + tail
    raise DomainError(f"unknown kernel {kernel!r}", module="interp")


def weight(spec: WeightSpec, i: int, r: float) -> float:
    """Weight of sample ``i`` in the value at (possibly fractional) index ``r``."""
    if not 0 <= i < spec.N:
        raise DomainError(f"sample index {i} outside 0..{spec.N - 1}", module="interp")
    r = float(r)
    if spec.mode == DIRECT:
        return _direct(spec.kernel, spec.N, i, r)
    if spec.mode == ASYMPTOTIC:
        return weight_asymptotic(spec.kernel, i, r)
    return _closed(spec.kernel, spec.N, i, r)


@lru_cache(maxsize=4096)
def _weights_cached(kernel, mode, N, r):
    spec = WeightSpec(kernel, mode, N)
    if mode == DIRECT:
        ker = _KERNEL_FN[kernel]
        k = np.arange(N)
        mat = ker(2 * np.pi * np.outer(np.arange(N), k) / N)
        w = mat @ ker(2 * np.pi * k * float(r) / N) / N
    else:
        w = np.array([weight(spec, i, r) for i in range(N)])
    w.setflags(write=False)
    return w


def weights(spec: WeightSpec, r) -> np.ndarray:
    """All N weights for index ``r`` (read-only, cached)."""
    return _weights_cached(spec.kernel, spec.mode, spec.N, _key(r))


def _key(r):
    if isinstance(r, Rational):
        return Fraction(r)
    return float(r)


def is_integer_index(r) -> bool:
    if isinstance(r, Rational):
        return Fraction(r).denominator == 1
    return float(r).is_integer()


@dataclass(frozen=True)
class Resolver:
    """Rule for producing ``v_r`` at a fractional index.

    ``kernel`` and ``mode`` select the weighting function for the ``ideal``
    and ``top-m`` strategies; the blocklength comes from the data.

    ``selection`` orders weights for top-m. Hartley weights carry a second,
    often negative lobe near ``N - r``; keeping the largest |w| can pair two
    weights of opposite sign whose sum (the normaliser eta) nearly cancels,
    so the default keeps the largest signed weights instead.
    """

    strategy: str = IDEAL
    kernel: str = HARTLEY
    mode: str = CLOSED
    m: int | None = None
    selection: str = LARGEST

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise DomainError(f"unknown strategy {self.strategy!r}; expected one of {STRATEGIES}",
                              module="interp")
        if self.strategy == TOP_M:
            if self.m is None or self.m < 1:
                raise DomainError("top-m needs m >= 1", module="interp")
        elif self.m is not None:
            raise DomainError(f"m only applies to top-m, not {self.strategy}", module="interp")
        if self.selection not in SELECTIONS:
            raise DomainError(f"unknown selection {self.selection!r}; expected one of {SELECTIONS}",
                              module="interp")
        WeightSpec(self.kernel, self.mode, 2)  # validates names

    def spec_for(self, N: int) -> WeightSpec:
        return WeightSpec(self.kernel, self.mode, N)

    def describe(self) -> str:
        if self.strategy == TOP_M:
            return f"top-m(m={self.m},{self.selection})"
        return self.strategy


def top_m_indexes(w: np.ndarray, m: int, selection: str = LARGEST) -> list[int]:
    """Indexes of the m largest weights (signed or by magnitude); ties go to the smaller index."""
    if selection == MAGNITUDE:
        key = lambda i: (-abs(w[i]), i)  # noqa: E731
    else:
        key = lambda i: (-w[i], i)  # noqa: E731
    return sorted(range(len(w)), key=key)[:m]


def resolve(v: Sequence[float], r, resolver: Resolver, ops: OpCounter | None = None) -> float:
    """Value of the length-N sequence ``v`` at index ``r`` in [0, N)."""
    N = len(v)
    if not 0 <= r < N:
        raise DomainError(f"index {r} outside [0, {N})", module="interp")
    if is_integer_index(r):
        return float(v[int(r)])
    st = resolver.strategy
    if st == ZERO:
        return float(v[nearest_int(r) % N])
    if st == SYM_ZERO:
        j = nearest_int(r) % N
        if ops is not None:
            ops.count_adds()
            ops.count_scale()
        return (v[j] + v[(N - j) % N]) / 2
    w = weights(resolver.spec_for(N), r)
    if st == IDEAL:
        if ops is not None:
            ops.count_mults(N)
            ops.count_adds(N - 1)
        return float(np.dot(w, np.asarray(v, dtype=float)))
    if resolver.m >= N:
        raise DomainError(f"top-m needs m < N (m={resolver.m}, N={N})", module="interp")
    keep = top_m_indexes(w, resolver.m, resolver.selection)
    eta = math.fsum(w[i] for i in keep)
    if abs(eta) < ETA_EPS:
        raise DegenerateWeightError(f"retained weights sum to {eta:.3g} at r={r}", module="interp")
    if ops is not None:
        k = len(keep)
        ops.count_mults(k + 1)
        ops.count_adds(2 * (k - 1))
    return math.fsum(w[i] * v[i] for i in keep) / eta
