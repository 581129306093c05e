"""Reference computations written straight from the definitions.

Nothing here touches the arithmetic-transform code paths (no Moebius
inversion, no averages, no interpolation weights); these are the yardsticks
the fast paths are checked against. Everything is O(N^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError
from .signal import FourierCoefficients, SignalSource, sample_at
from .spectrum import Spectrum


def _cas_matrix(N):
    ki = np.outer(np.arange(N), np.arange(N)) % N  # exact phase reduction
    ang = 2 * np.pi * ki / N
    return np.cos(ang) + np.sin(ang)


def dht_definition(v: Sequence[float]) -> Spectrum:
    """V_k = (1/N) sum_i v_i cas(2 pi k i / N)."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) < 1:
        raise DomainError("expected a non-empty 1-D vector", module="oracle")
    return Spectrum(tuple(_cas_matrix(len(v)) @ v / len(v)))


def idht_definition(V) -> np.ndarray:
    """v_i = sum_k V_k cas(2 pi k i / N)."""
    V = np.asarray(V.values if isinstance(V, Spectrum) else V, dtype=float)
    if V.ndim != 1 or len(V) < 1:
        raise DomainError("expected a non-empty 1-D spectrum", module="oracle")
    return _cas_matrix(len(V)) @ V


def cas_sum(k: int, kp: int) -> float:
    """sum_{m<k} cas(2 pi m kp / k), evaluated numerically."""
    m = np.arange(k)
    ang = 2 * np.pi * ((m * kp) % k) / k
    return float(np.sum(np.cos(ang) + np.sin(ang)))


def fourier_series_numeric(src: SignalSource, N: int, quad_points: int) -> FourierCoefficients:
    """Rectangle-rule projection of one period onto cos/sin harmonics 1..N."""
    if quad_points < 2 * N + 1:
        raise DomainError(f"quad_points={quad_points} too small for N={N}; need >= {2 * N + 1}",
                          module="oracle")
    T = src.period
    Q = quad_points
    x = np.array([sample_at(src, q * T / Q) for q in range(Q)])
    qn = np.outer(np.arange(1, N + 1), np.arange(Q)) % Q
    ang = 2 * np.pi * qn / Q
    a = 2.0 / Q * (np.cos(ang) @ x)
    b = 2.0 / Q * (np.sin(ang) @ x)
    return FourierCoefficients(math.fsum(x) / Q, tuple(a), tuple(b), T)


@dataclass(frozen=True)
class ErrorReport:
    max_abs: float
    rmse: float
    relative_rmse: Optional[float]
    n: int

    def as_dict(self):
        return {"max_abs_err": self.max_abs, "rmse": self.rmse,
                "relative_rmse": self.relative_rmse, "n": self.n}


def compare(x, ref) -> ErrorReport:
    """Error of ``x`` against ``ref``; relative_rmse is None for a zero reference."""
    x = np.asarray(getattr(x, "values", x), dtype=float)
    ref = np.asarray(getattr(ref, "values", ref), dtype=float)
    if x.shape != ref.shape:
        raise DomainError(f"length mismatch: {x.shape} vs {ref.shape}", module="oracle")
    n = x.size
    if n == 0:
        return ErrorReport(0.0, 0.0, None, 0)
    diff = x - ref
    rmse = float(np.sqrt(np.mean(diff ** 2)))
    ref_rms = float(np.sqrt(np.mean(ref ** 2)))
    rel = rmse / ref_rms if ref_rms > 0 else None
    return ErrorReport(float(np.max(np.abs(diff))), rmse, rel, n)


def coefficient_vector(c: FourierCoefficients) -> np.ndarray:
    """[a0, a_1..a_N, b_1..b_N] for side-by-side comparisons."""
    return np.concatenate([[c.a0], c.a, c.b])
