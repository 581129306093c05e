"""Arithmetic Hartley transform.

The forward transform follows four steps:

1. index generation: the indexes m N / k, m < k, for every k in 1..N-1;
2. resolution of the fractional indexes with a :class:`~.interp.Resolver`;
3. the averages S_k = (1/k) sum_m v_{mN/k} of the mean-removed vector;
4. Moebius inversion V_k = sum_{l <= (N-1)/k} mu(l) S_{kl}.

V_0 is the plain mean. The DHT is its own inverse up to the factor N, so the
inverse runs the same machinery on the spectrum: averages
sigma_i = (1/i) sum_m V_{mN/i} of the mean-removed spectrum, inversion,
then a final scale by N; v_0 = sum_k V_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._parallel import map_ordered
from .errors import DomainError
from .interp import Resolver, resolve
from .moebius import inversion_terms, signed_sum, table_for
from .ops import INTERP_STAGE, OpCounter, StagedOps
from .spectrum import Spectrum

MEAN = "mean"
AVERAGES = "averages"
MOBIUS = "mobius"
SCALE = "scale"


def _check_N(N):
    if isinstance(N, bool) or not isinstance(N, int) or N < 2:
        raise DomainError(f"blocklength N must be an integer >= 2, got {N!r}", module="aht")


def fractional_bound(N: int) -> int:
    """sum of (d - 1) over 1 <= d <= N-1 with d not dividing N."""
    return sum(d - 1 for d in range(1, N) if N % d)


@dataclass(frozen=True)
class AhtPlan:
    """Index sets {m N / k : m < k} for k = 1..N-1, as exact fractions."""

    N: int
    indexes: dict[int, tuple[Fraction, ...]]

    def integer_indexes(self, k: int) -> list[int]:
        return [int(r) for r in self.indexes[k] if r.denominator == 1]

    def fractional_indexes(self, k: int) -> list[Fraction]:
        return [r for r in self.indexes[k] if r.denominator != 1]

    @property
    def fractional(self) -> list[Fraction]:
        """Distinct fractional indexes over all k, ascending."""
        return sorted({r for idx in self.indexes.values() for r in idx if r.denominator != 1})

    @property
    def fractional_count(self) -> int:
        return len(self.fractional)

    @property
    def fractional_occurrences(self) -> int:
        return sum(len(self.fractional_indexes(k)) for k in self.indexes)


def build_plan(N: int) -> AhtPlan:
    _check_N(N)
    return AhtPlan(N, {k: tuple(Fraction(m * N, k) for m in range(k)) for k in range(1, N)})


def dht_average(v, k: int, resolver: Resolver, ops: OpCounter | None = None,
                interp_ops: OpCounter | None = None, resolved=None) -> float:
    """S_k = (1/k) sum_{m<k} v_{mN/k}; fractional indexes go to ``resolver``.

    ``resolved`` optionally maps already-resolved fractional indexes to values.
    """
    N = len(v)
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= N - 1:
        raise DomainError(f"average order k={k} outside 1..{N - 1}", module="aht")
    acc = 0.0
    for m in range(k):
        r = Fraction(m * N, k)
        if r.denominator == 1:
            x = v[int(r)]
        elif resolved is not None and r in resolved:
            x = resolved[r]
        else:
            x = resolve(v, r, resolver, interp_ops)
        acc = acc + x
    if ops is not None:
        ops.count_adds(k - 1)
        ops.count_scale()
    return acc / k


def combination(N: int) -> dict[int, list[tuple[int, int]]]:
    """V_k = sum sign * S_j as ``{k: [(j, sign), ...]}`` for k = 1..N-1."""
    _check_N(N)
    table = table_for(N)
    return {k: [(k * l, s) for l, s in inversion_terms(k, N - 1, table)] for k in range(1, N)}


@dataclass
class AhtResult:
    values: np.ndarray
    ops: StagedOps
    plan: AhtPlan

    @property
    def counter(self) -> OpCounter:
        return self.ops.total

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum(tuple(self.values))


def _core(x: np.ndarray, resolver: Resolver, ops: StagedOps, workers) -> np.ndarray:
    """Steps 1-4 on a zero-mean vector; returns entries 1..N-1 (entry 0 unset)."""
    N = len(x)
    plan = build_plan(N)
    interp_ops = ops.stage(INTERP_STAGE)
    resolved = {r: resolve(x, r, resolver, interp_ops) for r in plan.fractional}

    def one(k):
        c = OpCounter()
        return dht_average(x, k, resolver, c, resolved=resolved), c

    results = map_ordered(one, range(1, N), workers)
    S = {k: val for k, (val, _) in zip(range(1, N), results)}
    avg = ops.stage(AVERAGES)
    for _, c in results:
        ops.stages[AVERAGES] = avg = avg + c

    mob = ops.stage(MOBIUS)
    out = np.zeros(N)
    for k, terms in combination(N).items():
        out[k] = signed_sum(((s, S[j]) for j, s in terms), mob)
    return out


def aht_forward(v, resolver: Resolver | None = None, workers: int | None = None) -> AhtResult:
    """Hartley spectrum of ``v`` by averages and Moebius inversion."""
    v = np.asarray(v, dtype=float)
    N = len(v)
    _check_N(N)
    resolver = resolver or Resolver()
    ops = StagedOps()
    mean_ops = ops.stage(MEAN)
    V0 = float(np.sum(v)) / N
    mean_ops.count_adds(2 * N - 1)  # N-1 for the sum, N for centring
    mean_ops.count_scale()
    V = _core(v - V0, resolver, ops, workers)
    V[0] = V0
    return AhtResult(V, ops, build_plan(N))


def aht_inverse(V, resolver: Resolver | None = None, workers: int | None = None) -> AhtResult:
    """Time samples from a Hartley spectrum (inverse kernel carries no 1/N)."""
    V = np.asarray(V.values if isinstance(V, Spectrum) else V, dtype=float)
    N = len(V)
    _check_N(N)
    resolver = resolver or Resolver()
    ops = StagedOps()
    mean_ops = ops.stage(MEAN)
    v0 = float(np.sum(V))
    mean_ops.count_adds(N - 1 + N)
    mean_ops.count_scale()
    # sigma of the raw spectrum is (1/N) sum_{s >= 0} v_{si}; removing the
    # spectrum mean v0/N drops the s = 0 term, leaving a clean inversion
    sigma_comb = _core(V - v0 / N, resolver, ops, workers)
    out = N * sigma_comb
    ops.stage(SCALE).count_scale(N - 1)
    out[0] = v0
    return AhtResult(out, ops, build_plan(N))
