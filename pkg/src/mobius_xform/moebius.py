"""Moebius function, finite Moebius inversion and the 2**k (2m+1) split."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .ops import OpCounter


def _require_positive(n, what="n"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"{what} must be a positive integer, got {n!r}", module="moebius")


def mu(n: int) -> int:
    """Moebius function by trial division.

    >>> [mu(n) for n in (1, 2, 4, 6, 30)]
    [1, -1, 0, 1, -1]
    """
    _require_positive(n)
    sign = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1 if p == 2 else 2
    if n > 1:
        sign = -sign
    return sign


@dataclass(frozen=True)
class MoebiusTable:
    """Values mu(1)..mu(limit); ``table[n]`` is 1-based."""

    limit: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.limit:
            raise DomainError("table length must equal limit", module="moebius")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError(f"index {n} outside 1..{self.limit}", module="moebius")
        return self.values[n - 1]

    def __len__(self):
        return self.limit


def mu_sieve(limit: int) -> MoebiusTable:
    """Linear (Euler) sieve for mu(1)..mu(limit)."""
    _require_positive(limit, "limit")
    vals = [0] * (limit + 1)
    vals[1] = 1
    composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            vals[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            composite[ip] = 1
            if i % p == 0:
                vals[ip] = 0
                break
            vals[ip] = -vals[i]
    return MoebiusTable(limit, tuple(vals[1:]))


_shared: MoebiusTable | None = None


def table_for(limit: int) -> MoebiusTable:
    """A cached table covering at least ``limit``."""
    global _shared
    if _shared is None or _shared.limit < limit:
        _shared = mu_sieve(max(limit, 64))
    return _shared


def _mu_lookup(table: MoebiusTable | None):
    if table is None:
        return mu
    return table.__getitem__


def inversion_terms(n: int, bound: int, table: MoebiusTable | None = None,
                    odd_only: bool = False) -> list[tuple[int, int]]:
    """Nonzero terms ``(l, mu(l))`` of a finite inversion sum.

    ``l`` runs over ``1..bound // n`` (odd ``l`` only when ``odd_only``).
    """
    _require_positive(n)
    look = _mu_lookup(table)
    step = 2 if odd_only else 1
    out = []
    for l in range(1, bound // n + 1, step):
        s = look(l)
        if s:
            out.append((l, s))
    return out


def signed_sum(terms, ops: OpCounter | None = None) -> float:
    """Sum of ``sign * value`` pairs using only additions and subtractions."""
    acc = 0.0
    first = True
    for sign, value in terms:
        if ops is not None:
            ops.count_trivial()
        if sign == 0:
            continue
        if first:
            acc = value if sign > 0 else -value
            first = False
        else:
            acc = acc + value if sign > 0 else acc - value
            if ops is not None:
                ops.count_adds()
    return acc


def moebius_invert(g: Sequence[float], n: int, table: MoebiusTable | None = None,
                   ops: OpCounter | None = None) -> float:
    """Recover f_n from divisor sums g_n = sum_{k <= N/n} f_{kn}.

    ``g`` holds g_1..g_N at positions 0..N-1.
    """
    _require_positive(n)
    N = len(g)
    if n > N:
        raise DomainError(f"n={n} exceeds series length N={N}", module="moebius")
    look = _mu_lookup(table)
    return signed_sum(((look(m), g[m * n - 1]) for m in range(1, N // n + 1)), ops)


class Pow2Factorization(NamedTuple):
    n: int
    k: int
    m: int


def factor_pow2(n: int) -> Pow2Factorization:
    """Split ``n = 2**k * (2m + 1)``."""
    _require_positive(n)
    k = (n & -n).bit_length() - 1
    return Pow2Factorization(n, k, ((n >> k) - 1) // 2)
