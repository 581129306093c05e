"""Arithmetic operation tallies.

Counters are plain mutable dataclasses; every computation owns its own
counter and counters are merged with ``+`` (associative, commutative), so
independently evaluated averages can be tallied per task and reduced later.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

INTERP_STAGE = "interp"
A0_STAGE = "a0"
AUX_STAGES = frozenset({INTERP_STAGE, A0_STAGE})


@dataclass
class OpCounter:
    """Tally of arithmetic operations.

    ``scale_mults`` is the subset of ``nontrivial_mults`` that are
    multiplications by a ``1/n`` style scale factor. ``trivial_mults``
    counts multiplications by -1, 0 or 1 (sign flips and omissions).
    """

    nontrivial_mults: int = 0
    trivial_mults: int = 0
    adds: int = 0
    scale_mults: int = 0

    def count_adds(self, k: int = 1) -> None:
        self.adds += _nonneg(k)

    def count_trivial(self, k: int = 1) -> None:
        self.trivial_mults += _nonneg(k)

    def count_scale(self, k: int = 1) -> None:
        k = _nonneg(k)
        self.scale_mults += k
        self.nontrivial_mults += k

    def count_mults(self, k: int = 1) -> None:
        self.nontrivial_mults += _nonneg(k)

    def __add__(self, other: OpCounter) -> OpCounter:
        if not isinstance(other, OpCounter):
            return NotImplemented
        return OpCounter(
            self.nontrivial_mults + other.nontrivial_mults,
            self.trivial_mults + other.trivial_mults,
            self.adds + other.adds,
            self.scale_mults + other.scale_mults,
        )

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def _nonneg(k: int) -> int:
    if k < 0:
        raise ValueError("operation counts only grow")
    return k


@dataclass
class StagedOps:
    """Per-stage counters for one transform run.

    Auxiliary stages (``interp`` for arithmetic inside fractional-index
    resolution, ``a0`` for the mean quadrature of the AFTs) are reported but
    excluded from :attr:`total`, which covers the transform proper.
    """

    stages: dict[str, OpCounter] = field(default_factory=dict)

    def stage(self, name: str) -> OpCounter:
        return self.stages.setdefault(name, OpCounter())

    @property
    def total(self) -> OpCounter:
        out = OpCounter()
        for name, counter in self.stages.items():
            if name not in AUX_STAGES:
                out = out + counter
        return out

    @property
    def interp(self) -> OpCounter:
        return self.stages.get(INTERP_STAGE, OpCounter())

    def merge(self, other: StagedOps) -> StagedOps:
        out = StagedOps({k: v + OpCounter() for k, v in self.stages.items()})
        for name, counter in other.stages.items():
            out.stages[name] = out.stage(name) + counter
        return out
