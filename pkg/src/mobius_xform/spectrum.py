from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class Spectrum:
    """Transform-domain values V_0..V_{N-1}; the forward transform carries 1/N."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(x) for x in self.values))
        if len(self.values) < 1:
            raise DomainError("empty spectrum", module="spectrum")

    @property
    def N(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def to_array(self) -> np.ndarray:
        return np.array(self.values)
