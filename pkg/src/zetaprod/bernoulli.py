"""Exact Bernoulli numbers (B_1 = -1/2 convention)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable table of B_0..B_max_index as exact rationals."""

    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    @classmethod
    def build(cls, max_index: int) -> "BernoulliTable":
        if max_index < 1:
            raise ValueError("max_index must be positive")
        b = [Fraction(1)]
        for m in range(1, max_index + 1):
            # sum_{j=0}^{m} C(m+1, j) B_j = 0
            acc = sum(comb(m + 1, j) * b[j] for j in range(m))
            b.append(-acc / (m + 1))
        return cls(tuple(b))

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k > self.max_index:
            raise IndexError(f"B_{k} outside table (max index {self.max_index})")
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def as_float(self, k: int) -> float:
        return float(self[k])


BERNOULLI = BernoulliTable.build(128)
