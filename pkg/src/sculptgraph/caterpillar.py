"""Caterpillar descriptions: leaf counts along the central path."""

from __future__ import annotations

import operator
from dataclasses import dataclass


@dataclass(frozen=True)
class CaterpillarSpec:
    """Leaf counts ``[l_1, ..., l_m]`` for the ``m`` central-path vertices.

    Path vertex ``j`` together with its leaves forms a star of
    ``K_j = l_j + 1`` qubits.
    """

    leaf_counts: tuple[int, ...]

    def __post_init__(self):
        try:
            counts = tuple(operator.index(c) for c in self.leaf_counts)
        except TypeError:
            raise ValueError(f"leaf counts must be integers, got {self.leaf_counts!r}") from None
        if not counts:
            raise ValueError("a caterpillar needs at least one central-path vertex")
        if any(c < 0 for c in counts):
            raise ValueError(f"leaf counts must be nonnegative, got {counts}")
        object.__setattr__(self, "leaf_counts", counts)

    @classmethod
    def parse(cls, text: str) -> CaterpillarSpec:
        """Parse ``"2,0,4"`` style input."""
        parts = [p.strip() for p in text.split(",")]
        try:
            counts = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"malformed leaf list {text!r}") from None
        return cls(counts)

    @property
    def path_vertices(self) -> int:
        return len(self.leaf_counts)

    @property
    def path_length(self) -> int:
        return len(self.leaf_counts) - 1

    @property
    def star_sizes(self) -> tuple[int, ...]:
        return tuple(c + 1 for c in self.leaf_counts)

    @property
    def n_qubits(self) -> int:
        return sum(self.star_sizes)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.leaf_counts)
