from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

LEVEL_RE = re.compile(r"\s*([SA])\s*(\d+)\s*")
SYMMETRIC = "S"
ALTERNATING = "A"


@dataclass(frozen=True)
class WreathSpec:
    """Level degrees (n_1, ..., n_k) of an iterated wreath product, root first.

    ``kinds`` marks each level as symmetric ("S") or alternating ("A"); it
    only matters when the shape is turned into a concrete group.
    """

    degrees: Tuple[int, ...]
    kinds: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        degrees = tuple(int(n) for n in self.degrees)
        kinds = tuple(self.kinds) or (SYMMETRIC,) * len(degrees)
        if not degrees:
            raise ValueError("a wreath spec needs at least one level")
        if any(n < 2 for n in degrees):
            raise ValueError(f"level degrees must be at least 2, got {degrees}")
        if len(kinds) != len(degrees) or any(k not in (SYMMETRIC, ALTERNATING) for k in kinds):
            raise ValueError(f"level kinds {kinds} do not match degrees {degrees}")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "kinds", kinds)

    @property
    def depth(self) -> int:
        return len(self.degrees)

    @property
    def vertex_counts(self) -> Tuple[int, ...]:
        """mu_1, ..., mu_k: vertices carrying a permutation at each level."""
        counts = [1]
        for n in self.degrees[:-1]:
            counts.append(counts[-1] * n)
        return tuple(counts)

    @property
    def leaf_count(self) -> int:
        return self.vertex_counts[-1] * self.degrees[-1]

    def degree(self, level: int) -> int:
        return self.degrees[self._index(level)]

    def vertex_count(self, level: int) -> int:
        return self.vertex_counts[self._index(level)]

    def kind(self, level: int) -> str:
        return self.kinds[self._index(level)]

    def _index(self, level: int) -> int:
        if not 1 <= level <= self.depth:
            raise ValueError("level out of range")
        return level - 1

    def truncate(self, depth: int) -> "WreathSpec":
        if not 1 <= depth <= self.depth:
            raise ValueError(f"cannot truncate depth {self.depth} to {depth}")
        return WreathSpec(self.degrees[:depth], self.kinds[:depth])

    def subtree(self, level: int) -> Optional["WreathSpec"]:
        """Spec of the subtree hanging below a level-``level`` vertex."""
        if level >= self.depth:
            return None
        return WreathSpec(self.degrees[level:], self.kinds[level:])

    def with_kinds(self, kinds: Sequence[str]) -> "WreathSpec":
        return WreathSpec(self.degrees, tuple(kinds))

    @property
    def is_symmetric(self) -> bool:
        return all(k == SYMMETRIC for k in self.kinds)

    def __str__(self) -> str:
        return "*".join(f"{k}{n}" for k, n in zip(self.kinds, self.degrees))


def parse_spec(text: str) -> WreathSpec:
    """Parse ``S3*S3`` style specs; the leftmost level is the root."""
    parts = text.split("*")
    kinds = []
    degrees = []
    for part in parts:
        match = LEVEL_RE.fullmatch(part)
        if not match:
            raise ValueError(f"bad wreath spec {text!r}: expected (S|A)<int>('*'(S|A)<int>)*")
        kinds.append(match.group(1))
        degrees.append(int(match.group(2)))
    return WreathSpec(tuple(degrees), tuple(kinds))


def symmetric_spec(*degrees: int) -> WreathSpec:
    return WreathSpec(tuple(degrees))
