from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from sympy.combinatorics import Permutation

from tableau.spec import WreathSpec
from tableau.tableau import Tableau, vertex_images


@dataclass(frozen=True)
class LeafIndexing:
    """Mixed-radix numbering of leaves: path (i_1, ..., i_k) <-> 1..mu_{k+1}."""

    spec: WreathSpec

    def leaf_number(self, path: Sequence[int]) -> int:
        if len(path) != self.spec.depth:
            raise ValueError(f"leaf paths have length {self.spec.depth}")
        number = 0
        for letter, n in zip(path, self.spec.degrees):
            if not 1 <= letter <= n:
                raise ValueError("letter out of range")
            number = number * n + letter - 1
        return number + 1

    def path_of(self, leaf: int) -> Tuple[int, ...]:
        if not 1 <= leaf <= self.spec.leaf_count:
            raise ValueError(f"leaf {leaf} out of range 1..{self.spec.leaf_count}")
        rest = leaf - 1
        letters = []
        for n in reversed(self.spec.degrees):
            rest, letter = divmod(rest, n)
            letters.append(letter + 1)
        return tuple(reversed(letters))

    def block(self, level: int, vertex: int) -> range:
        """Leaves below the 1-based ``vertex`` of ``level`` (level k+1 are the leaves)."""
        if level == self.spec.depth + 1:
            count = self.spec.leaf_count
        else:
            count = self.spec.vertex_count(level)
        if not 1 <= vertex <= count:
            raise ValueError(f"vertex {vertex} out of range at level {level}")
        size = self.spec.leaf_count // count
        start = (vertex - 1) * size + 1
        return range(start, start + size)


def tableau_to_perm(t: Tableau) -> Permutation:
    return Permutation(vertex_images(t)[-1])


def perm_to_tableau(p: Permutation, spec: WreathSpec) -> Tableau:
    if p.size != spec.leaf_count:
        raise ValueError("degree mismatch")
    forms = p.array_form
    levels = []
    for count, n in zip(spec.vertex_counts, spec.degrees):
        size = spec.leaf_count // (count * n)
        row = []
        for u in range(count):
            images = [(forms[(u * n + x) * size] // size) % n for x in range(n)]
            try:
                row.append(Permutation(images))
            except ValueError:
                raise ValueError("not block-structured") from None
        levels.append(tuple(row))
    t = Tableau(spec, tuple(levels))
    if tableau_to_perm(t) != p:
        raise ValueError("not block-structured")
    return t
