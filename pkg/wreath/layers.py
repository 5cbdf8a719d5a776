"""Subgroups of an iterated wreath product described one level at a time.

Each level gets a layer kind:

  E   every entry is the identity
  A   every entry is even
  S   no condition
  At  the entries under each level-``block_level`` vertex have an even rank sum
  Tt  the entries under each level-``block_level`` vertex are all even or all odd

Every one of these conditions is preserved by conjugation with arbitrary
tableaux acting on the levels above, so a choice of layers always describes a
subgroup whose order is the product of the layer orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.combinatorics import Permutation

from perm.permutations import cycle, is_even, transposition
from tableau.spec import WreathSpec
from tableau.tableau import (
    Tableau,
    level_even,
    sparse_tableau,
    uniform_parity,
)

LAYER_KINDS = ("E", "A", "S", "At", "Tt")


@dataclass(frozen=True)
class Layer:
    kind: str
    block_level: int = 1

    def __post_init__(self) -> None:
        if self.kind not in LAYER_KINDS:
            raise ValueError(f"unknown layer kind {self.kind!r}")
        if self.block_level < 1:
            raise ValueError("block level must be positive")

    def label(self) -> str:
        if self.kind in ("At", "Tt"):
            return f"{self.kind}@{self.block_level}"
        return self.kind


E = Layer("E")
A = Layer("A")
S = Layer("S")


def symmetric_generators(n: int) -> List[Permutation]:
    """Long cycle then (1,2), the order used in the published generator lists."""
    if n == 2:
        return [transposition(1, 2, 2)]
    return [cycle(range(1, n + 1), n), transposition(1, 2, n)]


def alternating_generators(n: int) -> List[Permutation]:
    return [cycle((1, 2, i), n) for i in range(3, n + 1)]


def _blocks(spec: WreathSpec, level: int, layer: Layer) -> List[range]:
    if layer.block_level > level:
        raise ValueError(f"block level {layer.block_level} lies below level {level}")
    count = spec.vertex_count(level)
    size = count // spec.vertex_count(layer.block_level)
    return [range(start, start + size) for start in range(1, count + 1, size)]


def layer_generators(spec: WreathSpec, level: int, layer: Layer) -> List[Tableau]:
    n = spec.degree(level)
    count = spec.vertex_count(level)
    odd = transposition(1, 2, n)
    gens: List[Tableau] = []

    if layer.kind == "E":
        return gens
    if layer.kind == "S":
        for vertex in range(1, count + 1):
            gens.extend(sparse_tableau(spec, {(level, vertex): p}) for p in symmetric_generators(n))
        return gens

    for vertex in range(1, count + 1):
        gens.extend(sparse_tableau(spec, {(level, vertex): p}) for p in alternating_generators(n))
    if layer.kind == "At":
        for block in _blocks(spec, level, layer):
            first = block[0]
            gens.extend(
                sparse_tableau(spec, {(level, first): odd, (level, other): odd})
                for other in block[1:]
            )
    elif layer.kind == "Tt":
        for block in _blocks(spec, level, layer):
            gens.append(sparse_tableau(spec, {(level, vertex): odd for vertex in block}))
    return gens


def layer_order(spec: WreathSpec, level: int, layer: Layer) -> int:
    full = math.factorial(spec.degree(level))
    count = spec.vertex_count(level)
    if layer.kind == "E":
        return 1
    if layer.kind == "S":
        return full ** count
    if layer.kind == "A":
        return (full // 2) ** count
    blocks = len(_blocks(spec, level, layer))
    if layer.kind == "At":
        return full ** count // 2 ** blocks
    return (full // 2) ** count * 2 ** blocks


def layer_holds(t: Tableau, level: int, layer: Layer) -> bool:
    entries = t.levels[level - 1]
    if layer.kind == "E":
        return all(p.is_Identity for p in entries)
    if layer.kind == "A":
        return all(is_even(p) for p in entries)
    if layer.kind == "S":
        return True
    if layer.kind == "At":
        return level_even(t, level, layer.block_level)
    return uniform_parity(t, level, layer.block_level)


def _check_layers(spec: WreathSpec, layers: Sequence[Layer]) -> None:
    if len(layers) != spec.depth:
        raise ValueError(f"need {spec.depth} layers, got {len(layers)}")


def layered_generators(spec: WreathSpec, layers: Sequence[Layer]) -> List[Tableau]:
    """Generators listed from the deepest level up to the root."""
    _check_layers(spec, layers)
    gens: List[Tableau] = []
    for level in range(spec.depth, 0, -1):
        gens.extend(layer_generators(spec, level, layers[level - 1]))
    return gens


def layered_order(spec: WreathSpec, layers: Sequence[Layer]) -> int:
    _check_layers(spec, layers)
    return math.prod(
        layer_order(spec, level, layer) for level, layer in enumerate(layers, start=1)
    )


def in_layers(t: Tableau, layers: Sequence[Layer]) -> bool:
    _check_layers(t.spec, layers)
    return all(layer_holds(t, level, layer) for level, layer in enumerate(layers, start=1))


def spec_layers(spec: WreathSpec) -> Tuple[Layer, ...]:
    """Layers of the whole wreath product described by ``spec``."""
    return tuple(Layer(kind) for kind in spec.kinds)
