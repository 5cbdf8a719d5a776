"""Concrete wreath products, truncations and the level-parity quotient."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence

from sympy.combinatorics import Permutation

from group.chain import Group, build_group, is_normal
from perm.permutations import identity
from tableau.spec import WreathSpec
from tableau.tableau import Tableau
from wreath.layers import Layer, layered_generators, layered_order, spec_layers
from wreath.leaves import LeafIndexing, perm_to_tableau, tableau_to_perm

logger = logging.getLogger(__name__)

DEFAULT_LEAF_LIMIT = 10_000


class WreathGroup(Group):
    def __init__(self, spec: WreathSpec, generators: Sequence[Permutation]):
        super().__init__(generators)
        self.spec = spec
        self.indexing = LeafIndexing(spec)

    def __repr__(self) -> str:
        return f"WreathGroup({self.spec}, order={self.order})"


@dataclass(frozen=True)
class ParityQuotient:
    index: int
    exponent: int
    kernel: Group
    kernel_is_normal: bool


def tableau_group(spec: WreathSpec, tableaux: Sequence[Tableau]) -> Group:
    perms = [tableau_to_perm(t) for t in tableaux]
    return build_group(perms or [identity(spec.leaf_count)])


def wreath_order(spec: WreathSpec) -> int:
    return layered_order(spec, spec_layers(spec))


def check_leaf_limit(spec: WreathSpec, leaf_limit: int) -> None:
    if spec.leaf_count > leaf_limit:
        raise ValueError("leaf limit exceeded")


def build_wreath(spec: WreathSpec, leaf_limit: int = DEFAULT_LEAF_LIMIT) -> WreathGroup:
    check_leaf_limit(spec, leaf_limit)
    perms = [tableau_to_perm(t) for t in layered_generators(spec, spec_layers(spec))]
    group = WreathGroup(spec, perms or [identity(spec.leaf_count)])
    expected = wreath_order(spec)
    if group.order != expected:
        raise RuntimeError(f"{spec} has chain order {group.order}, expected {expected}")
    logger.debug("built %s on %d leaves, order %d", spec, spec.leaf_count, group.order)
    return group


def project(g: Tableau, depth: int) -> Tableau:
    """Truncation onto the first ``depth`` levels."""
    if not 1 <= depth < g.spec.depth:
        raise ValueError(f"cannot project depth {g.spec.depth} onto depth {depth}")
    return Tableau(g.spec.truncate(depth), g.levels[:depth])


def project_perm(p: Permutation, spec: WreathSpec, depth: int) -> Permutation:
    return tableau_to_perm(project(perm_to_tableau(p, spec), depth))


def projection_kernel(spec: WreathSpec, depth: int) -> Group:
    """Elements trivial on the first ``depth`` levels."""
    if not 1 <= depth < spec.depth:
        raise ValueError(f"cannot project depth {spec.depth} onto depth {depth}")
    layers = [Layer("E")] * depth + list(spec_layers(spec))[depth:]
    return tableau_group(spec, layered_generators(spec, layers))


def parity_kernel_layers(spec: WreathSpec, from_level: int) -> List[Layer]:
    if not 1 <= from_level <= spec.depth:
        raise ValueError("level out of range")
    return [Layer("E")] * (from_level - 1) + [Layer("At", 1)] * (spec.depth - from_level + 1)


def parity_kernel_generators(spec: WreathSpec, from_level: int) -> List[Tableau]:
    """Generators of N_i: depth at least ``from_level`` and every level product even."""
    return layered_generators(spec, parity_kernel_layers(spec, from_level))


def _order_modulo(g: Permutation, kernel: Group) -> int:
    power = g
    steps = 1
    while not kernel.contains(power):
        power = power * g
        steps += 1
    return steps


def parity_quotient(W: WreathGroup) -> ParityQuotient:
    if not W.spec.is_symmetric:
        raise ValueError("the parity quotient needs all-symmetric levels")
    kernel = tableau_group(W.spec, parity_kernel_generators(W.spec, 1))
    expected = layered_order(W.spec, parity_kernel_layers(W.spec, 1))
    if kernel.order != expected:
        raise RuntimeError(f"parity kernel has order {kernel.order}, expected {expected}")
    exponent = math.lcm(*(_order_modulo(g, kernel) for g in W.generators))
    return ParityQuotient(
        index=W.order // kernel.order,
        exponent=exponent,
        kernel=kernel,
        kernel_is_normal=is_normal(W, kernel),
    )
