"""Permutation groups with an eagerly built stabilizer chain.

The chain comes from sympy's incremental Schreier-Sims, which is
deterministic for a fixed generator order. Normal closure and derived
subgroup are computed here by plain generator conjugation so that the
result never depends on sympy's product-replacement randomness.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from perm.notation import format_cycles
from perm.permutations import commutator, conjugate, identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilizerChain:
    base: Tuple[int, ...]
    orbits: Tuple[Tuple[int, ...], ...]
    transversals: Tuple[Dict[int, Permutation], ...]
    strong_generators: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        total = 1
        for orbit in self.orbits:
            total *= len(orbit)
        return total


class Group:
    def __init__(self, generators: Sequence[Permutation]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        degree = gens[0].size
        if any(g.size != degree for g in gens):
            raise ValueError("mixed degrees")
        self.degree = degree
        self.generators = gens
        self._pg = PermutationGroup(list(gens))
        self._pg.schreier_sims()
        self.chain = StabilizerChain(
            base=tuple(self._pg.base),
            orbits=tuple(tuple(orbit) for orbit in self._pg.basic_orbits),
            transversals=tuple(dict(t) for t in self._pg.basic_transversals),
            strong_generators=tuple(self._pg.strong_gens),
        )
        self.order = self.chain.order
        self._verify_chain()

    def _verify_chain(self) -> None:
        for orbit, transversal in zip(self.chain.orbits, self.chain.transversals):
            if set(orbit) != set(transversal):
                raise RuntimeError("stabilizer chain transversal does not cover its orbit")
        for g in self.generators + self.chain.strong_generators:
            if not self.contains(g):
                raise RuntimeError(f"generator {format_cycles(g)} fails to sift through the chain")

    @property
    def permutation_group(self) -> PermutationGroup:
        return self._pg

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def sift(self, g: Permutation) -> Permutation:
        """Strip ``g`` through the chain and return the residue."""
        if g.size != self.degree:
            raise ValueError("degree mismatch")
        residue = g
        for point, transversal in zip(self.chain.base, self.chain.transversals):
            witness = transversal.get(residue.array_form[point])
            if witness is None:
                return residue
            residue = residue * ~witness
        return residue

    def contains(self, g: Permutation) -> bool:
        return self.sift(g).is_Identity

    def generator_strings(self) -> List[str]:
        return [format_cycles(g) for g in self.generators]

    def __repr__(self) -> str:
        return f"Group(degree={self.degree}, order={self.order}, generators={len(self.generators)})"


def build_group(generators: Sequence[Permutation]) -> Group:
    group = Group(generators)
    logger.debug("built group of degree %d and order %d", group.degree, group.order)
    return group


def trivial_group(degree: int) -> Group:
    return Group([identity(degree)])


def contains(G: Group, g: Permutation) -> bool:
    return G.contains(g)


def is_subgroup(H: Group, G: Group) -> bool:
    if H.degree != G.degree:
        raise ValueError("degree mismatch")
    return all(G.contains(h) for h in H.generators)


def same_group(G: Group, H: Group) -> bool:
    return G.order == H.order and is_subgroup(H, G)


def _nontrivial_unique(perms: Sequence[Permutation]) -> List[Permutation]:
    seen = set()
    unique: List[Permutation] = []
    for p in perms:
        if p.is_Identity or p in seen:
            continue
        seen.add(p)
        unique.append(p)
    return unique


def normal_closure(G: Group, seeds: Sequence[Permutation]) -> Group:
    for seed in seeds:
        if not G.contains(seed):
            raise ValueError("seed outside ambient group")
    gens = _nontrivial_unique(seeds)
    if not gens:
        return trivial_group(G.degree)

    closure = build_group(gens)
    frontier = list(gens)
    rounds = 0
    while frontier:
        rounds += 1
        fresh: List[Permutation] = []
        for h in frontier:
            for g in G.generators:
                c = conjugate(h, g)
                if closure.contains(c) or c in fresh:
                    continue
                fresh.append(c)
        if fresh:
            gens.extend(fresh)
            closure = build_group(gens)
        frontier = fresh
    logger.debug("normal closure of order %d after %d rounds", closure.order, rounds)
    return closure


def is_normal(G: Group, H: Group) -> bool:
    if not is_subgroup(H, G):
        raise ValueError("not a subgroup of the ambient group")
    for h in H.generators:
        for g in G.generators:
            if not H.contains(conjugate(h, g)):
                return False
    return True


def derived_subgroup(G: Group) -> Group:
    commutators = [commutator(a, b) for a, b in combinations(G.generators, 2)]
    return normal_closure(G, commutators)


def random_element(G: Group, rng: random.Random) -> Permutation:
    return G.permutation_group.coset_unrank(rng.randrange(G.order))
