"""Operations that walk every element of a group.

All of them are gated by an element-count limit; above it only the
chain-based operations in ``group.chain`` stay available.
"""

from __future__ import annotations

import logging
import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy.combinatorics import Permutation

from group.chain import (
    Group,
    build_group,
    derived_subgroup,
    is_subgroup,
    normal_closure,
    random_element,
    trivial_group,
)
from perm.permutations import conjugate

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 1_000_000


class EnumerationLimitError(RuntimeError):
    def __init__(self, order: int, limit: int):
        super().__init__("enumeration limit exceeded")
        self.order = order
        self.limit = limit


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    members: FrozenSet[Permutation]


@dataclass(frozen=True)
class NormalSubgroup:
    key: FrozenSet[int]
    group: Group

    @property
    def order(self) -> int:
        return self.group.order


@dataclass(frozen=True)
class NormalSubgroupLattice:
    ambient: Group
    classes: Tuple[ConjugacyClass, ...]
    members: Tuple[NormalSubgroup, ...]

    def __len__(self) -> int:
        return len(self.members)

    def orders(self) -> List[int]:
        return [member.order for member in self.members]

    def index_of_key(self, key: FrozenSet[int]) -> int:
        for index, member in enumerate(self.members):
            if member.key == key:
                return index
        raise KeyError(sorted(key))

    def includes(self, small: int, big: int) -> bool:
        return self.members[small].key <= self.members[big].key

    def meet(self, a: int, b: int) -> int:
        return self.index_of_key(self.members[a].key & self.members[b].key)

    def join(self, a: int, b: int) -> int:
        union = self.members[a].key | self.members[b].key
        candidates = [i for i, member in enumerate(self.members) if union <= member.key]
        return min(candidates, key=lambda i: self.members[i].order)

    def parents(self, index: int) -> List[int]:
        above = [
            i for i in range(len(self.members)) if i != index and self.includes(index, i)
        ]
        return [
            i for i in above
            if not any(j != i and self.includes(j, i) for j in above)
        ]

    def children(self, index: int) -> List[int]:
        return [i for i in range(len(self.members)) if index in self.parents(i)]

    def locate(self, H: Group) -> Optional[int]:
        """Index of the member equal to ``H``, if any."""
        for index, member in enumerate(self.members):
            if member.order == H.order and is_subgroup(H, member.group):
                return index
        return None


@dataclass(frozen=True)
class SamplingEvidence:
    samples: Tuple[Permutation, ...]
    closures: Tuple[Group, ...]
    missing: Tuple[Permutation, ...]
    smallest: Group
    common: Optional[Group]


@dataclass(frozen=True)
class StructureFingerprint:
    order: int
    derived_order: int
    center_order: int
    abelianization: Tuple[int, ...]
    exponent_of_abelianization: int

    def as_dict(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "derived_order": self.derived_order,
            "center_order": self.center_order,
            "abelianization": list(self.abelianization),
            "exponent_of_abelianization": self.exponent_of_abelianization,
        }


def _check_limit(G: Group, limit: int) -> None:
    if G.order > limit:
        raise EnumerationLimitError(G.order, limit)


def elements(G: Group, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[Permutation]:
    _check_limit(G, limit)
    return list(G.permutation_group.generate_schreier_sims(af=False))


def group_from_elements(items: Sequence[Permutation], degree: int) -> Group:
    """Smallest group containing ``items``, grown one missing element at a time."""
    gens: List[Permutation] = []
    group = trivial_group(degree)
    for x in items:
        if not group.contains(x):
            gens.append(x)
            group = build_group(gens)
    return group


def center(G: Group, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Group:
    central = [
        x for x in elements(G, limit)
        if all(x * g == g * x for g in G.generators)
    ]
    return group_from_elements(central, G.degree)


def conjugacy_classes(G: Group, limit: int = DEFAULT_ENUMERATION_LIMIT) -> List[ConjugacyClass]:
    seen = set()
    classes: List[ConjugacyClass] = []
    everything = elements(G, limit)
    everything.sort(key=lambda x: (not x.is_Identity,))
    for x in everything:
        if x in seen:
            continue
        members = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in G.generators:
                z = conjugate(y, g)
                if z not in members:
                    members.add(z)
                    queue.append(z)
        seen |= members
        classes.append(ConjugacyClass(representative=x, size=len(members), members=frozenset(members)))
    logger.debug("%d conjugacy classes in a group of order %d", len(classes), G.order)
    return classes


def _class_key(group: Group, classes: Sequence[ConjugacyClass]) -> FrozenSet[int]:
    return frozenset(i for i, c in enumerate(classes) if group.contains(c.representative))


def enumerate_normal_subgroups(
    G: Group, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> NormalSubgroupLattice:
    classes = conjugacy_classes(G, limit)
    found: Dict[FrozenSet[int], Group] = {}

    trivial = trivial_group(G.degree)
    found[_class_key(trivial, classes)] = trivial

    closures: List[Tuple[FrozenSet[int], Group]] = []
    for c in classes[1:]:
        closure = normal_closure(G, [c.representative])
        key = _class_key(closure, classes)
        found.setdefault(key, closure)
        closures.append((key, found[key]))

    # every normal subgroup is the join of the class closures it contains
    queue = deque(found.keys())
    while queue:
        key = queue.popleft()
        for closure_key, closure in closures:
            if closure_key <= key:
                continue
            join = build_group(found[key].generators + closure.generators)
            join_key = _class_key(join, classes)
            if join_key not in found:
                found[join_key] = join
                queue.append(join_key)

    members = sorted(
        (NormalSubgroup(key=key, group=group) for key, group in found.items()),
        key=lambda member: (member.order, sorted(member.key)),
    )
    logger.info("group of order %d has %d normal subgroups", G.order, len(members))
    return NormalSubgroupLattice(ambient=G, classes=tuple(classes), members=tuple(members))


def minimal_normal_subgroups(lattice: NormalSubgroupLattice) -> List[int]:
    return [
        i for i, member in enumerate(lattice.members)
        if member.order > 1
        and all(lattice.members[j].order == 1 for j in lattice.children(i))
    ]


def monolith(
    G: Group,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    lattice: Optional[NormalSubgroupLattice] = None,
) -> Optional[Group]:
    """The unique minimal normal subgroup, or None when G is not monolithic."""
    lattice = lattice or enumerate_normal_subgroups(G, limit)
    minimal = minimal_normal_subgroups(lattice)
    if len(minimal) != 1:
        return None
    return lattice.members[minimal[0]].group


def monolith_by_sampling(
    G: Group,
    count: int,
    rng: random.Random,
    probe: Sequence[Permutation],
) -> SamplingEvidence:
    """Normal closures of random nontrivial elements, checked against ``probe``.

    ``common`` is the smallest closure when it lies in every other closure,
    which makes it the intersection of all sampled closures.
    """
    if count < 1:
        raise ValueError("sample count must be positive")
    if G.is_trivial:
        raise ValueError("sampling needs a nontrivial group")
    samples: List[Permutation] = []
    closures: List[Group] = []
    missing: List[Permutation] = []
    while len(samples) < count:
        x = random_element(G, rng)
        if x.is_Identity:
            continue
        closure = normal_closure(G, [x])
        samples.append(x)
        closures.append(closure)
        if not all(closure.contains(p) for p in probe):
            missing.append(x)
    smallest = min(closures, key=lambda closure: closure.order)
    common = smallest if all(is_subgroup(smallest, c) for c in closures) else None
    if missing:
        logger.warning("%d of %d sampled closures miss the probe", len(missing), count)
    return SamplingEvidence(
        samples=tuple(samples),
        closures=tuple(closures),
        missing=tuple(missing),
        smallest=smallest,
        common=common,
    )


def intersect(
    G: Group, H: Group, ambient: Group, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Group:
    _check_limit(ambient, limit)
    if not (is_subgroup(G, ambient) and is_subgroup(H, ambient)):
        raise ValueError("not a subgroup of the ambient group")
    small, big = (G, H) if G.order <= H.order else (H, G)
    common = [x for x in elements(small, limit) if big.contains(x)]
    return group_from_elements(common, ambient.degree)


def invariant_factors(primary: Sequence[int]) -> Tuple[int, ...]:
    """Fold prime-power components into invariant factors d1 | d2 | ..."""
    by_prime: Dict[int, List[int]] = {}
    for q in primary:
        if q <= 1:
            continue
        primes = factorint(q)
        if len(primes) != 1:
            raise ValueError(f"{q} is not a prime power")
        p = next(iter(primes))
        by_prime.setdefault(p, []).append(q)
    width = max((len(powers) for powers in by_prime.values()), default=0)
    factors = [1] * width
    for powers in by_prime.values():
        for slot, q in enumerate(sorted(powers, reverse=True)):
            factors[width - 1 - slot] *= q
    return tuple(factors)


def structure_fingerprint(G: Group, limit: int = DEFAULT_ENUMERATION_LIMIT) -> StructureFingerprint:
    derived = derived_subgroup(G)
    invariants = invariant_factors([int(x) for x in G.permutation_group.abelian_invariants()])
    return StructureFingerprint(
        order=G.order,
        derived_order=derived.order,
        center_order=center(G, limit).order,
        abelianization=invariants,
        exponent_of_abelianization=math.lcm(*invariants) if invariants else 1,
    )
