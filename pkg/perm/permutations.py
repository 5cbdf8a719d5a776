"""Exact arithmetic on finite permutations.

Points are 0-based internally and 1-based in every text format. Products
read left to right: ``compose(p, q)`` applies ``p`` first, then ``q``, which
is also how sympy multiplies permutations. Conjugation and commutators follow
the published conventions ``a^b = b a b^-1`` and ``[a, b] = a b a^-1 b^-1``
evaluated with that same left-to-right product.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from sympy.combinatorics import Permutation


@dataclass(frozen=True)
class CycleType:
    degree: int
    lengths: Tuple[int, ...]

    @property
    def display(self) -> Tuple[int, ...]:
        return tuple(length for length in self.lengths if length >= 2)

    def __str__(self) -> str:
        return "(" + ",".join(str(length) for length in self.display) + ")"


def _check_same_degree(p: Permutation, q: Permutation) -> None:
    if p.size != q.size:
        raise ValueError("degree mismatch")


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    return Permutation(list(range(degree)))


def from_images(images: Sequence[int]) -> Permutation:
    """Build a permutation from its 1-based image list."""
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"images are not a bijection of 1..{len(images)}: {list(images)}")
    return Permutation([image - 1 for image in images])


def images_of(p: Permutation) -> Tuple[int, ...]:
    return tuple(image + 1 for image in p.array_form)


def transposition(i: int, j: int, degree: int) -> Permutation:
    return cycle((i, j), degree)


def cycle(points: Iterable[int], degree: int) -> Permutation:
    zero_based = [point - 1 for point in points]
    if any(not 0 <= point < degree for point in zero_based):
        raise ValueError(f"cycle {list(points)} leaves 1..{degree}")
    if len(set(zero_based)) != len(zero_based):
        raise ValueError(f"repeated point in cycle {list(points)}")
    if len(zero_based) < 2:
        return identity(degree)
    return Permutation([zero_based], size=degree)


def random_permutation(degree: int, rng: random.Random) -> Permutation:
    points = list(range(degree))
    rng.shuffle(points)
    return Permutation(points)


def compose(p: Permutation, q: Permutation) -> Permutation:
    _check_same_degree(p, q)
    return p * q


def inverse(p: Permutation) -> Permutation:
    return ~p


def conjugate(a: Permutation, by: Permutation) -> Permutation:
    _check_same_degree(a, by)
    return by * a * ~by


def commutator(a: Permutation, b: Permutation) -> Permutation:
    _check_same_degree(a, b)
    return a * b * ~a * ~b


def cycle_type(p: Permutation) -> CycleType:
    lengths = sorted((len(c) for c in p.full_cyclic_form), reverse=True)
    return CycleType(degree=p.size, lengths=tuple(lengths))


def rank(p: Permutation) -> int:
    # fixed points count as 1-cycles
    return p.size - p.cycles


def sign(p: Permutation) -> int:
    return -1 if rank(p) % 2 else 1


def is_even(p: Permutation) -> bool:
    return rank(p) % 2 == 0
