"""Kaloujnine tableaux: one permutation per tree vertex, level by level.

Level ``l`` (1-based, root is level 1) holds ``mu_l`` permutations of degree
``n_l``, one for each vertex whose children it permutes. Vertices are
numbered lexicographically by their path from the root, so the children of
vertex ``u`` at level ``l`` are ``u * n_l + x`` at level ``l + 1``.

Products follow the wreath recursion read left to right: the entry of
``g * h`` at vertex ``v`` is ``g_v`` followed by ``h`` at the image of ``v``
under ``g``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from perm.notation import format_cycles, parse_cycles
from perm.permutations import identity, random_permutation, rank
from tableau.spec import WreathSpec

LEVEL_LITERAL_RE = re.compile(r"\s*\[(.*)\]\s*")

INFINITE_DEPTH = math.inf

FLAG_A_TILDE = "At"
FLAG_A_ZERO = "A0"
FLAG_T_TILDE_EVEN = "Tt1"
FLAG_T_TILDE_ODD = "Tt2"
DEPTH_TWO_FLAGS = (FLAG_A_TILDE, FLAG_A_ZERO, FLAG_T_TILDE_EVEN, FLAG_T_TILDE_ODD)


def n_flag(i: int) -> str:
    return f"N{i}"


@dataclass(frozen=True)
class Tableau:
    spec: WreathSpec
    levels: Tuple[Tuple[Permutation, ...], ...]

    def __post_init__(self) -> None:
        levels = tuple(tuple(level) for level in self.levels)
        if len(levels) != self.spec.depth:
            raise ValueError(f"expected {self.spec.depth} levels, got {len(levels)}")
        for number, (level, count, degree) in enumerate(
            zip(levels, self.spec.vertex_counts, self.spec.degrees), start=1
        ):
            if len(level) != count:
                raise ValueError(f"level {number} needs {count} entries, got {len(level)}")
            if any(p.size != degree for p in level):
                raise ValueError(f"level {number} entries must have degree {degree}")
        object.__setattr__(self, "levels", levels)

    def entry(self, level: int, vertex: int) -> Permutation:
        """Permutation at a 1-based (level, vertex) position."""
        return self.levels[level - 1][vertex - 1]

    @property
    def is_identity(self) -> bool:
        return all(p.is_Identity for level in self.levels for p in level)

    def __str__(self) -> str:
        return format_tableau(self)


def _check_same_shape(g: Tableau, h: Tableau) -> None:
    if g.spec.degrees != h.spec.degrees:
        raise ValueError("spec mismatch")


def identity_tableau(spec: WreathSpec) -> Tableau:
    return Tableau(
        spec,
        tuple(
            tuple(identity(n) for _ in range(count))
            for n, count in zip(spec.degrees, spec.vertex_counts)
        ),
    )


def sparse_tableau(spec: WreathSpec, entries: Dict[Tuple[int, int], Permutation]) -> Tableau:
    """Tableau that is the identity except at the given 1-based (level, vertex) keys."""
    levels = [list(level) for level in identity_tableau(spec).levels]
    for (level, vertex), p in entries.items():
        if not 1 <= level <= spec.depth:
            raise ValueError("level out of range")
        if not 1 <= vertex <= spec.vertex_count(level):
            raise ValueError(f"vertex {vertex} out of range at level {level}")
        levels[level - 1][vertex - 1] = p
    return Tableau(spec, tuple(tuple(level) for level in levels))


def random_tableau(spec: WreathSpec, rng: random.Random) -> Tableau:
    return Tableau(
        spec,
        tuple(
            tuple(random_permutation(n, rng) for _ in range(count))
            for n, count in zip(spec.degrees, spec.vertex_counts)
        ),
    )


def vertex_images(g: Tableau) -> List[List[int]]:
    """0-based images of the vertices of every level; the last row is the leaves."""
    images: List[List[int]] = [[0]]
    for level, n in zip(g.levels, g.spec.degrees):
        above = images[-1]
        row = [0] * (len(above) * n)
        for u, p in enumerate(level):
            target = above[u] * n
            forms = p.array_form
            for x in range(n):
                row[u * n + x] = target + forms[x]
        images.append(row)
    return images


def t_multiply(g: Tableau, h: Tableau) -> Tableau:
    _check_same_shape(g, h)
    images = vertex_images(g)
    return Tableau(
        g.spec,
        tuple(
            tuple(p * h_level[images[index][u]] for u, p in enumerate(g_level))
            for index, (g_level, h_level) in enumerate(zip(g.levels, h.levels))
        ),
    )


def t_inverse(g: Tableau) -> Tableau:
    images = vertex_images(g)
    levels: List[Tuple[Permutation, ...]] = []
    for index, level in enumerate(g.levels):
        row: List[Permutation] = [p for p in level]
        for u, p in enumerate(level):
            row[images[index][u]] = ~p
        levels.append(tuple(row))
    return Tableau(g.spec, tuple(levels))


def t_conjugate(a: Tableau, by: Tableau) -> Tableau:
    return t_multiply(t_multiply(by, a), t_inverse(by))


def t_commutator(a: Tableau, b: Tableau) -> Tableau:
    return t_multiply(t_multiply(a, b), t_multiply(t_inverse(a), t_inverse(b)))


def t_act(g: Tableau, word: Sequence[int]) -> Tuple[int, ...]:
    """Image of a 1-based word (one letter per level, possibly shorter than the depth)."""
    if len(word) > g.spec.depth:
        raise ValueError(f"word of length {len(word)} is longer than depth {g.spec.depth}")
    vertex = 0
    image: List[int] = []
    for level, (letter, n) in enumerate(zip(word, g.spec.degrees)):
        if not 1 <= letter <= n:
            raise ValueError("letter out of range")
        image.append(g.levels[level][vertex].array_form[letter - 1] + 1)
        vertex = vertex * n + letter - 1
    return tuple(image)


def depth(g: Tableau) -> Union[int, float]:
    for number, level in enumerate(g.levels, start=1):
        if any(not p.is_Identity for p in level):
            return number
    return INFINITE_DEPTH


def rank_sum(g: Tableau, level: int) -> int:
    g.spec.degree(level)
    return sum(rank(p) for p in g.levels[level - 1])


def level_parity_vector(g: Tableau) -> Tuple[int, ...]:
    return tuple(rank_sum(g, level) % 2 for level in range(1, g.spec.depth + 1))


def _blocks(g: Tableau, level: int, block_level: int) -> List[List[Permutation]]:
    if not 1 <= block_level <= level:
        raise ValueError(f"block level {block_level} must lie in 1..{level}")
    size = g.spec.vertex_count(level) // g.spec.vertex_count(block_level)
    entries = g.levels[level - 1]
    return [list(entries[start:start + size]) for start in range(0, len(entries), size)]


def block_parities(g: Tableau, level: int, block_level: int = 1) -> Tuple[int, ...]:
    """Rank-sum parity of the level-``level`` entries under each level-``block_level`` vertex."""
    return tuple(sum(rank(p) for p in block) % 2 for block in _blocks(g, level, block_level))


def level_even(g: Tableau, level: int, block_level: int = 1) -> bool:
    return not any(block_parities(g, level, block_level))


def uniform_parity(g: Tableau, level: int, block_level: int = 1) -> bool:
    """Whether every block holds only even or only odd entries."""
    return all(
        len({rank(p) % 2 for p in block}) <= 1
        for block in _blocks(g, level, block_level)
    )


def classify(g: Tableau) -> FrozenSet[str]:
    flags = set()
    if g.spec.depth == 2:
        top = g.levels[0][0]
        if top.is_Identity:
            parities = [rank(p) % 2 for p in g.levels[1]]
            if sum(parities) % 2 == 0:
                flags.update((FLAG_A_TILDE, FLAG_A_ZERO))
            if not any(parities):
                flags.add(FLAG_T_TILDE_EVEN)
            if all(parities):
                flags.add(FLAG_T_TILDE_ODD)
    if not any(level_parity_vector(g)):
        g_depth = depth(g)
        flags.update(n_flag(i) for i in range(1, g.spec.depth + 1) if g_depth >= i)
    return frozenset(flags)


def has_type(g: Tableau, flag: str) -> bool:
    if flag in DEPTH_TWO_FLAGS and g.spec.depth != 2:
        raise ValueError("wrong spec depth")
    return flag in classify(g)


def _split_entries(body: str) -> List[str]:
    entries: List[str] = []
    nesting = 0
    current = ""
    for char in body:
        if char == "(":
            nesting += 1
        elif char == ")":
            nesting -= 1
            if nesting < 0:
                raise ValueError(f"unbalanced parentheses in {body!r}")
        if char == "," and nesting == 0:
            entries.append(current)
            current = ""
        else:
            current += char
    if nesting:
        raise ValueError(f"unbalanced parentheses in {body!r}")
    entries.append(current)
    return [entry.strip() for entry in entries]


def parse_tableau(text: str, spec: WreathSpec) -> Tableau:
    """Parse ``[()];[(1,2),(1,2),()]`` style literals, root level first."""
    chunks = text.split(";")
    if len(chunks) != spec.depth:
        raise ValueError(f"expected {spec.depth} levels in {text!r}, got {len(chunks)}")
    levels: List[Tuple[Permutation, ...]] = []
    for number, chunk in enumerate(chunks, start=1):
        match = LEVEL_LITERAL_RE.fullmatch(chunk)
        if not match:
            raise ValueError(f"level {number} must be bracketed: {chunk!r}")
        entries = _split_entries(match.group(1))
        expected = spec.vertex_count(number)
        if len(entries) != expected:
            raise ValueError(f"level {number} needs {expected} entries, got {len(entries)}")
        levels.append(tuple(parse_cycles(entry, spec.degree(number)) for entry in entries))
    return Tableau(spec, tuple(levels))


def format_tableau(g: Tableau) -> str:
    return ";".join(
        "[" + ",".join(format_cycles(p) for p in level) + "]" for level in g.levels
    )
