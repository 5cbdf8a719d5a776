"""Finitary even witnesses built from nested commutators.

The element is ``[[y, x], g]`` where ``x`` carries the long cycle at the
chosen vertex, ``y`` the shorter cycle on its first ``n - 2`` children and
``g`` a transposition picked so the outer commutator cancels every state
below the vertex.
"""

from __future__ import annotations

import logging
import random
from itertools import combinations
from typing import Dict, List, Tuple

from sympy.combinatorics import Permutation

from catalog.reports import ReportBuilder, VerificationReport
from group.chain import normal_closure
from perm.notation import format_cycles
from perm.permutations import commutator, cycle, is_even, random_permutation, transposition
from tableau.spec import WreathSpec
from tableau.tableau import (
    INFINITE_DEPTH,
    Tableau,
    classify,
    depth,
    format_tableau,
    n_flag,
    sparse_tableau,
    t_commutator,
)
from wreath.leaves import tableau_to_perm
from wreath.products import DEFAULT_LEAF_LIMIT, build_wreath

logger = logging.getLogger(__name__)

RECOMMENDED_DEGREE = 5


def _subtree(spec: WreathSpec, level: int, vertex: int, child: int, below: int) -> range:
    """0-based level-``below`` positions under ``child`` (1-based) of ``vertex``."""
    n = spec.degree(level)
    top = (vertex - 1) * n + child - 1
    size = spec.vertex_count(below) // spec.vertex_count(level + 1)
    return range(top * size, (top + 1) * size)


def _subtree_trivial(t: Tableau, level: int, vertex: int, child: int) -> bool:
    return all(
        t.levels[below - 1][position].is_Identity
        for below in range(level + 1, t.spec.depth + 1)
        for position in _subtree(t.spec, level, vertex, child, below)
    )


def _outer_transposition(rho: Permutation, quiet: List[int]) -> Tuple[Permutation, Tuple[int, int]]:
    n = rho.size
    images = rho.array_form
    pairs = list(combinations(quiet, 2))
    for t1, t2 in pairs:
        tau = transposition(images[t1 - 1] + 1, images[t2 - 1] + 1, n)
        if not commutator(rho, tau).is_Identity:
            return tau, (t1, t2)
    t1, t2 = pairs[0]
    return transposition(images[t1 - 1] + 1, images[t2 - 1] + 1, n), (t1, t2)


def commutator_witness(
    spec: WreathSpec,
    level: int,
    vertex: int,
    seed: int = 0,
    leaf_limit: int = DEFAULT_LEAF_LIMIT,
) -> Tuple[Tableau, VerificationReport]:
    shape = WreathSpec(spec.degrees)
    n = shape.degree(level)
    if not 1 <= vertex <= shape.vertex_count(level):
        raise ValueError(f"vertex {vertex} out of range at level {level}")
    if n < RECOMMENDED_DEGREE:
        logger.warning("witness at degree %d < %d may collapse", n, RECOMMENDED_DEGREE)

    rng = random.Random(seed)
    x_entries: Dict[Tuple[int, int], Permutation] = {(level, vertex): cycle(range(1, n + 1), n)}
    for child in (n - 1, n):
        for below in range(level + 1, shape.depth + 1):
            for position in _subtree(shape, level, vertex, child, below):
                x_entries[(below, position + 1)] = random_permutation(shape.degree(below), rng)
    x = sparse_tableau(shape, x_entries)
    y = sparse_tableau(shape, {(level, vertex): cycle(range(1, n - 1), n)})

    c = t_commutator(y, x)
    rho = c.entry(level, vertex)
    quiet = [child for child in range(1, n + 1) if _subtree_trivial(c, level, vertex, child)]
    if len(quiet) < 2:
        raise ValueError("construction infeasible")
    tau, pair = _outer_transposition(rho, quiet)
    g = sparse_tableau(shape, {(level, vertex): tau})
    witness = t_commutator(c, g)
    logger.debug("witness at level %d vertex %d uses children %s", level, vertex, pair)

    builder = ReportBuilder(f"witness level {level} vertex {vertex}", str(shape), seed)
    entry = witness.entry(level, vertex)
    stray = [
        [number, position]
        for number, row in enumerate(witness.levels, start=1)
        for position, p in enumerate(row, start=1)
        if not p.is_Identity and (number, position) != (level, vertex)
    ]
    builder.note(
        "witness/outer-transposition",
        {
            "transposition": format_cycles(tau),
            "quiet_pair": list(pair),
            "rule": "images of the first quiet child pair whose transposition does not commute with the inner entry",
        },
    )
    builder.fact("witness/trivial-off-vertex", [], stray)
    builder.fact("witness/even-at-vertex", True, is_even(entry))
    builder.fact(f"witness/type-{n_flag(level)}", True, n_flag(level) in classify(witness))
    if n >= RECOMMENDED_DEGREE:
        builder.claim("witness/nontrivial", True, not witness.is_identity)
    else:
        builder.note("witness/nontrivial", not witness.is_identity)

    with builder.guard("witness/in-closure"):
        W = build_wreath(shape, leaf_limit)
        closure = normal_closure(W, [tableau_to_perm(c)])
        builder.fact("witness/in-closure", True, closure.contains(tableau_to_perm(witness)))

    witness_depth = depth(witness)
    builder.details.update(
        {
            "x": format_tableau(x),
            "y": format_tableau(y),
            "g": format_tableau(g),
            "inner_commutator": format_tableau(c),
            "witness": format_tableau(witness),
            "entry": format_cycles(entry),
            "quiet_children": quiet,
            "pair": list(pair),
            "depth": None if witness_depth == INFINITE_DEPTH else witness_depth,
        }
    )
    return witness, builder.build()
