"""Reports on a single wreath product: order, elements, lattice, parity, projections."""

from __future__ import annotations

import logging
import random
from typing import Dict, List, Optional

from catalog.families import DEPTH_TWO_FAMILIES, FAMILY_NI, NamedSubgroupSpec, expected_order
from catalog.reports import ReportBuilder, VerificationReport
from catalog.verify import catalog_group, identify
from config import Claims, Settings
from group.chain import Group, derived_subgroup, is_normal, is_subgroup, same_group
from group.enumeration import center, enumerate_normal_subgroups, structure_fingerprint
from perm.notation import format_cycles, parse_cycles
from tableau.spec import WreathSpec
from tableau.tableau import (
    INFINITE_DEPTH,
    Tableau,
    classify,
    depth,
    format_tableau,
    level_parity_vector,
    parse_tableau,
    random_tableau,
    t_multiply,
)
from wreath.leaves import perm_to_tableau, tableau_to_perm
from wreath.products import (
    build_wreath,
    parity_kernel_generators,
    parity_quotient,
    project,
    projection_kernel,
    tableau_group,
    wreath_order,
)

logger = logging.getLogger(__name__)


def parse_element(text: str, spec: WreathSpec) -> Tableau:
    """Tableau literal (``[..];[..]``) or cycle notation on the leaves."""
    if text.strip().startswith("["):
        return parse_tableau(text, spec)
    return perm_to_tableau(parse_cycles(text, spec.leaf_count), spec)


def build_report(spec: WreathSpec, settings: Settings) -> VerificationReport:
    builder = ReportBuilder("build", str(spec), settings.seed)
    W = build_wreath(spec, settings.leaf_limit)
    builder.fact("order/closed-form", wreath_order(spec), W.order)
    builder.note("order", W.order)
    builder.details["degree"] = W.degree
    builder.details["generators"] = W.generator_strings()
    return builder.build()


def element_report(spec: WreathSpec, text: str, settings: Settings) -> VerificationReport:
    builder = ReportBuilder("element", str(spec), settings.seed)
    t = parse_element(text, spec)
    p = tableau_to_perm(t)
    W = build_wreath(spec, settings.leaf_limit)
    if not W.contains(p):
        raise ValueError("element not in group")
    builder.fact("element/roundtrip", format_tableau(t), format_tableau(perm_to_tableau(p, spec)))
    g_depth = depth(t)
    builder.details.update(
        {
            "tableau": format_tableau(t),
            "permutation": format_cycles(p),
            "flags": sorted(classify(t)),
            "depth": None if g_depth == INFINITE_DEPTH else g_depth,
            "parity_vector": list(level_parity_vector(t)),
        }
    )
    return builder.build()


def _catalog_names(spec: WreathSpec) -> Dict[str, Group]:
    if spec.depth != 2 or not spec.is_symmetric:
        return {}
    return {family: catalog_group(family, spec) for family in DEPTH_TWO_FAMILIES}


def lattice_report(spec: WreathSpec, settings: Settings, claims: Claims) -> VerificationReport:
    builder = ReportBuilder("normal-subgroups", str(spec), settings.seed)
    W = build_wreath(spec, settings.leaf_limit)
    lattice = enumerate_normal_subgroups(W, settings.enumeration_limit)
    names = _catalog_names(spec)

    rows: List[List[object]] = []
    for index, member in enumerate(lattice.members):
        fingerprint = structure_fingerprint(member.group, settings.enumeration_limit)
        rows.append(
            [
                index + 1,
                member.order,
                fingerprint.derived_order,
                fingerprint.center_order,
                list(fingerprint.abelianization),
                [parent + 1 for parent in lattice.parents(index)],
                identify(member.group, names) or "",
                " ".join(member.group.generator_strings()),
            ]
        )
    builder.details["table"] = {
        "columns": ["#", "order", "derived", "center", "abelianization", "parents", "name", "generators"],
        "rows": rows,
    }
    builder.details["fingerprint"] = structure_fingerprint(W, settings.enumeration_limit).as_dict()

    expected = claims.lattice_counts.get(str(spec))
    if expected is None:
        builder.note("lattice/count", len(lattice))
    else:
        builder.claim("lattice/count", expected, len(lattice))
    builder.fact("lattice/contains-trivial-and-whole", [1, W.order], [lattice.members[0].order, lattice.members[-1].order])

    if names:
        m = spec.degrees[1]
        builder.claim("derived/equals-AnAt", True, same_group(derived_subgroup(W), names["AnAt"]))
        if m >= 3:
            builder.claim("center/trivial", 1, center(W, settings.enumeration_limit).order)
    return builder.build()


def parity_report(spec: WreathSpec, settings: Settings) -> VerificationReport:
    builder = ReportBuilder("parity", str(spec), settings.seed)
    W = build_wreath(spec, settings.leaf_limit)
    quotient = parity_quotient(W)
    builder.fact("parity/index", 2 ** spec.depth, quotient.index)
    builder.fact("parity/exponent-at-most-2", True, quotient.exponent <= 2)
    builder.fact("parity/kernel-normal", True, quotient.kernel_is_normal)
    builder.note("parity/exponent", quotient.exponent)

    previous: Optional[Group] = None
    for i in range(1, spec.depth + 1):
        with builder.guard(f"parity/N{i}"):
            N = tableau_group(spec, parity_kernel_generators(spec, i))
            builder.fact(f"order/N{i}", expected_order(NamedSubgroupSpec(FAMILY_NI, spec, index=i)), N.order)
            if previous is not None:
                builder.fact(f"chain/N{i}-in-N{i - 1}", True, is_subgroup(N, previous))
            previous = N
    builder.fact("parity/N1-is-derived", True, same_group(quotient.kernel, derived_subgroup(W)))
    return builder.build()


def projection_report(
    spec: WreathSpec,
    to_depth: int,
    settings: Settings,
    element: Optional[str] = None,
    pairs: Optional[int] = None,
) -> VerificationReport:
    builder = ReportBuilder(f"project to depth {to_depth}", str(spec), settings.seed)
    W = build_wreath(spec, settings.leaf_limit)
    target = spec.truncate(to_depth)

    if element is not None:
        t = parse_element(element, spec)
        image = project(t, to_depth)
        builder.details["element"] = format_tableau(t)
        builder.details["image"] = format_tableau(image)
        builder.details["image_permutation"] = format_cycles(tableau_to_perm(image))

    rng = random.Random(settings.seed)
    broken = 0
    composition = 0
    for _ in range(pairs or settings.sampling):
        g = random_tableau(spec, rng)
        h = random_tableau(spec, rng)
        if project(t_multiply(g, h), to_depth) != t_multiply(project(g, to_depth), project(h, to_depth)):
            broken += 1
        for lower in range(1, to_depth):
            if project(project(g, to_depth), lower) != project(g, lower):
                composition += 1
    builder.fact("projection/homomorphism-failures", 0, broken)
    builder.fact("projection/composition-failures", 0, composition)

    kernel = projection_kernel(spec, to_depth)
    builder.fact("projection/kernel-order", W.order // wreath_order(target), kernel.order)
    builder.fact("projection/kernel-normal", True, is_normal(W, kernel))
    builder.note("projection/kernel", f"tableaux trivial on levels 1..{to_depth}")
    return builder.build()
