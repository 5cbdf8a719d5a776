"""Catalog verification against a concrete depth-2 ambient wreath product."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from catalog.families import expected_order, generators_of, named
from catalog.reports import ReportBuilder, VerificationReport
from config import Claims, Settings
from group.chain import Group, is_normal, is_subgroup, normal_closure, same_group
from group.enumeration import elements, enumerate_normal_subgroups, group_from_elements
from perm.permutations import conjugate, cycle, transposition
from tableau.spec import WreathSpec
from tableau.tableau import sparse_tableau
from wreath.leaves import tableau_to_perm
from wreath.products import WreathGroup, build_wreath, check_leaf_limit, tableau_group

logger = logging.getLogger(__name__)

AMBIENT_KINDS: Dict[str, Tuple[str, str]] = {
    "SnSm": ("S", "S"),
    "AnSm": ("A", "S"),
    "AnSn": ("A", "S"),
    "SnAn": ("S", "A"),
}

CATALOGS: Dict[str, Tuple[str, ...]] = {
    "SnSm": ("EA", "EAt", "Tt", "ES", "AnAt", "SnAt", "AnS", "DiagKernel"),
    "AnSm": ("EAt", "Tt", "ES", "AnAt", "AnE"),
    "AnSn": ("EAt", "Tt", "ES", "AnAt"),
    "SnAn": ("EA", "AnA"),
}

INCLUSIONS = (
    ("EA", "EAt"),
    ("EA", "Tt"),
    ("EA", "ES"),
    ("EAt", "ES"),
    ("EAt", "AnAt"),
    ("AnAt", "SnAt"),
    ("AnAt", "AnS"),
    ("AnAt", "DiagKernel"),
    ("ES", "AnS"),
)


def default_ambient(spec: WreathSpec) -> str:
    if spec.depth != 2:
        raise ValueError(f"catalog needs a depth-2 spec, got depth {spec.depth}")
    n, m = spec.degrees
    kinds = spec.kinds
    if kinds == ("S", "S"):
        return "SnSm"
    if kinds == ("A", "S"):
        return "AnSn" if n == m else "AnSm"
    if kinds == ("S", "A") and n == m:
        return "SnAn"
    raise ValueError("invalid pairing")


def ambient_spec(ambient: str, spec: WreathSpec) -> WreathSpec:
    if spec.depth != 2 or ambient not in AMBIENT_KINDS:
        raise ValueError("invalid pairing")
    if ambient in ("AnSn", "SnAn") and spec.degrees[0] != spec.degrees[1]:
        raise ValueError("invalid pairing")
    return WreathSpec(spec.degrees, AMBIENT_KINDS[ambient])


def catalog_group(family: str, shape: WreathSpec) -> Group:
    return tableau_group(shape, generators_of(named(family, shape)))


def identify(H: Group, groups: Dict[str, Group]) -> Optional[str]:
    for family, G in groups.items():
        if same_group(G, H):
            return family
    return None


def closure_claims(builder: ReportBuilder, W: WreathGroup, groups: Dict[str, Group]) -> None:
    """Normal closures of the single elements a~, b~, c~ against e wr A~_m."""
    shape = WreathSpec(W.spec.degrees)
    n, m = shape.degrees
    seeds = {
        "a": sparse_tableau(shape, {(2, 1): transposition(1, 2, m), (2, 2): transposition(1, 2, m)}),
        "b": sparse_tableau(shape, {(2, 1): transposition(1, 2, m), (2, n): transposition(m - 1, m, m)}),
    }
    if m >= 3:
        seeds["c"] = sparse_tableau(shape, {(2, 1): cycle((1, 2, 3), m)})
    eat = groups["EAt"]
    for label, seed in seeds.items():
        with builder.guard(f"closure/{label}"):
            closure = normal_closure(W, [tableau_to_perm(seed)])
            builder.claim(
                f"closure/{label}",
                {"equals": "EAt", "order": eat.order},
                {"equals": identify(closure, groups), "order": closure.order},
            )


def _containment(builder: ReportBuilder, groups: Dict[str, Group]) -> None:
    families = list(groups)
    matrix = [[int(is_subgroup(groups[a], groups[b])) for b in families] for a in families]
    builder.details["containment"] = {"members": families, "matrix": matrix}
    symmetric = [
        [a, b]
        for i, a in enumerate(families)
        for j, b in enumerate(families)
        if i < j and matrix[i][j] and matrix[j][i]
    ]
    builder.fact("containment/antisymmetric", [], symmetric)
    for small, big in INCLUSIONS:
        if small in groups and big in groups:
            builder.claim(f"inclusion/{small}<{big}", True, bool(matrix[families.index(small)][families.index(big)]))


def _exhaustive(
    builder: ReportBuilder,
    W: WreathGroup,
    ambient: str,
    groups: Dict[str, Group],
    settings: Settings,
    claims: Claims,
) -> None:
    if W.order > settings.enumeration_limit:
        builder.note("lattice/exhaustive", f"skipped: order {W.order} above enumeration limit")
        logger.warning("skipping exhaustive lattice for order %d", W.order)
        return
    lattice = enumerate_normal_subgroups(W, settings.enumeration_limit)
    builder.claim("lattice/count", claims.catalog_total_counts.get(ambient), len(lattice))

    normal = {family: G for family, G in groups.items() if is_normal(W, G)}
    located = {family: lattice.locate(G) for family, G in normal.items()}
    matched = set(index for index in located.values() if index is not None)
    unmatched = [
        member.order
        for index, member in enumerate(lattice.members)
        if index not in matched and 1 < member.order < W.order
    ]
    builder.claim("lattice/catalog-covers-lattice", [], unmatched)
    builder.fact(
        "lattice/catalog-members-found",
        [],
        sorted(family for family, index in located.items() if index is None),
    )

    if ambient == "SnSm":
        index_two = sorted(
            family for family, index in located.items()
            if index is not None and lattice.members[index].order * 2 == W.order
        )
        lattice_index_two = sum(1 for member in lattice.members if member.order * 2 == W.order)
        builder.claim("lattice/index-2", ["AnS", "DiagKernel", "SnAt"], index_two)
        builder.claim("lattice/index-2-count", len(index_two), lattice_index_two)


def verify_catalog(
    ambient: str, spec: WreathSpec, settings: Settings, claims: Claims
) -> VerificationReport:
    full = ambient_spec(ambient, spec)
    check_leaf_limit(full, settings.leaf_limit)
    shape = WreathSpec(full.degrees)
    builder = ReportBuilder(f"catalog {ambient}", str(full), settings.seed)

    W = build_wreath(full, settings.leaf_limit)
    groups: Dict[str, Group] = {}
    for family in CATALOGS[ambient]:
        with builder.guard(f"catalog/{family}"):
            name = named(family, shape)
            H = catalog_group(family, shape)
            groups[family] = H
            builder.fact(f"order/{family}", expected_order(name), H.order)
            inside = is_subgroup(H, W)
            builder.claim(f"subgroup/{family}", True, inside)
            if inside:
                builder.claim(f"normal/{family}", True, is_normal(W, H))

    distinct: List[str] = []
    for family, H in groups.items():
        if not any(same_group(groups[other], H) for other in distinct):
            distinct.append(family)
    builder.claim("catalog/distinct", list(groups), distinct)
    normal_distinct = [f for f in distinct if is_subgroup(groups[f], W) and is_normal(W, groups[f])]
    builder.claim("count/proper", claims.catalog_proper_counts.get(ambient), len(normal_distinct))

    with builder.guard("containment"):
        eat = groups.get("EAt") or catalog_group("EAt", shape)
        ea = groups.get("EA") or catalog_group("EA", shape)
        for family, H in groups.items():
            if H.is_trivial:
                continue
            if ambient == "SnSm":
                builder.claim(f"contains-EAt/{family}", True, is_subgroup(eat, H))
            builder.claim(f"contains-EA/{family}", True, is_subgroup(ea, H))
        _containment(builder, groups)

    if ambient == "SnSm":
        with builder.guard("closure"):
            closure_claims(builder, W, {**groups, "EAt": eat, "EA": ea})

    with builder.guard("lattice"):
        _exhaustive(builder, W, ambient, groups, settings, claims)

    builder.details["members"] = {
        family: {"order": H.order, "generators": H.generator_strings()} for family, H in groups.items()
    }
    return builder.build()


def normalizer_check(spec: WreathSpec, settings: Settings) -> VerificationReport:
    """Brute-force normalizer of A_n wr A_m inside S_n wr S_m."""
    shape = WreathSpec(spec.degrees)
    builder = ReportBuilder("normalizer AnA", str(shape), settings.seed)
    W = build_wreath(shape, settings.leaf_limit)
    H = catalog_group("AnA", shape)
    snat = catalog_group("SnAt", shape)

    normalizing = [
        g for g in elements(W, settings.enumeration_limit)
        if all(H.contains(conjugate(h, g)) for h in H.generators)
    ]
    N = group_from_elements(normalizing, W.degree)
    builder.fact("normalizer/contains-AnA", True, is_subgroup(H, N))
    builder.fact("normalizer/closed", len(normalizing), N.order)
    builder.claim(
        "normalizer/equals-SnAt",
        {"order": snat.order, "equal": True},
        {"order": N.order, "equal": same_group(N, snat)},
    )
    builder.note("normalizer/evidence", "enumerated evidence only")

    with builder.guard("normal/AnA-in-SnA"):
        SnA = build_wreath(shape.with_kinds(("S", "A")), settings.leaf_limit)
        builder.claim("normal/AnA-in-SnA", True, is_normal(SnA, H))
    with builder.guard("normal/AnA-in-AnS"):
        AnS = build_wreath(shape.with_kinds(("A", "S")), settings.leaf_limit)
        builder.claim("normal/AnA-in-AnS", False, is_normal(AnS, H))
    with builder.guard("normal/AnA-in-SnSm"):
        builder.claim("normal/AnA-in-SnSm", False, is_normal(W, H))

    builder.details["normalizer"] = {"order": N.order, "generators": N.generator_strings()}
    return builder.build()
