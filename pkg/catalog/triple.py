"""Normal subgroup candidates of S_n wr S_n wr S_n, checked at chain scale."""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from catalog.families import (
    TRIPLE_KINDS,
    NamedSubgroupSpec,
    alternative_triple_candidate,
    expected_order,
    generators_of,
    triple_candidates,
)
from catalog.reports import ReportBuilder, VerificationReport
from config import Claims, Settings
from group.chain import Group, is_normal, is_subgroup, same_group
from tableau.spec import WreathSpec
from wreath.layers import Layer, layered_generators
from wreath.products import build_wreath, check_leaf_limit, tableau_group

logger = logging.getLogger(__name__)

CONTAINS = "contains"
TRIVIAL = "trivial"
PARTIAL = "partial"
UNDETERMINED = "undetermined"


def _distinct(groups: List[Tuple[str, Group]]) -> List[str]:
    kept: List[Tuple[str, Group]] = []
    for name, G in groups:
        if not any(other.order == G.order and same_group(other, G) for _, other in kept):
            kept.append((name, G))
    return [name for name, _ in kept]


def _relation(H: Group, probe: Group, even_probe: Group) -> str:
    """How ``H`` sits against e wr e wr A~_{n^2}, judged by generator membership."""
    if is_subgroup(probe, H):
        return CONTAINS
    if H.is_trivial:
        return TRIVIAL
    if is_subgroup(even_probe, H):
        return PARTIAL
    return UNDETERMINED


def triple_catalog_verify(n: int, settings: Settings, claims: Claims) -> VerificationReport:
    spec = WreathSpec((n, n, n))
    check_leaf_limit(spec, settings.leaf_limit)
    builder = ReportBuilder("triple", str(spec), settings.seed)
    W = build_wreath(spec, settings.leaf_limit)

    listed = triple_candidates(n)
    alternative = alternative_triple_candidate(n)
    probe = tableau_group(spec, layered_generators(spec, (Layer("E"), Layer("E"), Layer("At", 1))))
    even_probe = tableau_group(spec, layered_generators(spec, (Layer("E"), Layer("E"), Layer("A"))))

    groups: List[Tuple[str, Group]] = []
    by_name: Dict[str, NamedSubgroupSpec] = {}
    rows: List[List[object]] = []
    for candidate in listed + [alternative]:
        name = candidate.name if candidate is not alternative else f"{candidate.name} (global)"
        with builder.guard(f"candidate/{name}"):
            H = tableau_group(spec, generators_of(candidate))
            logger.debug("candidate %s has order %d", name, H.order)
            builder.fact(f"order/{name}", expected_order(candidate), H.order)
            normal = is_normal(W, H)
            builder.claim(f"normal/{name}", True, normal)
            relation = _relation(H, probe, even_probe)
            groups.append((name, H))
            by_name[name] = candidate
            rows.append([name, candidate.kind, H.order, normal, relation])

    for kind in TRIPLE_KINDS:
        built = sum(1 for candidate in listed if candidate.kind == kind)
        builder.claim(f"count/listed-{kind}", claims.triple_listed.get(kind), built)
    builder.claim("count/listed", sum(claims.triple_listed.values()), len(listed))

    distinct = _distinct(groups)
    builder.claim("count/distinct", claims.triple_total, len(distinct))
    builder.details["duplicates"] = [name for name, _ in groups if name not in distinct]

    off = [row[0] for row in rows if row[4] not in (CONTAINS, TRIVIAL)]
    builder.claim("containment/EEAt", [], off)

    per_block = next((G for name, G in groups if by_name[name].note == "per-block uniform parity"), None)
    global_reading = next((G for name, G in groups if by_name[name] is alternative), None)
    if per_block is not None and global_reading is not None:
        builder.note(
            "reading/T003-uniform-parity",
            {
                "per_block_order": per_block.order,
                "global_order": global_reading.order,
                "equal": same_group(per_block, global_reading),
                "global_inside_per_block": is_subgroup(global_reading, per_block),
            },
        )

    builder.details["table"] = {
        "columns": ["name", "kind", "order", "normal", "vs EEAt"],
        "rows": rows,
    }
    return builder.build()
