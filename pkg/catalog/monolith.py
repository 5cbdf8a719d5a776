from __future__ import annotations

import logging
import random

from catalog.reports import ReportBuilder, VerificationReport
from catalog.verify import identify, catalog_group
from config import Settings
from group.enumeration import enumerate_normal_subgroups, minimal_normal_subgroups, monolith, monolith_by_sampling
from perm.notation import format_cycles
from tableau.spec import WreathSpec
from tableau.tableau import format_tableau
from wreath.leaves import perm_to_tableau
from wreath.products import build_wreath

logger = logging.getLogger(__name__)

EXACT = "exact"
SAMPLING = "sampling"


def monolith_claim_check(
    spec: WreathSpec, mode: str, settings: Settings, count: int = 0
) -> VerificationReport:
    """Compare the monolith of S_n wr S_m with e wr A~_m.

    Both parity readings of the published condition are reported: one ties
    the claim to an even m, the other to an even n.
    """
    if not spec.is_symmetric:
        raise ValueError(f"monolith check needs symmetric levels, got {spec}")
    shape = WreathSpec(spec.degrees)
    if shape.depth != 2:
        raise ValueError("wrong spec depth")
    n, m = shape.degrees
    builder = ReportBuilder(f"monolith {mode}", str(shape), settings.seed)
    W = build_wreath(shape, settings.leaf_limit)
    eat = catalog_group("EAt", shape)
    ea = catalog_group("EA", shape)
    known = {"EA": ea, "EAt": eat}

    if mode == EXACT:
        lattice = enumerate_normal_subgroups(W, settings.enumeration_limit)
        minimal = minimal_normal_subgroups(lattice)
        mono = monolith(W, lattice=lattice)
        builder.details["minimal_normal_subgroups"] = [
            {
                "order": lattice.members[i].order,
                "generators": lattice.members[i].group.generator_strings(),
                "equals": identify(lattice.members[i].group, known),
            }
            for i in minimal
        ]
        exists = mono is not None
        equals = identify(mono, known) if exists else None
        builder.note("monolith/minimal-count", len(minimal))
        builder.note("monolith/observed", {"exists": exists, "equals": equals, "order": mono.order if exists else None})
        if m % 2 == 0:
            builder.claim("monolith/reading-m-even", {"exists": True, "equals": "EAt"}, {"exists": exists, "equals": equals})
        else:
            builder.note("monolith/reading-m-even", "no claim for odd m")
        if n % 2 == 0:
            builder.claim("monolith/reading-n-even", {"exists": True}, {"exists": exists})
        else:
            builder.note("monolith/reading-n-even", "no claim for odd n")
        return builder.build()

    if mode != SAMPLING:
        raise ValueError(f"unknown monolith mode {mode!r}")
    count = count or settings.sampling
    logger.warning("monolith sampling at %s gives evidence only", shape)
    evidence = monolith_by_sampling(W, count, random.Random(settings.seed), eat.generators)
    missing_ea = sum(
        1 for closure in evidence.closures
        if not all(closure.contains(h) for h in ea.generators)
    )
    builder.claim("sampling/closures-contain-EAt", 0, len(evidence.missing))
    builder.claim("sampling/closures-contain-EA", 0, missing_ea)
    builder.note(
        "sampling/smallest-closure",
        {
            "order": evidence.smallest.order,
            "equals": identify(evidence.smallest, known),
            "is_intersection": evidence.common is not None,
        },
    )
    builder.note("sampling/evidence", f"sampling evidence only, {count} samples")
    builder.details["counterexamples"] = [
        {"tableau": format_tableau(perm_to_tableau(x, shape)), "permutation": format_cycles(x)}
        for x in evidence.missing
    ]
    return builder.build()

