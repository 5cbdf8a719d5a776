#!/usr/bin/env python3
"""Desk-scale verification batch: one JSON report per run under an output directory."""

from __future__ import annotations

import logging
from pathlib import Path
import sys

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from catalog.monolith import EXACT, monolith_claim_check
from catalog.reports import STATUS_FAIL, validate_report
from catalog.structure import lattice_report, parity_report
from catalog.verify import verify_catalog
from config import load_claims, load_env, load_settings
from tableau.spec import parse_spec

logger = logging.getLogger("verify_all")


def main() -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    load_env()
    settings = load_settings()
    claims = load_claims()
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("reports")
    out_dir.mkdir(parents=True, exist_ok=True)

    runs = {
        "lattice-S3xS2": lambda: lattice_report(parse_spec("S3*S2"), settings, claims),
        "lattice-S3xS3": lambda: lattice_report(parse_spec("S3*S3"), settings, claims),
        "catalog-S3xS3": lambda: verify_catalog("SnSm", parse_spec("S3*S3"), settings, claims),
        "parity-S3xS3": lambda: parity_report(parse_spec("S3*S3"), settings),
        "parity-S3xS3xS3": lambda: parity_report(parse_spec("S3*S3*S3"), settings),
        "monolith-S3xS2": lambda: monolith_claim_check(parse_spec("S3*S2"), EXACT, settings),
        "monolith-S3xS3": lambda: monolith_claim_check(parse_spec("S3*S3"), EXACT, settings),
    }

    worst = 0
    for name, run in runs.items():
        report = run()
        validate_report(report.to_dict())
        (out_dir / f"{name}.json").write_text(report.to_json(), encoding="utf-8")
        logger.info("%s: %s in %d ms", name, report.status, report.runtime_ms)
        if report.status == STATUS_FAIL:
            worst = 1
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
