from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional

from dotenv import find_dotenv, load_dotenv

ROOT = Path(__file__).resolve().parent
SETTINGS_PATH = ROOT / "settings.json"
CLAIMS_PATH = ROOT / "claims.json"

ENV_OVERRIDES = {
    "enumeration_limit": "WREATH_ENUMERATION_LIMIT",
    "leaf_limit": "WREATH_LEAF_LIMIT",
    "seed": "WREATH_SEED",
    "sampling": "WREATH_SAMPLING",
}


@dataclass(frozen=True)
class Settings:
    enumeration_limit: int = 1_000_000
    leaf_limit: int = 10_000
    seed: int = 0
    sampling: int = 100


@dataclass(frozen=True)
class Claims:
    lattice_counts: Dict[str, int]
    catalog_proper_counts: Dict[str, int]
    catalog_total_counts: Dict[str, int]
    triple_listed: Dict[str, int]
    triple_total: int


def load_env() -> None:
    load_dotenv(find_dotenv(usecwd=True))


def _read_int(variable: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{variable} must be an integer, got {raw!r}") from None


def load_settings(path: Optional[str] = None) -> Settings:
    with open(path or SETTINGS_PATH, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    values = {field: int(payload.get(field, getattr(Settings, field))) for field in ENV_OVERRIDES}
    for field, variable in ENV_OVERRIDES.items():
        raw = os.environ.get(variable)
        if raw:
            values[field] = _read_int(variable, raw)
    for field, variable in ENV_OVERRIDES.items():
        minimum = 0 if field == "seed" else 1
        if values[field] < minimum:
            raise ValueError(f"{variable} must be at least {minimum}, got {values[field]}")
    return Settings(**values)


def load_claims(path: Optional[str] = None) -> Claims:
    with open(path or CLAIMS_PATH, "r", encoding="utf-8") as handle:
        payload = json.load(handle)
    return Claims(
        lattice_counts=payload.get("lattice_counts") or {},
        catalog_proper_counts=payload.get("catalog_proper_counts") or {},
        catalog_total_counts=payload.get("catalog_total_counts") or {},
        triple_listed=payload.get("triple_listed") or {},
        triple_total=int(payload.get("triple_total", 0)),
    )
