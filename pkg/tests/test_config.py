import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

import config
from config import Settings, load_claims, load_settings

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for variable in config.ENV_OVERRIDES.values():
        monkeypatch.delenv(variable, raising=False)


def test_default_settings_file_matches_dataclass():
    assert load_settings() == Settings()


def test_settings_file_with_missing_fields():
    settings = load_settings(str(FIXTURES_DIR / "settings_small.json"))
    assert settings.enumeration_limit == 5000
    assert settings.leaf_limit == 30
    assert settings.seed == 9
    assert settings.sampling == 100


def test_environment_overrides_file(monkeypatch):
    monkeypatch.setenv("WREATH_SEED", "42")
    monkeypatch.setenv("WREATH_LEAF_LIMIT", "64")
    settings = load_settings()
    assert settings.seed == 42
    assert settings.leaf_limit == 64
    assert settings.enumeration_limit == Settings().enumeration_limit


def test_malformed_override_names_the_variable(monkeypatch):
    monkeypatch.setenv("WREATH_SAMPLING", "lots")
    with pytest.raises(ValueError, match="WREATH_SAMPLING must be an integer"):
        load_settings()


def test_claims_file():
    claims = load_claims()
    assert claims.lattice_counts["S3*S3"] == 10
    assert claims.lattice_counts["S3*S2"] == 9
    assert claims.catalog_proper_counts["SnSm"] == 8
    assert sum(claims.triple_listed.values()) == 50
    assert claims.triple_total == 50


def test_load_env_reads_dotenv_without_overriding(tmp_path, monkeypatch):
    (tmp_path / ".env").write_text("# local\nWREATH_SEED='7'\nWREATH_SAMPLING=12\n", encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("WREATH_SAMPLING", "3")
    monkeypatch.setenv("WREATH_SEED", "placeholder")
    monkeypatch.delenv("WREATH_SEED")

    config.load_env()

    assert os.environ["WREATH_SEED"] == "7"
    settings = load_settings()
    assert settings.seed == 7
    assert settings.sampling == 3


def test_zero_sample_count_is_rejected(monkeypatch):
    monkeypatch.setenv("WREATH_SAMPLING", "0")
    with pytest.raises(ValueError, match="WREATH_SAMPLING must be at least 1"):
        load_settings()
