import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from catalog.monolith import EXACT, SAMPLING, monolith_claim_check
from catalog.reports import EXIT_DISCREPANCY, STATUS_DISCREPANCY, STATUS_FAIL, STATUS_PASS, validate_report
from catalog.verify import ambient_spec, default_ambient, normalizer_check, verify_catalog
from config import Settings, load_claims
from tableau.spec import parse_spec, symmetric_spec
from tableau.tableau import classify, parse_tableau


@pytest.fixture(scope="module")
def claims():
    return load_claims()


@pytest.fixture(scope="module")
def symmetric_report(claims):
    return verify_catalog("SnSm", symmetric_spec(3, 3), Settings(), claims)


def _statuses(report):
    return {c.name: c.status for c in report.checks}


def test_symmetric_catalog_reproduces_counts(symmetric_report):
    statuses = _statuses(symmetric_report)
    assert statuses["lattice/count"] == STATUS_PASS
    assert symmetric_report.check("lattice/count").observed == 10
    assert statuses["count/proper"] == STATUS_PASS
    assert statuses["lattice/catalog-covers-lattice"] == STATUS_PASS
    assert statuses["lattice/index-2"] == STATUS_PASS
    assert all(status == STATUS_PASS for name, status in statuses.items() if name.startswith(("order/", "normal/")))


def test_symmetric_catalog_surfaces_false_claims(symmetric_report):
    statuses = _statuses(symmetric_report)
    assert statuses["closure/a"] == STATUS_PASS
    assert statuses["closure/b"] == STATUS_PASS
    assert statuses["closure/c"] == STATUS_DISCREPANCY
    assert symmetric_report.check("closure/c").observed == {"equals": "EA", "order": 27}
    assert statuses["contains-EAt/EA"] == STATUS_DISCREPANCY
    assert statuses["contains-EAt/Tt"] == STATUS_DISCREPANCY
    assert statuses["contains-EAt/ES"] == STATUS_PASS
    assert all(status == STATUS_PASS for name, status in statuses.items() if name.startswith("contains-EA/"))
    assert symmetric_report.status == STATUS_DISCREPANCY
    assert symmetric_report.exit_code == EXIT_DISCREPANCY


def test_symmetric_catalog_report_validates(symmetric_report):
    payload = symmetric_report.to_dict()
    validate_report(payload)
    assert payload["details"]["members"]["SnAt"]["order"] == 648
    matrix = payload["details"]["containment"]
    members = matrix["members"]
    assert matrix["matrix"][members.index("EA")][members.index("ES")] == 1
    assert matrix["matrix"][members.index("EAt")][members.index("Tt")] == 0


def test_alternating_top_catalog(claims):
    report = verify_catalog("AnSm", symmetric_spec(3, 3), Settings(), claims)
    assert report.check("normal/AnE").observed is False
    assert report.check("order/AnE").status == STATUS_PASS
    assert report.status != STATUS_FAIL


def test_ambient_selection():
    assert default_ambient(parse_spec("S3*S3")) == "SnSm"
    assert default_ambient(parse_spec("A3*S3")) == "AnSn"
    assert default_ambient(parse_spec("A3*S4")) == "AnSm"
    assert default_ambient(parse_spec("S3*A3")) == "SnAn"
    assert ambient_spec("AnSm", symmetric_spec(3, 4)).kinds == ("A", "S")
    with pytest.raises(ValueError, match="invalid pairing"):
        ambient_spec("SnAn", symmetric_spec(3, 4))
    with pytest.raises(ValueError, match="invalid pairing"):
        default_ambient(parse_spec("A3*A3"))


def test_monolith_exact_at_s3s2_is_not_monolithic():
    report = monolith_claim_check(symmetric_spec(3, 2), EXACT, Settings())
    minimal = report.details["minimal_normal_subgroups"]
    assert sorted(m["order"] for m in minimal) == [2, 4]
    assert report.check("monolith/reading-m-even").status == STATUS_DISCREPANCY
    assert report.check("monolith/observed").observed["exists"] is False


def test_monolith_exact_at_s3s3_is_the_even_base():
    report = monolith_claim_check(symmetric_spec(3, 3), EXACT, Settings())
    assert report.check("monolith/observed").observed == {"exists": True, "equals": "EA", "order": 27}
    assert report.status == STATUS_PASS


def test_monolith_sampling_reports_counterexamples_verbatim():
    report = monolith_claim_check(symmetric_spec(3, 4), SAMPLING, Settings(seed=0), count=10)
    missing = report.check("sampling/closures-contain-EAt").observed
    assert len(report.details["counterexamples"]) == missing
    for item in report.details["counterexamples"]:
        assert item["tableau"].startswith("[")
    validate_report(report.to_dict())


def test_normalizer_of_even_wreath(claims):
    report = normalizer_check(symmetric_spec(3, 3), Settings())
    assert report.check("normalizer/contains-AnA").status == STATUS_PASS
    assert report.check("normalizer/closed").status == STATUS_PASS
    assert report.details["normalizer"]["order"] == 324
    assert report.check("normalizer/equals-SnAt").status == STATUS_DISCREPANCY
    assert report.check("normal/AnA-in-SnA").status == STATUS_PASS
    assert report.check("normal/AnA-in-AnS").status == STATUS_PASS
    assert report.check("normal/AnA-in-SnSm").status == STATUS_PASS


@pytest.fixture(scope="module")
def chain_scale_report(claims):
    return verify_catalog("SnSm", symmetric_spec(5, 5), Settings(), claims)


def test_catalog_at_chain_scale(chain_scale_report):
    statuses = _statuses(chain_scale_report)
    assert statuses["count/proper"] == STATUS_PASS
    assert chain_scale_report.check("count/proper").observed == 8
    assert all(status == STATUS_PASS for name, status in statuses.items() if name.startswith(("order/", "normal/")))
    assert chain_scale_report.check("lattice/exhaustive").expected is None
    assert chain_scale_report.status == STATUS_DISCREPANCY
    assert chain_scale_report.exit_code == EXIT_DISCREPANCY


def test_closures_at_chain_scale(chain_scale_report):
    assert chain_scale_report.check("closure/a").status == STATUS_PASS
    assert chain_scale_report.check("closure/a").observed == {"equals": "EAt", "order": 120 ** 5 // 2}
    assert chain_scale_report.check("closure/c").observed == {"equals": "EA", "order": 60 ** 5}


def test_monolith_sampling_with_six_letters_below():
    report = monolith_claim_check(symmetric_spec(3, 6), SAMPLING, Settings(seed=0), count=100)
    missing = report.check("sampling/closures-contain-EAt").observed
    assert report.check("sampling/closures-contain-EA").observed == 0
    assert len(report.details["counterexamples"]) == missing
    spec = symmetric_spec(3, 6)
    for item in report.details["counterexamples"]:
        flags = classify(parse_tableau(item["tableau"], spec))
        assert "Tt1" in flags or "Tt2" in flags


def test_monolith_rejects_alternating_levels():
    with pytest.raises(ValueError, match="symmetric levels"):
        monolith_claim_check(parse_spec("A3*S3"), EXACT, Settings())


def test_default_ambient_needs_depth_two():
    with pytest.raises(ValueError, match="depth-2"):
        default_ambient(parse_spec("S3*S3*S3"))
