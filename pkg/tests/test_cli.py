import json
import sys
from pathlib import Path

from click.testing import CliRunner

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from catalog.reports import validate_report
from cli import cli


def _invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_build_prints_order():
    result = _invoke("build", "S3*S3", "--order")
    assert result.exit_code == 0
    assert result.output.strip() == "1296"


def test_bad_spec_is_a_usage_error():
    result = _invoke("build", "S3**S3")
    assert result.exit_code == 2


def test_leaf_limit_is_a_usage_error():
    result = _invoke("build", "S3*S3", "--leaf-limit", "4")
    assert result.exit_code == 2


def test_normal_subgroups_passes():
    result = _invoke("normal-subgroups", "S3*S2")
    assert result.exit_code == 0
    assert "status: pass" in result.output


def test_catalog_json_reports_discrepancies():
    result = _invoke("catalog", "S3*S3", "--format", "json")
    assert result.exit_code == 3
    payload = json.loads(result.stdout)
    validate_report(payload)
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["closure/c"] == "discrepancy"
    assert statuses["lattice/count"] == "pass"


def test_witness_command():
    result = _invoke("witness", "S5*S5", "--level", "2", "--vertex", "3", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["subject"] == "witness level 2 vertex 3"


def test_witness_vertex_out_of_range():
    result = _invoke("witness", "S5*S5", "--level", "2", "--vertex", "9")
    assert result.exit_code == 2


def test_parity_and_monolith_exit_codes():
    assert _invoke("parity", "S3*S3").exit_code == 0
    assert _invoke("monolith", "S3*S2").exit_code == 3


def test_out_writes_report_file(tmp_path):
    target = tmp_path / "reports" / "parity.json"
    result = _invoke("parity", "S3*S3", "--format", "json", "--out", str(target))
    assert result.exit_code == 0
    assert result.output == ""
    payload = json.loads(target.read_text(encoding="utf-8"))
    assert payload["spec"] == "S3*S3"


def test_element_outside_the_group_is_a_usage_error():
    result = _invoke("element", "A3*S3", "[(1,2)];[(),(),()]")
    assert result.exit_code == 2
    assert "element not in group" in result.output


def test_element_inside_the_group_passes():
    result = _invoke("element", "A3*S3", "[(1,2,3)];[(1,2),(),()]")
    assert result.exit_code == 0


def test_monolith_rejects_alternating_levels():
    result = _invoke("monolith", "A3*S3")
    assert result.exit_code == 2
    assert "symmetric levels" in result.output


def test_catalog_rejects_deeper_specs():
    result = _invoke("catalog", "S3*S3*S3")
    assert result.exit_code == 2
    assert "depth-2" in result.output


def test_zero_sample_count_from_environment_is_a_usage_error():
    result = CliRunner().invoke(cli, ["monolith", "S3*S4", "--mode", "sampling"], env={"WREATH_SAMPLING": "0"})
    assert result.exit_code == 2
    assert "WREATH_SAMPLING" in result.output
