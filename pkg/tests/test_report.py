import csv
import json

import pytest

from modules.chigenus import refined_trop
from modules.errors import RankNotTwo
from modules.report import (
    Issue,
    cycle_to_dict,
    derive_issues,
    diff_reports,
    dumps_report,
    export_cones_csv,
    export_issues_csv,
    format_cycle_lines,
    render_svg,
)
from modules.tropcycle import dual_hypersurface


def test_cycle_to_dict_is_exact_and_ordered(d1):
    data = cycle_to_dict(refined_trop([d1]))
    assert data["lattice_rank"] == 2
    assert [c["dimension"] for c in data["cones"]] == [0, 1, 1, 1, 1]
    origin = data["cones"][0]
    assert origin["weight"] == {"1": "-1", "2": "-2"}
    assert origin["weight_text"] == "-(y-1)^-1 - 2*(y-1)^-2"


def test_rationals_serialize_as_fractions(d2):
    text = dumps_report({"cycle": cycle_to_dict(refined_trop([d2]))})
    assert '"-5/2"' in text
    assert "2.5" not in text
    assert dumps_report(json.loads(text)) == text


def test_format_cycle_lines(d1):
    lines = format_cycle_lines(refined_trop([d1]))
    assert lines[0].startswith("  dim 0  origin  weight -(y-1)^-1")
    assert len(lines) == 5


def test_svg_is_deterministic(d2, tmp_path):
    cycle = refined_trop([d2])
    path = tmp_path / "d2.svg"
    svg = render_svg(cycle, str(path))
    assert svg == render_svg(cycle)
    assert path.read_text(encoding="utf-8") == svg
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert svg.count("<line ") == 4
    assert "-5/2*(y-1)^-1 - 5*(y-1)^-2" in svg
    assert "href" not in svg


def test_svg_config_and_rank(d1, simplex3):
    svg = render_svg(dual_hypersurface(d1), config={"size": 200, "font_size": 10})
    assert 'width="200"' in svg
    with pytest.raises(RankNotTwo):
        render_svg(dual_hypersurface(simplex3))


def test_csv_exports(d1, tmp_path):
    path = tmp_path / "cones.csv"
    export_cones_csv(str(path), refined_trop([d1]))
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 6
    assert rows[0]["rays"] == ""
    assert {r["coefficient"] for r in rows[:2]} == {"-1", "-2"}

    issues_path = tmp_path / "issues.csv"
    issue = Issue("D1", "PRODUCT_RULE", "t", "error", "product", "")
    export_issues_csv(str(issues_path), [issue.to_dict()])
    with open(issues_path, newline="") as f:
        assert next(csv.DictReader(f))["code"] == "PRODUCT_RULE"


def test_derive_issues():
    checks = {
        "lattice_rank": 2,
        "codim": 3,
        "pipelines": {"agreement": False, "values": {"dhn": "y", "factored": "y - 1"}},
        "balanced_refined": {"passed": True, "violations": []},
        "nilpotency_failures": ["P"],
    }
    codes = [i.code for i in derive_issues("P", checks)]
    assert codes == ["NOT_NILPOTENT", "PIPELINE_DISAGREEMENT", "EMPTY_INTERSECTION"]
    assert derive_issues("P", {"pipelines": {"agreement": True}}) == []


def test_diff_reports(d1, d2):
    old = {
        "ChiGenusAnalyzer": {"chi_y": {"text": "y - 3"}},
        "TropicalAnalyzer": {"cycle": cycle_to_dict(refined_trop([d1]))},
    }
    new = {
        "ChiGenusAnalyzer": {"chi_y": {"text": "-5"}},
        "TropicalAnalyzer": {"cycle": cycle_to_dict(refined_trop([d2]))},
    }
    diff = diff_reports(old, new)
    assert diff["chi_y_changes"] == [{"section": "ChiGenusAnalyzer", "old": "y - 3", "new": "-5"}]
    assert len(diff["weight_changes"]) == 2
    assert len(diff["added_cones"]) == 2
    assert len(diff["removed_cones"]) == 2
    assert diff_reports(old, old) == {
        "chi_y_changes": [],
        "added_cones": [],
        "removed_cones": [],
        "weight_changes": [],
    }
