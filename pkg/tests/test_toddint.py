from fractions import Fraction

import pytest

from modules.chigenus import chi_y, refined_trop
from modules.errors import InputValidationError, MissingMeasureValue, PipelineDisagreement
from modules.polytope import normal_fan
from modules.toddint import ToddIntegrator, ToddMeasure, check_additivity, chi_y_via_todd, integrate
from modules.tropcycle import Cone, WeightPoly, common_refinement, refine


def test_default_measure_values():
    mu = ToddMeasure()
    assert mu.value(Cone.origin(2)) == 1
    assert mu.value(Cone.from_generators(2, [(3, 1)])) == Fraction(1, 2)
    with pytest.raises(MissingMeasureValue) as info:
        mu.value(Cone.from_generators(2, [(1, 0), (0, 1)]))
    assert info.value.cone.dim == 2


def test_integral_of_square(d1):
    assert integrate(refined_trop([d1])) == WeightPoly.from_dict({1: 1, 2: -2})


def test_integral_of_d2(d2):
    assert integrate(refined_trop([d2])) == WeightPoly.from_dict({2: -5})
    assert str(chi_y_via_todd([d2])) == "-5"


def test_integral_is_refinement_independent(d1, d2):
    cycle = refined_trop([d1])
    finer = refine(cycle, common_refinement(cycle.fan, normal_fan(d2)))
    assert integrate(finer) == integrate(cycle)


def test_lineality_cones_are_cut_by_orthants(segment):
    cycle = refined_trop([segment])
    assert any(not c.is_pointed for c in cycle.weighted_cones())
    assert str(chi_y_via_todd([segment])) == "y - 1"


def test_table_overrides_default():
    quadrant = [[1, 0], [0, 1]]
    mu = ToddMeasure.from_entries([{"rays": quadrant, "value": "1/4"}], 2)
    assert mu.value(Cone.from_generators(2, quadrant)) == Fraction(1, 4)


def test_table_validation():
    with pytest.raises(InputValidationError):
        ToddMeasure.from_entries([{"rays": [[1, 0]], "value": 0.5}], 2)
    with pytest.raises(InputValidationError):
        ToddMeasure.from_entries([{"rays": [[1, 0, 0]], "value": "1/2"}], 2)
    with pytest.raises(InputValidationError):
        ToddMeasure.from_entries([{"rays": [[1, 0], [-1, 0]], "value": "1"}], 2)


def test_additivity_check():
    entries = [
        {"rays": [[1, 0], [0, 1]], "value": "1/4"},
        {"rays": [[1, 0], [1, 1]], "value": "1/8"},
        {"rays": [[1, 1], [0, 1]], "value": "1/8"},
    ]
    assert check_additivity(ToddMeasure.from_entries(entries, 2)) == []
    entries[0]["value"] = "1/3"
    violations = check_additivity(ToddMeasure.from_entries(entries, 2))
    assert len(violations) == 1
    assert violations[0].pieces_sum == Fraction(1, 4)


def test_cross_check_detects_bad_measure(d1):
    skewed = ToddMeasure(ray_value=Fraction(1, 4))
    with pytest.raises(PipelineDisagreement) as info:
        chi_y_via_todd([d1], skewed)
    assert set(info.value.results) == {"todd", "factored"}
    assert chi_y_via_todd([d1], skewed, cross_check=False) != chi_y([d1])


def test_integrator_reports_integral(session):
    section = ToddIntegrator().analyze(session, ["D1"])["ToddIntegrator"]
    assert section["integral_text"] == "(y-1)^-1 - 2*(y-1)^-2"
    assert section["integral"] == {"1": "1", "2": "-2"}
    assert section["chi_y"]["text"] == "y - 3"
