from fractions import Fraction

import pytest
import sympy

from conftest import random_polytopes
from modules.chigenus import (
    ChiGenusAnalyzer,
    ChiPolynomial,
    TropicalAnalyzer,
    check_specialization,
    chi_y,
    chi_y_closed_form_2d,
    chi_y_genus_form_2d,
    dhn_chi_y,
    mixed_volume_count,
    refined_trop,
    rel_chi_hypersurface,
    rel_chi_intersection,
    specialization_details,
    unrefined_trop,
)
from modules.errors import InputValidationError, NonIntegralResult, NotFullDimPolygon, RankMismatch, RankNotTwo
from modules.polyalgebra import lat
from modules.polytope import hull, lattice_point_count, mixed_area
from modules.toddint import chi_y_via_todd
from modules.tropcycle import cycle_equal, is_balanced, stable_intersection


class TestChiPolynomial:
    def test_formatting(self):
        assert str(ChiPolynomial((-3, 1))) == "y - 3"
        assert str(ChiPolynomial((-5,))) == "-5"
        assert str(ChiPolynomial((1, -2, 1))) == "y^2 - 2*y + 1"
        assert str(ChiPolynomial()) == "0"
        assert str(ChiPolynomial((0, 0, -2))) == "-2*y^2"

    def test_factored(self):
        assert ChiPolynomial.torus(2).factored() == "(y-1)^2"
        assert ChiPolynomial((-3, 1)).factored() == "y-3"
        assert ChiPolynomial((-5,)).factored() == "-5"

    def test_u_expansion(self):
        assert str(ChiPolynomial.from_u_expansion({1: Fraction(1), 2: Fraction(-2)}, 2)) == "y - 3"
        assert ChiPolynomial.from_u_expansion({2: Fraction(-5)}, 2) == ChiPolynomial((-5,))
        y = sympy.Symbol("y")
        assert sympy.expand(ChiPolynomial.torus(3).as_sympy() - (y - 1) ** 3) == 0

    def test_non_integral(self):
        with pytest.raises(NonIntegralResult):
            ChiPolynomial.from_rational([Fraction(1, 2)])
        with pytest.raises(NonIntegralResult):
            ChiPolynomial.from_u_expansion({3: Fraction(1)}, 2)


class TestRelativeGenus:
    def test_hypersurface_exponents(self, d1):
        genus = rel_chi_hypersurface(d1)
        assert genus.exponents() == (1, 2)
        assert genus.codim == 1

    def test_segment_coefficients(self, segment):
        genus = rel_chi_hypersurface(segment)
        assert lat(genus.coefficient(1)) == 1
        assert lat(genus.coefficient(2)) == 0

    def test_high_exponents_vanish_under_lat(self, d1, d2):
        genus = rel_chi_intersection([d1, d2])
        assert genus.max_exponent == 4
        assert genus.high_terms()
        assert all(lat(c) == 0 for c in genus.high_terms().values())
        truncated = rel_chi_intersection([d1, d2], full=False)
        assert truncated.max_exponent == 2
        assert truncated.low_terms() == genus.low_terms()

    def test_rank_checks(self, d1, simplex3):
        with pytest.raises(RankMismatch):
            rel_chi_intersection([d1, simplex3])
        with pytest.raises(InputValidationError):
            rel_chi_intersection([])


class TestChiY:
    def test_worked_examples(self, d1, d2):
        assert str(chi_y([d1])) == "y - 3"
        assert str(chi_y([d2])) == "-5"

    @pytest.mark.parametrize("pipeline", [chi_y, dhn_chi_y, chi_y_via_todd])
    def test_every_pipeline_on_worked_examples(self, pipeline, d1, d2):
        assert str(pipeline([d1])) == "y - 3"
        assert str(pipeline([d2])) == "-5"

    def test_planar_closed_forms(self, d1, d2):
        for f in (chi_y_closed_form_2d, chi_y_genus_form_2d):
            assert str(f(d1)) == "y - 3"
            assert str(f(d2)) == "-5"

    def test_degenerate_inputs(self, d1, segment):
        assert chi_y([hull([(1, 1)], 2)]).is_zero
        assert chi_y([d1, d1, d1]).is_zero
        assert dhn_chi_y([d1, d1, d1]).is_zero
        assert str(chi_y([segment])) == "y - 1"
        assert str(dhn_chi_y([segment])) == "y - 1"
        assert chi_y([], 2).factored() == "(y-1)^2"

    def test_closed_forms_reject(self, segment, simplex3):
        with pytest.raises(NotFullDimPolygon):
            chi_y_closed_form_2d(segment)
        with pytest.raises(RankNotTwo):
            chi_y_genus_form_2d(simplex3)

    def test_square_systems_count_mixed_volume(self, d1, d2, polygon_pool):
        for p, q in [(d1, d2), (d2, d2)] + list(zip(polygon_pool[:3], polygon_pool[5:8])):
            mv = mixed_volume_count([p, q])
            assert mv == mixed_area(p, q)
            assert chi_y([p, q]) == ChiPolynomial.from_rational([mv])

    def test_rank_three(self, simplex3):
        assert str(chi_y([simplex3])) == "y^2 - 3*y + 3"
        assert str(chi_y([simplex3, simplex3])) == "y - 3"
        assert str(chi_y([simplex3] * 3)) == "1"
        assert dhn_chi_y([simplex3]) == chi_y([simplex3])
        assert dhn_chi_y([simplex3, simplex3]) == chi_y([simplex3, simplex3])

    def test_slow_vanishing_checks(self, d1, d2):
        assert chi_y([d1, d2], slow_checks=True) == chi_y([d1, d2], check_vanishing=False)


@pytest.fixture(scope="module")
def planar_pool():
    return random_polytopes(2024, 20)


@pytest.fixture(scope="module")
def solid_pool():
    return random_polytopes(31, 6, rank_n=3, box=1)


@pytest.fixture(scope="module")
def oracle_inputs(planar_pool, solid_pool):
    inputs = [[p] for p in planar_pool]
    inputs += [[p, q] for p, q in zip(planar_pool, planar_pool[5:])]
    inputs += [[p] for p in random_polytopes(7, 6, full=False)]
    inputs += [[p] for p in solid_pool[:5]]
    inputs += [[p, q] for p, q in zip(solid_pool[:4], solid_pool[1:5])]
    inputs += [solid_pool[i : i + 3] for i in range(3)]
    return inputs


@pytest.fixture(scope="module")
def pick_polygons(planar_pool):
    return planar_pool + random_polytopes(99, 10, box=3)


@pytest.fixture(scope="module")
def product_pairs(planar_pool, solid_pool):
    planar = list(zip(planar_pool[:10], planar_pool[10:20]))
    solid = list(zip(solid_pool[:5], solid_pool[1:6]))
    return planar, solid


class TestOracle:
    def test_dhn_agrees_on_random_inputs(self, oracle_inputs):
        assert len(oracle_inputs) >= 50
        assert {(d[0].rank, len(d)) for d in oracle_inputs} == {(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)}
        for deltas in oracle_inputs:
            assert all(lattice_point_count(p) <= 12 for p in deltas)
            assert chi_y(deltas) == dhn_chi_y(deltas)

    def test_dhn_thread_pool(self, d1, d2):
        assert dhn_chi_y([d1, d2], workers=3) == dhn_chi_y([d1, d2])

    def test_pick_suite(self, pick_polygons):
        assert len(pick_polygons) >= 30
        for p in pick_polygons:
            closed = chi_y_closed_form_2d(p)
            assert closed == chi_y_genus_form_2d(p)
            assert closed == chi_y([p])
            assert closed == chi_y_via_todd([p])


class TestTropicalizations:
    def test_requires_codimension_in_range(self, d1):
        with pytest.raises(InputValidationError):
            refined_trop([], 2)
        with pytest.raises(InputValidationError):
            refined_trop([d1, d1, d1])

    def test_product_rule(self, d1, d2, product_pairs):
        planar, _ = product_pairs
        assert len(planar) >= 10
        for p, q in [(d1, d2)] + planar:
            whole = refined_trop([p, q])
            split = stable_intersection(refined_trop([p]), refined_trop([q]), seed=8)
            assert cycle_equal(whole, split)
            assert is_balanced(whole).balanced

    def test_product_rule_rank_three(self, simplex3, product_pairs):
        _, solid = product_pairs
        assert len(solid) >= 5
        bipyramid = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3)
        for p, q in [(simplex3, bipyramid)] + solid:
            whole = refined_trop([p, q])
            split = stable_intersection(refined_trop([p]), refined_trop([q]), seed=8)
            assert cycle_equal(whole, split)

    def test_specialization_on_worked_examples(self, d1, d2, segment):
        for deltas in [[d1], [d2], [segment], [d1, d2]]:
            assert check_specialization(deltas)
            assert is_balanced(unrefined_trop(deltas)).balanced

    def test_specialization_on_acceptance_inputs(self, oracle_inputs, pick_polygons, product_pairs):
        planar, solid = product_pairs
        inputs = oracle_inputs + [[p] for p in pick_polygons] + [list(pair) for pair in planar + solid]
        for deltas in inputs:
            assert check_specialization(deltas)

    def test_specialization_details(self, d1, d2):
        result = specialization_details([d1, d2], seed=3)
        assert result.support_equal and result.top_matches
        assert bool(result)


class TestAnalyzers:
    def test_all_pipelines_agree(self, session):
        out = ChiGenusAnalyzer().analyze(session, ["D1"], all_pipelines=True)
        section = out["ChiGenusAnalyzer"]
        assert section["agreement"]
        assert set(section["pipelines"]) == {"factored", "dhn", "todd", "closed_form_2d", "genus_form_2d"}
        assert set(section["pipelines"].values()) == {"y - 3"}
        assert section["note"] == "values valid for generic coefficients"

    def test_skipped_pipelines_are_reported(self, session):
        section = ChiGenusAnalyzer().analyze(session, ["D1", "D2"], all_pipelines=True)["ChiGenusAnalyzer"]
        assert "closed_form_2d" in section["skipped_pipelines"]
        assert section["mixed_volume"] == section["chi_y"]["text"]
        torus = ChiGenusAnalyzer().analyze(session, [], all_pipelines=True)["ChiGenusAnalyzer"]
        assert torus["chi_y"]["factored"] == "(y-1)^2"
        assert "todd" in torus["skipped_pipelines"]

    def test_inapplicable_pipeline(self, session):
        with pytest.raises(InputValidationError):
            ChiGenusAnalyzer().analyze(session, ["S"], pipeline="closed_form_2d")

    def test_tropical_analyzer(self, session):
        analyzer = TropicalAnalyzer(config={"displacement_seed": 5})
        section = analyzer.analyze(session, ["D2"])["TropicalAnalyzer"]
        assert section["kind"] == "refined"
        origin = section["cycle"]["cones"][0]
        assert origin["dimension"] == 0
        assert origin["weight_text"] == "-5/2*(y-1)^-1 - 5*(y-1)^-2"
        unrefined = analyzer.analyze(session, ["D1", "D2"], refined=False)["TropicalAnalyzer"]
        assert [c["weight"] for c in unrefined["cycle"]["cones"]] == [{"0": str(mixed_area(*session.resolve(["D1", "D2"])))}]
