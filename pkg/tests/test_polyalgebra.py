from fractions import Fraction

import pytest

from modules.errors import RankMismatch
from modules.polyalgebra import (
    PolytopeCombination,
    chern,
    invert_class,
    is_zero_in_algebra,
    lat,
    multiply,
    power,
)
from modules.polytope import hull, lattice_point_count, minkowski_sum, translate
from modules.tropcycle import add_cycles, cycle_equal, stable_intersection


def one():
    return PolytopeCombination.unit(2)


def test_nilpotency_under_lat(d1):
    x = power(one() - PolytopeCombination.of(d1), 3)
    assert lat(x) == 0


def test_nilpotency_in_algebra(d1, d2, segment, polygon_pool):
    for p in [d1, d2, segment] + polygon_pool[:4]:
        assert is_zero_in_algebra(power(one() - PolytopeCombination.of(p), 3))


def test_nilpotency_rank_three(simplex3):
    unit = PolytopeCombination.unit(3)
    assert is_zero_in_algebra(power(unit - PolytopeCombination.of(simplex3), 4))
    assert not is_zero_in_algebra(power(unit - PolytopeCombination.of(simplex3), 3))


def test_multiplication_is_minkowski_sum(d1, d2):
    prod = multiply(PolytopeCombination.of(d1), PolytopeCombination.of(d2))
    assert prod == PolytopeCombination.of(minkowski_sum(d1, d2))
    assert lat(prod) == lattice_point_count(minkowski_sum(d1, d2))


def test_translation_is_forgotten(d2):
    assert PolytopeCombination.of(translate(d2, (5, -3))) == PolytopeCombination.of(d2)
    x = PolytopeCombination.of(d2, 2) - PolytopeCombination.of(translate(d2, (1, 1)))
    assert lat(x) == 6


def test_inverse(d1, d2):
    for p in (d1, d2):
        inv = invert_class(p)
        assert is_zero_in_algebra(multiply(inv, PolytopeCombination.of(p)) - one())
        assert lat(multiply(inv, PolytopeCombination.of(p))) == 1


def test_chern_is_a_ring_homomorphism(d1, d2, segment):
    a = PolytopeCombination.of(d1) + PolytopeCombination.of(segment, Fraction(1, 2))
    b = PolytopeCombination.of(d2) - one()
    lhs = chern(multiply(a, b))
    rhs = stable_intersection(chern(a), chern(b), seed=4)
    assert cycle_equal(lhs, rhs)


def test_chern_is_additive(d1, d2):
    a, b = PolytopeCombination.of(d1), PolytopeCombination.of(d2)
    assert cycle_equal(chern(a + b), add_cycles(chern(a), chern(b)))
    assert chern(a - a).is_zero


def test_arithmetic_helpers(d1):
    a = PolytopeCombination.of(d1)
    assert (a * 3).as_dict() == {a.polytopes()[0]: Fraction(3)}
    assert (a ** 2) == power(a, 2)
    assert PolytopeCombination.zero(2).is_empty
    assert str(PolytopeCombination.zero(2)) == "0"


def test_rank_mismatch(d1, simplex3):
    with pytest.raises(RankMismatch):
        multiply(PolytopeCombination.of(d1), PolytopeCombination.of(simplex3))
    with pytest.raises(RankMismatch):
        PolytopeCombination.from_dict(2, {hull([(0, 0, 0)], 3): 1})
