from fractions import Fraction
from itertools import product

import pytest

from modules.errors import NotFullDimPolygon, RankMismatch, RankNotTwo, UnsupportedRank
from modules.polytope import (
    Face,
    LatticePolytope,
    area,
    boundary_and_interior_counts,
    dilate,
    hull,
    lattice_point_count,
    minimizing_face,
    minkowski_sum,
    mixed_area,
    normal_fan,
    normalized,
    point,
    relative_volume,
    translate,
    verify_hull,
    volume,
)

CUBE = [list(v) for v in product((0, 1), repeat=3)]


def test_hull_drops_interior_and_duplicate_points():
    p = hull([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (2, 2)], 2)
    assert p.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert verify_hull(p, [(0, 0), (1, 1), (2, 2)])


SKEW_OCTAHEDRON = [
    [2, -1, 2], [1, 1, 0], [1, 0, 0], [1, 1, -1],
    [-2, 1, 2], [-1, 1, 0], [-1, -2, 1], [0, 2, 2],
]


def test_verify_hull_handles_many_vertices():
    p = hull(SKEW_OCTAHEDRON, 3, verify=True)
    assert verify_hull(p, SKEW_OCTAHEDRON)
    cuboctahedron = sorted(
        {tuple(v) for v in product((-1, 0, 1), repeat=3) if sorted(map(abs, v)) == [0, 1, 1]}
    )
    q = hull([list(v) for v in cuboctahedron], 3, verify=True)
    assert len(q.vertices) == 12


def test_verify_hull_flags_redundant_vertex():
    cube = [tuple(2 * c for c in v) for v in CUBE]
    padded = LatticePolytope(3, tuple(sorted(cube + [(1, 1, 1)])))
    assert not verify_hull(padded, cube)
    assert verify_hull(hull(cube, 3), cube)
    assert not verify_hull(hull(cube, 3), [(3, 0, 0)])


def test_geometry_caches_are_bounded():
    assert minkowski_sum.cache_info().maxsize == 4096
    assert normal_fan.cache_info().maxsize == 4096


def test_hull_rejects_bad_input():
    with pytest.raises(RankMismatch):
        hull([(0, 0), (1, 0, 0)], 2)
    with pytest.raises(UnsupportedRank):
        hull([(0, 0, 0, 0)], 4)


def test_d2_counts(d2):
    assert len(d2.vertices) == 4
    assert d2.dim == 2
    assert area(d2) == Fraction(5, 2)
    assert lattice_point_count(d2) == 6
    assert boundary_and_interior_counts(d2) == (5, 1)


def test_d1_counts(d1):
    assert area(d1) == 1
    assert lattice_point_count(d1) == 4
    assert boundary_and_interior_counts(d1) == (4, 0)


def test_contains_uses_exact_inequalities(d2):
    assert d2.contains((1, 1))
    assert d2.contains((1, 2))
    assert not d2.contains((2, 1))
    assert all(b <= sum(x * y for x, y in zip(a, (1, 1))) for a, b in d2.inequalities())


def test_segment_is_lower_dimensional(segment):
    assert segment.dim == 1
    assert volume(segment) == 1
    assert lattice_point_count(segment) == 2
    assert area(segment) == 0
    assert len(segment.equations()) == 1
    with pytest.raises(NotFullDimPolygon):
        boundary_and_interior_counts(segment)


def test_boundary_counts_need_rank_two(simplex3):
    with pytest.raises(RankNotTwo):
        boundary_and_interior_counts(simplex3)


def test_minkowski_sum_and_dilation(d1, d2):
    assert minkowski_sum(d1, d1) == dilate(d1, 2)
    assert lattice_point_count(dilate(d1, 2)) == 9
    assert dilate(d2, 0) == point(2)
    assert minkowski_sum(point(2), d2) == d2
    with pytest.raises(RankMismatch):
        minkowski_sum(d1, hull(CUBE, 3))


def test_mixed_area(d1, d2):
    assert mixed_area(d1, d1) == 2
    assert mixed_area(d1, d2) == area(minkowski_sum(d1, d2)) - 1 - Fraction(5, 2)
    assert mixed_area(d2, d1) == mixed_area(d1, d2)


def test_translation_invariance(d2):
    moved = translate(d2, (3, -1))
    assert lattice_point_count(moved) == 6
    assert area(moved) == area(d2)
    assert normalized(moved) == normalized(d2)


def test_faces_of_cube_and_simplex(simplex3):
    cube = hull(CUBE, 3)
    assert len(cube.vertices) == 8
    assert len(cube.faces()) == 27
    assert volume(cube) == 1
    assert lattice_point_count(cube) == 8
    assert len(simplex3.faces()) == 15
    assert volume(simplex3) == Fraction(1, 6)
    assert lattice_point_count(simplex3) == 4
    assert lattice_point_count(dilate(simplex3, 2)) == 10


def test_relative_volume_uses_face_lattice(d2):
    bottom = minimizing_face(d2, (0, 1))
    assert bottom.vertices == ((0, 0), (2, 0))
    assert relative_volume(bottom) == 2
    diagonal = hull([(0, 0, 0), (2, 2, 2)], 3)
    assert volume(diagonal) == 2
    triangle = hull([(0, 0, 0), (1, 0, 1), (0, 1, 1)], 3)
    assert triangle.dim == 2
    assert volume(triangle) == Fraction(1, 2)


def test_minimizing_face_vertex(d1):
    face = minimizing_face(d1, (1, 1))
    assert isinstance(face, Face)
    assert face.vertices == ((0, 0),)
    assert relative_volume(face) == 1


def test_normal_fan_of_square(d1):
    fan = normal_fan(d1)
    assert len(fan.cones) == 9
    assert sorted(c.rays[0] for c in fan.cones_of_dim(1)) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert len(fan.maximal_cones()) == 4


def test_normal_fan_of_d2_matches_inner_normals(d2):
    fan = normal_fan(d2)
    rays = sorted(c.rays[0] for c in fan.cones_of_dim(1))
    assert rays == [(-2, -1), (0, 1), (1, -1), (1, 0)]
    labels = {c.rays[0]: fan.labels[c] for c in fan.cones_of_dim(1)}
    assert relative_volume(labels[(0, 1)]) == 2


def test_normal_fan_of_segment_has_lineality(segment):
    fan = normal_fan(segment)
    assert len(fan.maximal_cones()) == 2
    assert all(c.dim == 2 for c in fan.maximal_cones())
    assert all(c.lineality == ((0, 1),) for c in fan.cones)
