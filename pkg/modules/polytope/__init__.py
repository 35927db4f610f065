"""Lattice polytopes of rank <= 3.

Exact hulls with facet descriptions, Minkowski sums and dilations, face
enumeration, relative lattice volumes, lattice point counting and inner
normal fans.
"""

from .polytope import (
    MAX_RANK,
    Face,
    LatticePolytope,
    area,
    boundary_and_interior_counts,
    dilate,
    hull,
    lattice_point_count,
    minimizing_face,
    minkowski_sum,
    minkowski_sum_all,
    mixed_area,
    normalized,
    point,
    relative_volume,
    translate,
    verify_hull,
    volume,
)
from .normal_fan import normal_fan
