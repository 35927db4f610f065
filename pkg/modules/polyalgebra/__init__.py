"""The polytope algebra over Q and its two linear maps: lattice point count and exp(T)."""

from .combination import (
    PolytopeCombination,
    chern,
    common_fan,
    invert_class,
    is_zero_in_algebra,
    lat,
    multiply,
    power,
)
