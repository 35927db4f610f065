"""chi_y-genera of generic complete intersections from their Newton polytopes.

Polytope-algebra pipeline, the alternating lattice-count oracle, the planar
closed forms and the refined and unrefined tropicalizations.
"""

from .polynomial import GENERICITY_NOTE, ChiPolynomial
from .genus import RelChiGenus, rel_chi_hypersurface, rel_chi_intersection
from .formulas import (
    chi_y,
    chi_y_closed_form_2d,
    chi_y_genus_form_2d,
    euclidean_volume,
    mixed_volume_count,
)
from .dhn import dhn_chi_y
from .tropical import (
    SpecializationResult,
    check_specialization,
    refined_trop,
    specialization_details,
    unrefined_trop,
)
from .analyzer import PIPELINES, ChiGenusAnalyzer, TropicalAnalyzer
