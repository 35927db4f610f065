"""Tropical cycles: weighted complete fans with WeightPoly coefficients.

Covers cone and fan canonical forms, common refinements, the balancing
condition, stable intersection by fan displacement and the exponential of a
dual hypersurface.
"""

from .cones import Cone, Fan, common_refinement, orthant_fan
from .weights import WeightPoly, rational_to_text
from .cycle import (
    TropicalCycle,
    add_cycles,
    cycle_equal,
    degree,
    evaluate_weights,
    graded_component,
    make_cycle,
    negate_cycle,
    refine,
    scale_cycle,
    subtract_cycles,
    support_cones,
    support_equal,
    top_component,
    transport_weights,
    unit_cycle,
    zero_cycle,
)
from .balance import BalanceReport, is_balanced, lattice_normal
from .stable import DEFAULT_RETRIES, draw_displacement, intersect_all, stable_intersection
from .hypersurface import (
    dual_hypersurface,
    exp_cycle,
    exp_cycle_iterated,
    exp_cycle_on,
    exp_weight,
    hypersurface_series,
    negate_exp_cycle,
)
