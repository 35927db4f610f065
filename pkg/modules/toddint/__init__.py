"""Todd measures on rational cones and integration of tropical cycles."""

from .measure import (
    AdditivityViolation,
    ToddMeasure,
    check_additivity,
    chi_y_via_todd,
    integrate,
)
from .integrator import ToddIntegrator
