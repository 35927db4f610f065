"""Exact integer and rational linear algebra.

Provides Smith normal form with unimodular transforms, saturated lattice
bases and lattice indices, Fourier-Motzkin feasibility, and the small
Fraction-based Gaussian elimination helpers the polyhedral code relies on.
"""

from .linalg import (
    IntVector,
    dot,
    primitive_vector,
    rref,
    rank,
    nullspace,
    solve,
    subspace_key,
)
from .smith import SmithDecomposition, smith_normal_form, saturation_basis, lattice_index
from .lp import lp_feasible
