from fractions import Fraction

import pytest
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith

from modules.errors import NotFullRank
from modules.exactmath import (
    lattice_index,
    lp_feasible,
    nullspace,
    primitive_vector,
    rank,
    saturation_basis,
    smith_normal_form,
    solve,
    subspace_key,
)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_primitive_vector_clears_denominators_and_gcd():
    assert primitive_vector((2, 4, -6)) == (1, 2, -3)
    assert primitive_vector((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive_vector((0, 0)) == (0, 0)


def test_rank_nullspace_solve():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0
    basis = nullspace([[1, 1, 0]], 3)
    assert len(basis) == 2
    assert all(v[0] + v[1] == 0 for v in basis)
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_subspace_key_is_basis_independent():
    assert subspace_key([(1, 1, 0), (0, 1, 0)], 3) == subspace_key([(2, 0, 0), (0, 3, 0)], 3)


@pytest.mark.parametrize(
    "m",
    [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[1, 2], [3, 4], [5, 6]],
        [[0, 2, 0], [0, 0, 3]],
        [[6, 4], [4, 6]],
    ],
)
def test_smith_normal_form_matches_sympy(m):
    snf = smith_normal_form(m)
    expected = sympy_smith(Matrix(m), domain=ZZ)
    k = min(len(m), len(m[0]))
    assert [abs(d) for d in snf.diag] == [abs(expected[i, i]) for i in range(k)]
    product = _matmul(_matmul([list(r) for r in snf.left], m), [list(r) for r in snf.right])
    for i, row in enumerate(product):
        for j, x in enumerate(row):
            assert x == (snf.diag[i] if i == j else 0)
    ident = _matmul([list(r) for r in snf.right], [list(r) for r in snf.right_inverse])
    assert ident == [[1 if i == j else 0 for j in range(len(m[0]))] for i in range(len(m[0]))]


def test_smith_divisibility_chain():
    diag = [d for d in smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diag if d]
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


def test_saturation_basis_spans_saturated_lattice():
    basis = saturation_basis([(2, 2, 0)], 3)
    assert [primitive_vector(b) for b in basis] == [(1, 1, 0)]
    assert len(saturation_basis([(2, 0), (0, 2)], 2)) == 2
    assert saturation_basis([(0, 0)], 2) == []


def test_lattice_index():
    assert lattice_index([(1, 0)], [(1, 2)], 2) == 2
    assert lattice_index([(2, 0)], [(0, 3)], 2) == 1
    assert lattice_index([(1, 0, 0), (0, 1, 0)], [(1, 1, 3)], 3) == 3
    with pytest.raises(NotFullRank):
        lattice_index([(1, 0)], [(2, 0)], 2)


def test_lp_feasible_returns_witness():
    cons = [((1, 1), 1), ((-1, 0), 0), ((0, -1), 0)]
    ok, x = lp_feasible(cons, 2)
    assert ok
    assert all(sum(a * xi for a, xi in zip(row, x)) <= b for row, b in cons)


def test_lp_infeasible():
    assert lp_feasible([((1,), 1), ((-1,), -2)], 1) == (False, None)
    assert lp_feasible([((1, 0), Fraction(1, 2)), ((-1, 0), Fraction(-1, 3)), ((0, 1), -1), ((0, -1), 0)], 2)[0] is False
