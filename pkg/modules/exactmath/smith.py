"""Smith normal form over the integers with explicit unimodular transforms.

The reduction is the textbook pivot/clear/divisibility loop on rectangular
matrices. It also tracks the inverse of the right transform, whose leading
rows are a saturated basis of the row lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import NotFullRank
from .linalg import IntVector, rank

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithDecomposition:
    """``left * m * right`` is diagonal with entries ``diag`` (d1 | d2 | ...)."""

    diag: Tuple[int, ...]
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]
    right_inverse: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def _identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _freeze(m: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(r) for r in m)


class _Reducer:
    def __init__(self, m: Sequence[Sequence[int]]):
        self.a = [[int(x) for x in r] for r in m]
        self.rows = len(self.a)
        self.cols = len(self.a[0])
        self.left = _identity(self.rows)
        self.right = _identity(self.cols)
        self.right_inv = _identity(self.cols)

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.left[i], self.left[j] = self.left[j], self.left[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for r in self.a:
            r[i], r[j] = r[j], r[i]
        for r in self.right:
            r[i], r[j] = r[j], r[i]
        self.right_inv[i], self.right_inv[j] = self.right_inv[j], self.right_inv[i]

    def add_row(self, target, source, q):
        """row_target += q * row_source"""
        self.a[target] = [x + q * y for x, y in zip(self.a[target], self.a[source])]
        self.left[target] = [x + q * y for x, y in zip(self.left[target], self.left[source])]

    def add_col(self, target, source, q):
        """col_target += q * col_source"""
        for r in self.a:
            r[target] += q * r[source]
        for r in self.right:
            r[target] += q * r[source]
        # inverse transform: row_source -= q * row_target
        self.right_inv[source] = [
            x - q * y for x, y in zip(self.right_inv[source], self.right_inv[target])
        ]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        self.left[i] = [-x for x in self.left[i]]

    def smallest_entry(self, t):
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                v = self.a[i][j]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        return best

    def run(self) -> SmithDecomposition:
        a = self.a
        for t in range(min(self.rows, self.cols)):
            while True:
                best = self.smallest_entry(t)
                if best is None:
                    break
                _, i, j = best
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = a[t][t]
                for i in range(t + 1, self.rows):
                    q = a[i][t] // p
                    if q:
                        self.add_row(i, t, -q)
                for j in range(t + 1, self.cols):
                    q = a[t][j] // p
                    if q:
                        self.add_col(j, t, -q)
                if any(a[i][t] for i in range(t + 1, self.rows)) or any(
                    a[t][j] for j in range(t + 1, self.cols)
                ):
                    continue
                bad = next(
                    (
                        i
                        for i in range(t + 1, self.rows)
                        for j in range(t + 1, self.cols)
                        if a[i][j] % p != 0
                    ),
                    None,
                )
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if a[t][t] < 0:
                self.negate_row(t)
        diag = tuple(a[i][i] for i in range(min(self.rows, self.cols)))
        return SmithDecomposition(
            diag=diag,
            left=_freeze(self.left),
            right=_freeze(self.right),
            right_inverse=_freeze(self.right_inv),
        )


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    if not m or not m[0]:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    return _Reducer(m).run()


def saturation_basis(generators: Sequence[Sequence[int]], rank_n: int) -> List[IntVector]:
    """Z-basis of span_Q(generators) intersected with Z^n."""
    gens = [list(g) for g in generators if any(g)]
    if not gens:
        return []
    snf = smith_normal_form(gens)
    return [tuple(snf.right_inverse[i]) for i in range(snf.rank)]


def lattice_index(
    generators_a: Sequence[Sequence[int]],
    generators_b: Sequence[Sequence[int]],
    rank_n: int,
) -> int:
    """[Z^n : L_A + L_B] for the saturated lattices of both spans."""
    basis = saturation_basis(generators_a, rank_n) + saturation_basis(generators_b, rank_n)
    if rank(basis) < rank_n:
        raise NotFullRank(f"generators span a proper subspace of Q^{rank_n}")
    snf = smith_normal_form(basis)
    index = 1
    for d in snf.diag:
        index *= d
    return abs(index)
