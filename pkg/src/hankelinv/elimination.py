"""Independent elimination oracle: fraction-free Bareiss determinant and
Gauss-Jordan inverse.

Deliberately knows nothing about moments, polynomial families, or kernels, so
it can arbitrate between the engine and the closed forms.
"""

from __future__ import annotations

from fractions import Fraction

from .gram import ExactMatrix

__all__ = ["SingularMatrix", "bareiss_det", "gauss_inverse"]


class SingularMatrix(ArithmeticError):
    """gauss_inverse was asked to invert a singular matrix."""


def bareiss_det(matrix: ExactMatrix) -> Fraction:
    """Exact determinant by the fraction-free Bareiss recurrence.

    Every division is exact (the running entries are determinants of leading
    minors, which keeps intermediate growth polynomial).  Row exchanges flip
    the tracked sign; a fully zero pivot column means determinant 0.
    """
    size = matrix.size
    a = [list(row) for row in matrix.rows]
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[size - 1][size - 1]


def gauss_inverse(matrix: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination on the augmented matrix,
    pivoting on the first nonzero entry of each column."""
    size = matrix.size
    a = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(size)]
         for i, row in enumerate(matrix.rows)]
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {col}")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        a[col] = [v / pivot for v in a[col]]
        for r in range(size):
            if r == col or a[r][col] == 0:
                continue
            factor = a[r][col]
            a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return ExactMatrix(tuple(tuple(row[size:]) for row in a))
