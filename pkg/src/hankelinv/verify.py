"""Cross-route verification: run every exact path against the others and the
elimination oracle, and report per-check results with witnesses.

Mismatches are reported, never raised, so a failing closed form still yields
a complete report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_form import explicit_det, explicit_inverse
from .elimination import bareiss_det, gauss_inverse
from .gram import ExactMatrix, det_from_norms, gram_schmidt, kernel_inverse, moment_matrix
from .orthopoly import Family, FamilySpec

__all__ = ["Witness", "CheckResult", "VerifyReport", "verify"]

_PARITY_FAMILIES = (Family.HERMITE, Family.GEGENBAUER)


@dataclass(frozen=True)
class Witness:
    """First offending entry of a failed check.  (row, col) = (-1, -1) marks a
    scalar (determinant) comparison."""

    row: int
    col: int
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class VerifyReport:
    spec: FamilySpec
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _compare_matrices(name: str, expected: ExactMatrix, actual: ExactMatrix) -> CheckResult:
    for i in range(expected.size):
        for j in range(expected.size):
            if expected.entry(i, j) != actual.entry(i, j):
                return CheckResult(
                    name, False, Witness(i, j, expected.entry(i, j), actual.entry(i, j))
                )
    return CheckResult(name, True)


def _compare_scalars(name: str, expected: Fraction, actual: Fraction) -> CheckResult:
    if expected != actual:
        return CheckResult(name, False, Witness(-1, -1, expected, actual))
    return CheckResult(name, True)


def _symmetry(name: str, matrix: ExactMatrix) -> CheckResult:
    for i in range(matrix.size):
        for j in range(i):
            if matrix.entry(i, j) != matrix.entry(j, i):
                return CheckResult(
                    name, False, Witness(i, j, matrix.entry(j, i), matrix.entry(i, j))
                )
    return CheckResult(name, True)


def _parity(name: str, matrix: ExactMatrix) -> CheckResult:
    for i in range(matrix.size):
        for j in range(matrix.size):
            if (i + j) % 2 and matrix.entry(i, j) != 0:
                return CheckResult(name, False, Witness(i, j, Fraction(0), matrix.entry(i, j)))
    return CheckResult(name, True)


def verify(spec: FamilySpec, n: int) -> VerifyReport:
    """Run the full battery for one (family, parameters, n):

      a. explicit_inverse x moment_matrix equals the identity exactly
      b. explicit, kernel, and elimination inverses agree entrywise
      c. explicit, norm-product, and Bareiss determinants agree
      d. symmetry everywhere; checkerboard zeros for the even-weight families
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    matrix = moment_matrix(spec, n)
    table = gram_schmidt(spec, n)
    explicit_inv = explicit_inverse(spec, n)
    kernel_inv = kernel_inverse(table)
    oracle_inv = gauss_inverse(matrix)
    det_explicit = explicit_det(spec, n)
    det_norms = det_from_norms(table)
    det_oracle = bareiss_det(matrix)

    checks = [
        _symmetry("matrix_symmetric", matrix),
        _compare_matrices(
            "inverse_identity", ExactMatrix.identity(n + 1), explicit_inv @ matrix
        ),
        _compare_matrices("explicit_equals_kernel", explicit_inv, kernel_inv),
        _compare_matrices("explicit_equals_elimination", explicit_inv, oracle_inv),
        _compare_scalars("det_explicit_equals_norm_product", det_explicit, det_norms),
        _compare_scalars("det_explicit_equals_bareiss", det_explicit, det_oracle),
        _symmetry("inverse_symmetric", explicit_inv),
    ]
    if spec.family in _PARITY_FAMILIES:
        checks.append(_parity("matrix_checkerboard_zeros", matrix))
        checks.append(_parity("inverse_checkerboard_zeros", explicit_inv))
    return VerifyReport(spec=spec, n=n, checks=tuple(checks))
