"""Closed-form determinants and inverses of the normalized moment matrices.

These are independent second routes to the values the kernel engine in
``gram`` produces; tests require exact agreement between the two (and with
the elimination oracle).  Transcendental-looking printed factors (pi, Gamma
and Barnes-G at non-integer points) cancel under the mass-1 normalization, so
each determinant is reduced factor-by-factor to a rational product before
evaluation.

One published display is known to be suspect: the closed form for the jacobi
determinant.  ``jacobi_det_as_printed`` keeps it verbatim (including its
prefactor) and evaluates it in floating point next to the exact elimination
value, reporting — never asserting — the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mp

from .elimination import bareiss_det
from .gram import ExactMatrix, moment_matrix
from .orthopoly import Family, FamilySpec, norm_squared, special_value
from .special import barnes_g_int, binomial, pochhammer

__all__ = [
    "FormulaId",
    "ExplicitResult",
    "DiscrepancyNote",
    "explicit_det",
    "explicit_inverse",
    "explicit_det_result",
    "explicit_inverse_result",
    "jacobi_det_as_printed",
    "unnormalized_scale",
]

MAX_DIGITS = 100_000


class FormulaId(Enum):
    """Which printed closed form produced a value."""

    HERMITE_DET = "hermite-det"
    HERMITE_INV = "hermite-inv"
    LAGUERRE_DET = "laguerre-det"
    LAGUERRE_INV = "laguerre-inv"
    GEGENBAUER_DET = "gegenbauer-det"
    GEGENBAUER_INV = "gegenbauer-inv"
    JACOBI_DET_AS_PRINTED = "jacobi-det-as-printed"
    JACOBI_INV = "jacobi-inv"
    SHIFTED_JACOBI_DET = "jacobi-shifted-det"
    SHIFTED_JACOBI_INV = "jacobi-shifted-inv"


@dataclass(frozen=True)
class ExplicitResult:
    """A closed-form value plus the identity of the display it came from.

    ``formula_id`` is None only for the exact jacobi determinant, which has no
    trustworthy printed display of its own and is computed as the norm
    product instead.
    """

    value: Fraction | ExactMatrix
    formula_id: FormulaId | None
    normalized: bool = True


_DET_IDS = {
    Family.HERMITE: FormulaId.HERMITE_DET,
    Family.LAGUERRE: FormulaId.LAGUERRE_DET,
    Family.GEGENBAUER: FormulaId.GEGENBAUER_DET,
    Family.JACOBI: None,
    Family.SHIFTED_JACOBI: FormulaId.SHIFTED_JACOBI_DET,
}

_INV_IDS = {
    Family.HERMITE: FormulaId.HERMITE_INV,
    Family.LAGUERRE: FormulaId.LAGUERRE_INV,
    Family.GEGENBAUER: FormulaId.GEGENBAUER_INV,
    Family.JACOBI: FormulaId.JACOBI_INV,
    Family.SHIFTED_JACOBI: FormulaId.SHIFTED_JACOBI_INV,
}


def explicit_det(spec: FamilySpec, n: int) -> Fraction:
    """Closed-form determinant of the normalized (n+1) x (n+1) moment matrix.

    hermite and laguerre come literally from the printed superfactorial /
    rising-factorial products; the other families use the printed products
    with each factor reduced to the rational monic-norm value
    norm_squared(k) / (leading coefficient)^2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    fam = spec.family
    if fam is Family.HERMITE:
        return barnes_g_int(n + 2) / Fraction(2) ** (n * (n + 1) // 2)
    if fam is Family.LAGUERRE:
        result = Fraction(1)
        for k in range(n + 1):
            result *= factorial(k) * pochhammer(spec.alpha + 1, k)
        return result
    if fam is Family.GEGENBAUER:
        lam = spec.lam
        result = Fraction(1)
        for k in range(n + 1):
            # leading coefficient of the degree-k polynomial: 2^k (lam)_k / k!
            result *= norm_squared(spec, k) * Fraction(factorial(k)) ** 2 / (
                Fraction(4) ** k * pochhammer(lam, k) ** 2
            )
        return result
    a, b = spec.alpha, spec.beta
    c = a + b + 1
    result = Fraction(1)
    for k in range(n + 1):
        lead = pochhammer(k + c, k) / factorial(k)  # times 2^-k in the monomial basis
        if fam is Family.JACOBI:
            lead /= Fraction(2) ** k
        result *= norm_squared(spec, k) / lead**2
    return result


def _weight_factor(c: Fraction, k: int) -> Fraction:
    """(2k + c) (c)_k / c with the removable c = 0 pole cancelled."""
    if k == 0:
        return Fraction(1)
    return (2 * k + c) * pochhammer(c + 1, k - 1)


def explicit_inverse(spec: FamilySpec, n: int) -> ExactMatrix:
    """Closed-form inverse of the normalized moment matrix, entry by entry
    from the printed finite sums over k = max(i, j)..n built on the
    shifted-parameter anchor values of ``orthopoly.special_value``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    fam = spec.family
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(i, n + 1):
            value = _inverse_entry(spec, fam, n, i, j)
            rows[i][j] = value
            rows[j][i] = value
    return ExactMatrix(tuple(tuple(row) for row in rows))


def _inverse_entry(spec: FamilySpec, fam: Family, n: int, i: int, j: int) -> Fraction:
    lo = max(i, j)
    if fam is Family.HERMITE:
        acc = Fraction(0)
        for k in range(lo, n + 1):
            acc += (
                binomial(k, i)
                * special_value(spec, k - i)
                * binomial(k, j)
                * special_value(spec, k - j)
                / (factorial(k) * Fraction(2) ** k)
            )
        return Fraction(2) ** (i + j) * acc
    if fam is Family.LAGUERRE:
        a = spec.alpha
        acc = Fraction(0)
        for k in range(lo, n + 1):
            acc += pochhammer(a + 1, k) / factorial(k) * binomial(k, i) * binomial(k, j)
        return acc / ((-1) ** (i + j) * pochhammer(a + 1, i) * pochhammer(a + 1, j))
    if fam is Family.GEGENBAUER:
        lam = spec.lam
        acc = Fraction(0)
        for k in range(lo, n + 1):
            acc += (
                factorial(k)
                * (lam + k)
                * special_value(spec, k - i, shift=i)
                * special_value(spec, k - j, shift=j)
                / pochhammer(2 * lam, k)
            )
        # prefactor rescaled for the mass-1 matrix: Gamma ratios collapse to 1/lam
        return (
            Fraction(2) ** (i + j)
            * pochhammer(lam, i)
            * pochhammer(lam, j)
            / (factorial(i) * factorial(j) * lam)
            * acc
        )
    a, b = spec.alpha, spec.beta
    c = a + b + 1
    if fam is Family.JACOBI:
        acc = Fraction(0)
        for k in range(lo, n + 1):
            acc += (
                factorial(k)
                * _weight_factor(c, k)
                * pochhammer(k + c, i)
                * special_value(spec, k - i, shift=i)
                * pochhammer(k + c, j)
                * special_value(spec, k - j, shift=j)
                / (pochhammer(a + 1, k) * pochhammer(b + 1, k))
            )
        return (-1) ** (i + j) * acc / (Fraction(2) ** (i + j) * factorial(i) * factorial(j))
    # shifted jacobi, with (c)_i (c+i)_k / (c)_k collapsed to (k+c)_i so the
    # valid alpha + beta = -1 corner stays finite
    acc = Fraction(0)
    for k in range(lo, n + 1):
        acc += (
            _weight_factor(c, k)
            * pochhammer(a + 1, k)
            / (factorial(k) * pochhammer(b + 1, k))
            * binomial(k, i)
            * binomial(k, j)
            * pochhammer(k + c, i)
            * pochhammer(k + c, j)
        )
    return (-1) ** (i + j) * acc / (pochhammer(a + 1, i) * pochhammer(a + 1, j))


def explicit_det_result(spec: FamilySpec, n: int) -> ExplicitResult:
    return ExplicitResult(value=explicit_det(spec, n), formula_id=_DET_IDS[spec.family])


def explicit_inverse_result(spec: FamilySpec, n: int) -> ExplicitResult:
    return ExplicitResult(value=explicit_inverse(spec, n), formula_id=_INV_IDS[spec.family])


@dataclass(frozen=True)
class DiscrepancyNote:
    """Comparison of the as-printed jacobi determinant against the exact one."""

    exact: Fraction
    printed: mpmath.mpf
    rel_error: mpmath.mpf
    tolerance: mpmath.mpf
    agrees: bool
    digits: int


def _to_mpf(value: Fraction) -> mpmath.mpf:
    return mp.mpf(value.numerator) / value.denominator


def jacobi_det_as_printed(
    spec: FamilySpec, n: int, digits: int = 17
) -> tuple[mpmath.mpf, DiscrepancyNote]:
    """Evaluate the suspect printed jacobi determinant formula verbatim in
    floating point and compare it with the exact Bareiss determinant of the
    corrected matrix.  The verdict is reported, never asserted."""
    if spec.family is not Family.JACOBI:
        raise ValueError("the as-printed determinant comparison is jacobi-only")
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be in 1..{MAX_DIGITS}")
    exact = bareiss_det(moment_matrix(spec, n))
    with mp.workdps(digits + 15):
        a = _to_mpf(spec.alpha)
        b = _to_mpf(spec.beta)
        try:
            prefactor = (
                mp.gamma(a + b + 1)
                * mp.power(2, -(2 * a + 2 * b + n + 1))
                * mp.pi
                / (mp.gamma(a + b + 1) * mp.gamma(a + b + 1))
            ) ** (n + 1)
            block1 = (
                mp.barnesg(n + 2)
                * mp.barnesg((a + b + 1) / 2) ** 2
                * mp.barnesg((a + b + 2) / 2) ** 2
                / (
                    mp.barnesg((a + b + 3) / 2 + n) ** 2
                    * mp.barnesg((a + b + 4) / 2 + n) ** 2
                )
            )
            block2 = (
                mp.barnesg(a + b + n + 2)
                * mp.barnesg(a + n + 2)
                * mp.barnesg(b + n + 2)
                / (
                    mp.rf((a + b + 1) / 2, n + 1)
                    * mp.barnesg(a + b + 1)
                    * mp.barnesg(a + 1)
                    * mp.barnesg(b + 1)
                )
            )
            printed = prefactor * block1 * block2
        except ZeroDivisionError:
            printed = mp.nan
        exact_f = _to_mpf(exact)
        tolerance = mp.mpf(10) ** (-mp.mpf(digits) / 2)
        if mp.isfinite(printed):
            rel_error = abs(printed - exact_f) / abs(exact_f)
        else:
            rel_error = mp.inf
        agrees = bool(mp.isfinite(printed) and rel_error <= tolerance)
    note = DiscrepancyNote(
        exact=exact,
        printed=printed,
        rel_error=rel_error,
        tolerance=tolerance,
        agrees=agrees,
        digits=digits,
    )
    return printed, note


def unnormalized_scale(spec: FamilySpec, digits: int = 17) -> mpmath.mpf:
    """Total mass of the family's unnormalized weight, to ``digits``
    significant figures.  Multiplying the normalized matrix by this scale
    recovers the unnormalized moment matrix.  The only operation here that is
    allowed to return a non-rational."""
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be in 1..{MAX_DIGITS}")
    with mp.workdps(digits + 10):
        fam = spec.family
        if fam is Family.HERMITE:
            return mp.sqrt(mp.pi)
        if fam is Family.LAGUERRE:
            return mp.gamma(_to_mpf(spec.alpha) + 1)
        if fam is Family.GEGENBAUER:
            return mp.beta(mp.mpf(1) / 2, _to_mpf(spec.lam) + mp.mpf(1) / 2)
        a = _to_mpf(spec.alpha)
        b = _to_mpf(spec.beta)
        return mp.power(2, a + b + 1) * mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(a + b + 2)
