"""Tests for family specs, polynomial expansions, anchor values and norms.

The polynomial-valued routes are checked against an independent oracle that
generates the same polynomials purely from their three-term recurrences
(tests/_recurrences.py).
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from _recurrences import (
    gegenbauer_polys,
    hermite_polys,
    jacobi_polys,
    laguerre_polys,
    poly_eval,
    taylor_shift,
)
from hankelinv.orthopoly import (
    Family,
    FamilySpec,
    InvalidFamilySpec,
    PolyCoeffs,
    norm_squared,
    poly_coeffs,
    special_value,
)

HERMITE = FamilySpec.hermite()
LAGUERRE = FamilySpec.laguerre(Fraction(7, 3))
GEGENBAUER = FamilySpec.gegenbauer(Fraction(1, 4))
JACOBI = FamilySpec.jacobi(Fraction(1, 3), Fraction(1, 5))
SHIFTED = FamilySpec.shifted_jacobi(Fraction(1, 3), Fraction(1, 5))


class TestFamilySpec:
    def test_constructors_and_params(self):
        assert HERMITE.params() == {}
        assert LAGUERRE.params() == {"alpha": Fraction(7, 3)}
        assert GEGENBAUER.params() == {"lambda": Fraction(1, 4)}
        assert JACOBI.params() == {"alpha": Fraction(1, 3), "beta": Fraction(1, 5)}
        assert SHIFTED.family is Family.SHIFTED_JACOBI

    def test_basis_origin(self):
        assert HERMITE.basis_origin == 0
        assert JACOBI.basis_origin == 0
        assert SHIFTED.basis_origin == 1

    def test_parameters_are_coerced_to_fractions(self):
        spec = FamilySpec.laguerre("1/2")
        assert spec.alpha == Fraction(1, 2)
        assert isinstance(spec.alpha, Fraction)

    @pytest.mark.parametrize(
        ("family", "kwargs"),
        [
            (Family.HERMITE, {"alpha": 1}),
            (Family.LAGUERRE, {}),
            (Family.LAGUERRE, {"alpha": 0, "lam": 1}),
            (Family.GEGENBAUER, {"alpha": 1, "lam": 1}),
            (Family.JACOBI, {"alpha": 0}),
            (Family.SHIFTED_JACOBI, {"beta": 0}),
        ],
    )
    def test_missing_or_extraneous_parameters(self, family, kwargs):
        with pytest.raises(InvalidFamilySpec):
            FamilySpec(family, **kwargs)

    @pytest.mark.parametrize(
        ("family", "kwargs", "message"),
        [
            (Family.LAGUERRE, {"alpha": -1}, "alpha must be > -1"),
            (Family.LAGUERRE, {"alpha": Fraction(-3, 2)}, "alpha must be > -1"),
            (Family.JACOBI, {"alpha": 0, "beta": -2}, "beta must be > -1"),
            (Family.SHIFTED_JACOBI, {"alpha": -1, "beta": 0}, "alpha must be > -1"),
            (Family.GEGENBAUER, {"lam": 0}, "lambda must be > -1/2 and nonzero"),
            (
                Family.GEGENBAUER,
                {"lam": Fraction(-1, 2)},
                "lambda must be > -1/2 and nonzero",
            ),
        ],
    )
    def test_domain_validation(self, family, kwargs, message):
        with pytest.raises(InvalidFamilySpec, match=message):
            FamilySpec(family, **kwargs)

    def test_boundary_parameters_accepted(self):
        FamilySpec.laguerre(Fraction(-1, 2))
        FamilySpec.jacobi(Fraction(-1, 2), Fraction(-1, 2))
        FamilySpec.gegenbauer(Fraction(-1, 4))

    def test_non_rational_parameter_rejected(self):
        with pytest.raises(InvalidFamilySpec, match="not a rational"):
            FamilySpec.laguerre("x")


class TestPolyCoeffs:
    def test_eval_horner(self):
        p = PolyCoeffs((Fraction(1), Fraction(-2), Fraction(3)))
        x = Fraction(5, 7)
        assert p.eval_at(x) == 1 - 2 * x + 3 * x**2
        assert p.degree == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            PolyCoeffs(())

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(ValueError):
            PolyCoeffs((Fraction(1), Fraction(0)))

    def test_constant_zero_allowed(self):
        assert PolyCoeffs((Fraction(0),)).eval_at(3) == 0


# one oracle per family: the degree-k polynomial in monomial coefficients
def _oracle_polys(spec: FamilySpec, n_max: int) -> list[list[Fraction]]:
    fam = spec.family
    if fam is Family.HERMITE:
        return hermite_polys(n_max)
    if fam is Family.LAGUERRE:
        return laguerre_polys(n_max, spec.alpha)
    if fam is Family.GEGENBAUER:
        return gegenbauer_polys(n_max, spec.lam)
    return jacobi_polys(n_max, spec.alpha, spec.beta)


ALL_SPECS = [HERMITE, LAGUERRE, GEGENBAUER, JACOBI, SHIFTED]


class TestSpecialValue:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family.value)
    def test_matches_recurrence_oracle(self, spec):
        anchor = spec.basis_origin
        oracle = _oracle_polys(spec, 15)
        for k in range(16):
            assert special_value(spec, k) == poly_eval(oracle[k], anchor)

    @pytest.mark.parametrize(
        ("spec", "shifted_spec"),
        [
            (LAGUERRE, FamilySpec.laguerre(Fraction(7, 3) + 2)),
            (GEGENBAUER, FamilySpec.gegenbauer(Fraction(1, 4) + 2)),
            (JACOBI, FamilySpec.jacobi(Fraction(1, 3) + 2, Fraction(1, 5) + 2)),
            (SHIFTED, FamilySpec.shifted_jacobi(Fraction(1, 3) + 2, Fraction(1, 5) + 2)),
        ],
        ids=lambda s: s.family.value,
    )
    def test_shift_equals_raised_parameters(self, spec, shifted_spec):
        for k in range(10):
            assert special_value(spec, k, shift=2) == special_value(shifted_spec, k)

    @pytest.mark.parametrize(
        ("spec", "k", "expected"),
        [
            (HERMITE, 0, Fraction(1)),
            (HERMITE, 2, Fraction(-2)),
            (HERMITE, 4, Fraction(12)),
            (HERMITE, 6, Fraction(-120)),
            (HERMITE, 5, Fraction(0)),
            (FamilySpec.laguerre(0), 7, Fraction(1)),
            (FamilySpec.laguerre(Fraction(1, 2)), 2, Fraction(15, 8)),
            (FamilySpec.gegenbauer(1), 2, Fraction(-1)),
            (FamilySpec.gegenbauer(Fraction(1, 2)), 4, Fraction(3, 8)),
            (FamilySpec.gegenbauer(Fraction(1, 2)), 3, Fraction(0)),
            (FamilySpec.jacobi(0, 0), 2, Fraction(-1, 2)),
            (
                FamilySpec.shifted_jacobi(Fraction(1, 2), Fraction(-1, 2)),
                3,
                Fraction(35, 16),
            ),
        ],
    )
    def test_frozen_values(self, spec, k, expected):
        assert special_value(spec, k) == expected

    def test_negative_arguments_rejected(self):
        with pytest.raises(ValueError):
            special_value(HERMITE, -1)
        with pytest.raises(ValueError):
            special_value(HERMITE, 2, shift=-1)


class TestPolyCoeffsValues:
    @pytest.mark.parametrize(
        "spec",
        [HERMITE, LAGUERRE, GEGENBAUER, JACOBI],
        ids=lambda s: s.family.value,
    )
    def test_matches_recurrence_oracle(self, spec):
        oracle = _oracle_polys(spec, 10)
        for k in range(11):
            assert poly_coeffs(spec, k).coeffs == tuple(oracle[k])

    def test_shifted_jacobi_matches_rebased_oracle(self):
        # expand the recurrence polynomials around 1 independently
        oracle = jacobi_polys(10, SHIFTED.alpha, SHIFTED.beta)
        for k in range(11):
            assert poly_coeffs(SHIFTED, k).coeffs == tuple(taylor_shift(oracle[k], 1))

    def test_hermite_degree_two(self):
        assert poly_coeffs(HERMITE, 2).coeffs == (Fraction(-2), Fraction(0), Fraction(4))

    def test_shifted_jacobi_degree_one(self):
        a, b = Fraction(2), Fraction(3)
        spec = FamilySpec.shifted_jacobi(a, b)
        assert poly_coeffs(spec, 1).coeffs == (a + 1, (a + b + 2) / 2)

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family.value)
    def test_anchor_coefficient_is_special_value(self, spec):
        for k in range(9):
            assert poly_coeffs(spec, k).coeffs[0] == special_value(spec, k)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            poly_coeffs(HERMITE, -1)


class TestNormSquared:
    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.family.value)
    def test_degree_zero_is_one(self, spec):
        assert norm_squared(spec, 0) == 1

    @pytest.mark.parametrize(
        ("spec", "m", "expected"),
        [
            (HERMITE, 1, Fraction(2)),
            (HERMITE, 3, Fraction(48)),
            (FamilySpec.laguerre(0), 4, Fraction(1)),
            (LAGUERRE, 2, Fraction(10, 3) * Fraction(13, 3) / 2),
            (FamilySpec.gegenbauer(Fraction(1, 2)), 1, Fraction(1, 3)),
            (FamilySpec.gegenbauer(Fraction(1, 2)), 2, Fraction(1, 5)),
            (FamilySpec.jacobi(0, 0), 1, Fraction(1, 3)),
            (FamilySpec.jacobi(0, 0), 2, Fraction(1, 5)),
            (FamilySpec.shifted_jacobi(0, 0), 1, Fraction(1, 3)),
        ],
    )
    def test_frozen_values(self, spec, m, expected):
        assert norm_squared(spec, m) == expected

    @pytest.mark.parametrize(
        "spec",
        ALL_SPECS
        + [
            FamilySpec.laguerre(Fraction(-1, 2)),
            FamilySpec.gegenbauer(Fraction(-1, 4)),
            FamilySpec.jacobi(Fraction(-1, 2), Fraction(-1, 2)),
            FamilySpec.shifted_jacobi(Fraction(-1, 2), Fraction(-1, 2)),
        ],
    )
    def test_positive_across_degrees(self, spec):
        for m in range(13):
            assert norm_squared(spec, m) > 0

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            norm_squared(HERMITE, -2)
