"""The five classical orthogonal-polynomial families.

Holds the validated family/parameter record (FamilySpec), closed-form values
of the standard-normalization polynomials at the family anchor point,
coefficient expansions in the family basis, and the squared norms under the
probability-normalized weight.  All of it exact.

Conventions
-----------
* Weights are normalized to total mass 1, so every quantity here is rational.
* The family basis is the monomial basis x^i for hermite, laguerre,
  gegenbauer and jacobi; for jacobi-shifted it is the shifted monomials
  (x-1)^i.  The anchor point (0, or 1 for jacobi-shifted) is the basis origin,
  so a polynomial's value at the anchor is its basis coefficient of index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .special import binomial, hyp_terminating, pochhammer

__all__ = [
    "Family",
    "FamilySpec",
    "InvalidFamilySpec",
    "PolyCoeffs",
    "special_value",
    "poly_coeffs",
    "norm_squared",
]


class InvalidFamilySpec(ValueError):
    """Family parameters are missing, extraneous, or out of range."""


class Family(Enum):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    GEGENBAUER = "gegenbauer"
    JACOBI = "jacobi"
    SHIFTED_JACOBI = "jacobi-shifted"


# parameters each family requires; everything else must be absent
_REQUIRED: dict[Family, tuple[str, ...]] = {
    Family.HERMITE: (),
    Family.LAGUERRE: ("alpha",),
    Family.GEGENBAUER: ("lam",),
    Family.JACOBI: ("alpha", "beta"),
    Family.SHIFTED_JACOBI: ("alpha", "beta"),
}


def _coerce(value: Fraction | int | str, name: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidFamilySpec(f"{name} is not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class FamilySpec:
    """A validated (family, parameters) pair.

    Instances that violate the parameter domains (alpha > -1, beta > -1,
    lambda > -1/2 and nonzero) cannot be constructed.
    """

    family: Family
    alpha: Fraction | None = None
    beta: Fraction | None = None
    lam: Fraction | None = None

    def __post_init__(self) -> None:
        required = _REQUIRED[self.family]
        for name in ("alpha", "beta", "lam"):
            value = getattr(self, name)
            if name in required:
                if value is None:
                    raise InvalidFamilySpec(f"{self.family.value} requires {name}")
                object.__setattr__(self, name, _coerce(value, name))
            elif value is not None:
                raise InvalidFamilySpec(f"{self.family.value} takes no {name}")
        if self.alpha is not None and self.alpha <= -1:
            raise InvalidFamilySpec("alpha must be > -1")
        if self.beta is not None and self.beta <= -1:
            raise InvalidFamilySpec("beta must be > -1")
        if self.lam is not None and (self.lam <= Fraction(-1, 2) or self.lam == 0):
            raise InvalidFamilySpec("lambda must be > -1/2 and nonzero")

    @classmethod
    def hermite(cls) -> "FamilySpec":
        return cls(Family.HERMITE)

    @classmethod
    def laguerre(cls, alpha: Fraction | int | str) -> "FamilySpec":
        return cls(Family.LAGUERRE, alpha=alpha)

    @classmethod
    def gegenbauer(cls, lam: Fraction | int | str) -> "FamilySpec":
        return cls(Family.GEGENBAUER, lam=lam)

    @classmethod
    def jacobi(cls, alpha: Fraction | int | str, beta: Fraction | int | str) -> "FamilySpec":
        return cls(Family.JACOBI, alpha=alpha, beta=beta)

    @classmethod
    def shifted_jacobi(
        cls, alpha: Fraction | int | str, beta: Fraction | int | str
    ) -> "FamilySpec":
        return cls(Family.SHIFTED_JACOBI, alpha=alpha, beta=beta)

    @property
    def basis_origin(self) -> Fraction:
        """Point t0 such that basis element i is (x - t0)^i; also the anchor."""
        return Fraction(1) if self.family is Family.SHIFTED_JACOBI else Fraction(0)

    def params(self) -> dict[str, Fraction]:
        """Present parameters keyed by their user-facing names."""
        out: dict[str, Fraction] = {}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        if self.beta is not None:
            out["beta"] = self.beta
        if self.lam is not None:
            out["lambda"] = self.lam
        return out


@dataclass(frozen=True)
class PolyCoeffs:
    """Coefficients of a polynomial in the family basis, index i = basis element i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("PolyCoeffs cannot be empty")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.coeffs[-1] == 0 and len(self.coeffs) > 1:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_at(self, t: Fraction | int) -> Fraction:
        """Value of the polynomial at basis-variable value t (Horner)."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def special_value(spec: FamilySpec, k: int, shift: int = 0) -> Fraction:
    """Value at the family anchor of the degree-k polynomial whose parameters
    are raised by ``shift`` (alpha -> alpha+shift, beta -> beta+shift,
    lambda -> lambda+shift).  These are the coefficients the closed-form
    inverses are built from.

    Closed forms used:
      hermite        H_{2m}(0) = (-1)^m (2m)!/m!, odd degrees vanish
      laguerre       L_k^(a)(0) = (a+1)_k / k!
      gegenbauer     C_{2m}^(l)(0) = (-1)^m (l)_m / m!, odd degrees vanish
      jacobi         P_k^(a,b)(0) via the terminating Gauss sum at 1/2
      jacobi-shifted P_k^(a,b)(1) = (a+1)_k / k!
    """
    if k < 0:
        raise ValueError("degree k must be >= 0")
    if shift < 0:
        raise ValueError("shift must be >= 0")
    fam = spec.family
    if fam is Family.HERMITE:
        if k % 2:
            return Fraction(0)
        m = k // 2
        return Fraction((-1) ** m * factorial(2 * m), factorial(m))
    if fam is Family.LAGUERRE:
        a = spec.alpha + shift
        return pochhammer(a + 1, k) / factorial(k)
    if fam is Family.GEGENBAUER:
        if k % 2:
            return Fraction(0)
        m = k // 2
        return (-1) ** m * pochhammer(spec.lam + shift, m) / factorial(m)
    if fam is Family.JACOBI:
        a = spec.alpha + shift
        b = spec.beta + shift
        return (
            pochhammer(a + 1, k)
            / factorial(k)
            * hyp_terminating(k, [k + a + b + 1], [a + 1], Fraction(1, 2))
        )
    # shifted jacobi: value at 1
    a = spec.alpha + shift
    return pochhammer(a + 1, k) / factorial(k)


def _gauss_to_monomials(pref: Fraction, k: int, upper2: Fraction, lower: Fraction) -> list[Fraction]:
    """Expand pref * sum_s (-k)_s (upper2)_s / ((lower)_s s!) * ((1-x)/2)^s
    into monomial coefficients."""
    coeffs = [Fraction(0)] * (k + 1)
    for s in range(k + 1):
        r = (
            pochhammer(Fraction(-k), s)
            * pochhammer(upper2, s)
            / (pochhammer(lower, s) * factorial(s))
        )
        if r == 0:
            continue
        scaled = pref * r / Fraction(2) ** s
        for j in range(s + 1):
            coeffs[j] += scaled * binomial(s, j) * (-1) ** j
    return coeffs


def poly_coeffs(spec: FamilySpec, k: int) -> PolyCoeffs:
    """Degree-k standard-normalization family polynomial expanded in the
    family basis, straight from the hypergeometric series definitions."""
    if k < 0:
        raise ValueError("degree k must be >= 0")
    fam = spec.family
    if fam is Family.HERMITE:
        # (2x)^k * sum_m (-k/2)_m ((1-k)/2)_m (-1/x^2)^m / m!
        coeffs = [Fraction(0)] * (k + 1)
        for m in range(k // 2 + 1):
            coeffs[k - 2 * m] = (
                Fraction(2) ** k
                * pochhammer(Fraction(-k, 2), m)
                * pochhammer(Fraction(1 - k, 2), m)
                * (-1) ** m
                / factorial(m)
            )
        return PolyCoeffs(tuple(coeffs))
    if fam is Family.LAGUERRE:
        a = spec.alpha
        pref = pochhammer(a + 1, k) / factorial(k)
        coeffs = [
            pref * pochhammer(Fraction(-k), s) / (pochhammer(a + 1, s) * factorial(s))
            for s in range(k + 1)
        ]
        return PolyCoeffs(tuple(coeffs))
    if fam is Family.GEGENBAUER:
        lam = spec.lam
        pref = pochhammer(2 * lam, k) / factorial(k)
        coeffs = _gauss_to_monomials(pref, k, 2 * lam + k, lam + Fraction(1, 2))
        return PolyCoeffs(tuple(coeffs))
    a, b = spec.alpha, spec.beta
    pref = pochhammer(a + 1, k) / factorial(k)
    if fam is Family.JACOBI:
        coeffs = _gauss_to_monomials(pref, k, k + a + b + 1, a + 1)
        return PolyCoeffs(tuple(coeffs))
    # shifted jacobi: the Gauss argument (1-x)/2 equals -(x-1)/2, so the series
    # lands in the (x-1) basis term by term with no re-expansion
    coeffs = [
        pref
        * pochhammer(Fraction(-k), s)
        * pochhammer(k + a + b + 1, s)
        / (pochhammer(a + 1, s) * factorial(s))
        * Fraction(-1, 2) ** s
        for s in range(k + 1)
    ]
    return PolyCoeffs(tuple(coeffs))


def norm_squared(spec: FamilySpec, m: int) -> Fraction:
    """Squared norm h_m of the degree-m standard-normalization polynomial
    under the probability-normalized weight (so h_0 = 1 for every family).

    Computed as the telescoping product of the exact ratios h_m / h_{m-1}:
      hermite     h_m = 2^m m!
      laguerre    h_m = (alpha+1)_m / m!
      gegenbauer  h_m = prod_{r=1..m} (2l+r-1)(l+r-1) / (r (l+r))
      jacobi both h_1/h_0 = (a+1)(b+1)/(a+b+3), then for m >= 2
                  h_m/h_{m-1} = (a+m)(b+m)(a+b+2m-1) / (m (a+b+2m+1)(a+b+m))
    (the m = 1 Jacobi ratio is written with its removable a+b+1 factor
    cancelled, so alpha+beta = -1 stays finite).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    fam = spec.family
    if fam is Family.HERMITE:
        return Fraction(2) ** m * factorial(m)
    if fam is Family.LAGUERRE:
        return pochhammer(spec.alpha + 1, m) / factorial(m)
    if fam is Family.GEGENBAUER:
        lam = spec.lam
        result = Fraction(1)
        for r in range(1, m + 1):
            result *= (2 * lam + r - 1) * (lam + r - 1) / (r * (lam + r))
        return result
    a, b = spec.alpha, spec.beta
    result = Fraction(1)
    if m >= 1:
        result *= (a + 1) * (b + 1) / (a + b + 3)
    for r in range(2, m + 1):
        result *= (a + r) * (b + r) * (a + b + 2 * r - 1) / (r * (a + b + 2 * r + 1) * (a + b + r))
    return result
