from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from swm_calc.model.df_integrals import DFIntegrals, VariableSpec
from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import InvalidParameterError
from swm_calc.model.exact_algebra import ExactAlgebra, LaurentPoly1, LaurentPoly2, Scalar
from swm_calc.model.initial_params import QuadratureConfig
from swm_calc.model.special_functions import SpecialFunctions, sin_pi

logger = logging.getLogger("swm_calc")

TRANSFORMED_REGIONS: tuple[str, ...] = ("+10", "-10", "+01", "-01", "+11", "-11")

# (sigma, d, center): the Taylor variable is sigma * (w - center)^d
_SUBSTITUTIONS: dict[str, tuple[int, int, int]] = {
    "+0": (1, 1, 0),
    "+1": (1, -1, 0),
    "-0": (-1, 1, 1),
    "-1": (-1, -1, 1),
}

# per-variable substitutions of the mixed families
_MIXED: dict[str, tuple[str, str]] = {
    "+01": ("+0", "+1"),
    "+10": ("+1", "+0"),
    "-01": ("-0", "-1"),
    "-10": ("-1", "-0"),
}


@dataclass(frozen=True)
class TransformationReport:
    """J-integrals of every region and the moduli of their ratios to J^+_{0,0} over the predicted factor."""

    values: dict[str, complex]
    ratios: dict[str, float]
    residual: float

    def passed(self, tolerance: float) -> bool:  # noqa: D102
        return self.residual < tolerance


@dataclass(frozen=True)
class ExpansionReport:
    """Direct I-integral against its truncated expansion in J-integrals."""

    region: str
    direct: complex
    series: complex
    coefficients: tuple[complex, ...]
    residual: float


@dataclass(frozen=True)
class ContourReport:
    """Relative residuals of the three contour identities."""

    terms: dict[str, dict[str, complex]]
    residuals: dict[str, float]

    @property
    def max_residual(self) -> float:  # noqa: D102
        return max(self.residuals.values())


@dataclass(frozen=True)
class SingularLocusReport:  # noqa: D101
    on_locus: bool
    violated: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class EntireFactorReport:
    """T(a, b) along a path towards a lattice hyperplane, from quadrature and from the closed form."""

    path: tuple[complex, ...]
    quadrature: tuple[complex, ...]
    closed_form: tuple[complex, ...]
    increments: tuple[float, ...]
    bounded: bool
    cauchy: bool


@dataclass(frozen=True)
class ExpansionPlan:
    """How an I-region reduces to a J-region: substitutions, Taylor exponents and prefactor."""

    small: complex
    variant: str
    exponents: tuple[complex, complex]
    j_region: RegionSpec
    j_params: DFParams
    prefactor: complex
    phase: complex
    mixed: bool


def _binomial(e: Scalar, n: int) -> Scalar:
    """Generalized binomial coefficient C(e, n)."""
    value: Scalar = Fraction(1) if isinstance(e, (int, Fraction)) else 1.0
    for i in range(n):
        value = value * (e - i) / (i + 1)
    return value


def _s(x: complex) -> complex:
    return sin_pi(x)


def _reciprocal(x: Scalar) -> Scalar:
    return Fraction(1) / x if isinstance(x, (int, Fraction)) else 1 / x


class DFIdentities:
    """Closed forms and identity checks for two-variable Dotsenko-Fateev integrals."""

    @staticmethod
    def forrester_closed_form(a: complex, b: complex, rho: complex, precision: int = 53) -> complex:
        """Closed form of J^+_{0,0}[1] at the constrained parameters ({a, a'}, {b, b'}, 1), up to a phase.

        Args:
        ----
            a (complex): Exponent at 0 of u.
            b (complex): Exponent at 1 of u.
            rho (complex): Ratio fixing a' = -a/rho and b' = -b/rho.
            precision (int): Working precision of the Gamma functions in bits.

        Returns:
        -------
            complex: rho'^2 s(a+b)/s(a) G(rho'-1)/G(rho') G(1+b)G(1-a-b)/G(-a) G(a')G(b')/G(1+a'+b')
        """
        rho_prime: complex = 1 / complex(rho)
        a_prime: complex = DFParams.prime(a, rho)
        b_prime: complex = DFParams.prime(b, rho)
        gammas: complex = SpecialFunctions.gamma_ratio(
            (rho_prime - 1, 1 + b, 1 - a - b, a_prime, b_prime),
            (rho_prime, -a, 1 + a_prime + b_prime),
            precision,
        )
        return rho_prime**2 * _s(a + b) / _s(a) * gammas

    @staticmethod
    def transformation_factors(a: complex, b: complex, rho: complex) -> dict[str, complex]:
        """Predicted J^pm_{i,j} / J^+_{0,0} up to phase, as sine ratios."""
        a_prime: complex = DFParams.prime(a, rho)
        b_prime: complex = DFParams.prime(b, rho)
        factors: dict[str, complex] = {
            "+10": _s(a) / _s(a + b),
            "-10": _s(b) / _s(a + b),
            "+01": _s(a_prime) / _s(a_prime + b_prime),
            "-01": _s(b_prime) / _s(a_prime + b_prime),
        }
        factors["+11"] = factors["+10"] * factors["+01"]
        factors["-11"] = factors["-10"] * factors["-01"]
        return factors

    @staticmethod
    def transformation_check(
        a: complex,
        b: complex,
        rho: complex,
        weight_function: LaurentPoly2 | None = None,
        config: QuadratureConfig | None = None,
    ) -> TransformationReport:
        """Compare every J^pm_{i,j}[F] with its sine multiple of J^+_{0,0}[F] in modulus.

        Args:
        ----
            a (complex): Exponent at 0.
            b (complex): Exponent at 1.
            rho (complex): Ratio of the constrained parameters.
            weight_function (LaurentPoly2 | None): A DF-symmetric F; None means F = 1.
            config (QuadratureConfig | None): Quadrature settings.

        Returns:
        -------
            TransformationReport: values, normalized ratio moduli and max | |ratio| - 1 |
        """
        params: DFParams = DFParams.constrained(a, b, rho)
        base: complex = DFIntegrals.df_J(RegionSpec.parse("+00"), params, weight_function, config)
        values: dict[str, complex] = {"+00": base}
        ratios: dict[str, float] = {}
        for region, factor in DFIdentities.transformation_factors(a, b, rho).items():
            values[region] = DFIntegrals.df_J(RegionSpec.parse(region), params, weight_function, config)
            ratios[region] = abs(values[region] / base) / abs(factor)
        residual: float = max(abs(ratio - 1) for ratio in ratios.values())
        logger.info("transformation check at (%s, %s, %s): residual %.3e", a, b, rho, residual)
        return TransformationReport(values, ratios, residual)

    @staticmethod
    def is_df_symmetric(poly: LaurentPoly2, rho: Scalar, tolerance: float | None = None) -> bool:
        """(1 - 1/rho) (d_u F)|_{u=v} == d_v (F|_{u=v}).

        Exact for rational data; with float data (or an explicit tolerance) the largest coefficient of the
        difference is compared against tolerance times the largest coefficient of F.
        """
        lhs: LaurentPoly1 = ExactAlgebra.laurent_restrict_diagonal(poly.partial_u()).scale(1 - _reciprocal(rho))
        rhs: LaurentPoly1 = ExactAlgebra.laurent_restrict_diagonal(poly).derivative()
        difference: LaurentPoly1 = lhs - rhs
        exact: bool = isinstance(rho, (int, Fraction)) and all(isinstance(c, (int, Fraction)) for _, c in poly.terms)
        if tolerance is None and exact:
            return difference.is_zero()
        scale: float = max((abs(c) for _, c in poly.terms), default=1.0)
        return difference.max_abs_coefficient() <= (tolerance or 1e-12) * max(scale, 1.0)

    @staticmethod
    def df_symmetric_generator(n: int, rho: Scalar, center: int = 0) -> LaurentPoly2:
        """(u - x)^n - rho^-1 (v - x)^n."""
        return LaurentPoly2.monomial(n, 0, 1, center) + LaurentPoly2.monomial(0, n, -_reciprocal(rho), center)

    @staticmethod
    def taylor_factor(variant: str, k: int, a: Scalar, a_prime: Scalar, coupling: Scalar = -2) -> LaurentPoly2:
        """k-th Taylor coefficient in t of a generating product of the series expansions.

        "+0": (1-tU)^a (1-tV)^a', "+1": (1-t/U)^a (1-t/V)^a', "-0": (1-t(1-U))^a (1-t(1-V))^a',
        "-1": (1-t/(1-U))^a (1-t/(1-V))^a'. "mixed+01", "mixed+10", "mixed-01", "mixed-10" combine one
        substitution per variable and add (1 - t x1 x2)^coupling.

        Args:
        ----
            variant (str): The generating product.
            k (int): Taylor order, k >= 0.
            a (Scalar): Exponent of the u-factor.
            a_prime (Scalar): Exponent of the v-factor.
            coupling (Scalar): Exponent of the product factor of the mixed families.

        Returns:
        -------
            LaurentPoly2: The coefficient, centered at 0 for "+" variants and at 1 for "-" variants
        """
        if k < 0:
            raise InvalidParameterError(f"Taylor order must be nonnegative, got {k}")
        if variant in _SUBSTITUTIONS:
            first, second, mixed = variant, variant, False
        elif variant.startswith("mixed") and variant[5:] in _MIXED:
            (first, second), mixed = _MIXED[variant[5:]], True
        else:
            raise InvalidParameterError(f"unknown Taylor variant {variant!r}")
        sigma1, d1, center = _SUBSTITUTIONS[first]
        sigma2, d2, _ = _SUBSTITUTIONS[second]
        terms: dict[tuple[int, int], Scalar] = {}
        for l in range(k + 1 if mixed else 1):  # noqa: E741
            for i in range(k - l + 1):
                j: int = k - l - i
                coefficient: Scalar = (
                    _binomial(a, i)
                    * _binomial(a_prime, j)
                    * _binomial(coupling, l)
                    * (-sigma1) ** (i + l)
                    * (-sigma2) ** (j + l)
                    * (-1) ** l
                )
                key: tuple[int, int] = (d1 * (i + l), d2 * (j + l))
                terms[key] = terms.get(key, 0) + coefficient
        return LaurentPoly2.from_map(terms, center)

    @staticmethod
    def expansion_plan(region: RegionSpec, params: DFParams, z1: float, z2: float) -> ExpansionPlan:
        """Substitution that turns the I-region into a J-region with a Taylor series in z2/z1 or 1 - z2/z1."""
        if region.kind != "I":
            raise InvalidParameterError(f"expansion needs an I-region, got {region}")
        a1, a2 = params.a
        b1, b2 = params.b
        c1, c2 = params.c
        gamma: complex = params.gamma
        lam: complex = params.coupling
        total: complex = a1 + a2 + b1 + b2 + c1 + c2
        width: float = z1 - z2
        z: float = z2 / z1
        zeta: float = width / z1
        twisted: complex = cmath.exp(1j * math.pi * lam)
        key: str = f"{region.sign}{region.i}{region.j}"
        if key == "+00":
            return ExpansionPlan(
                z, "+0", (c1, c2), RegionSpec.parse("+00"), DFParams(a1, a2, b1, b2, gamma),
                z2 ** (a1 + b1 + a2 + b2 + lam + 2) * z1 ** (c1 + c2), 1, False,
            )
        if key == "+11":
            return ExpansionPlan(
                z, "+1", (b1, b2), RegionSpec.parse("+11"), DFParams(a1 + b1, a2 + b2, c1, c2, gamma),
                z1 ** (total + lam + 2), 1, False,
            )
        if key == "-00":
            return ExpansionPlan(
                zeta, "-0", (a1, a2), RegionSpec.parse("+00"), DFParams(b1, b2, c1, c2, gamma),
                width ** (b1 + c1 + b2 + c2 + lam + 2) * z1 ** (a1 + a2), 1, False,
            )
        if key == "-11":
            return ExpansionPlan(
                zeta, "-1", (b1, b2), RegionSpec.parse("-11"), DFParams(a1, a2, b1 + c1, b2 + c2, gamma),
                z1 ** (total + lam + 2), 1, False,
            )
        if key == "+01":
            return ExpansionPlan(
                z, "mixed+01", (c1, b2), RegionSpec.parse("+01"), DFParams(a1, a2 + b2 + lam, b1, c2, 0),
                z2 ** (a1 + b1 + 1) * z1 ** (c1 + a2 + b2 + c2 + lam + 1), twisted, True,
            )
        if key == "+10":
            return ExpansionPlan(
                z, "mixed+10", (b1, c2), RegionSpec.parse("+10"), DFParams(a1 + b1 + lam, a2, c1, b2, 0),
                z2 ** (a2 + b2 + 1) * z1 ** (a1 + b1 + c1 + c2 + lam + 1), 1, True,
            )
        if key == "-01":
            return ExpansionPlan(
                zeta, "mixed-01", (a1, b2), RegionSpec.parse("-01"), DFParams(b1, a2, c1, b2 + c2 + lam, 0),
                width ** (b1 + c1 + 1) * z1 ** (a1 + a2 + b2 + c2 + lam + 1), 1, True,
            )
        return ExpansionPlan(
            zeta, "mixed-10", (b1, a2), RegionSpec.parse("-10"), DFParams(a1, b2, b1 + c1 + lam, c2, 0),
            width ** (b2 + c2 + 1) * z1 ** (a1 + a2 + b1 + c1 + lam + 1), twisted, True,
        )

    @staticmethod
    def expand_I(  # noqa: N802
        region: RegionSpec,
        params: DFParams,
        z1: float,
        z2: float,
        n_terms: int,
        config: QuadratureConfig | None = None,
    ) -> ExpansionReport:
        """Truncated expansion sum_{k<n_terms} t^k J[F_k] of an I-integral, compared in modulus with df_I.

        Args:
        ----
            region (RegionSpec): Any of the eight I-regions.
            params (DFParams): The seven exponents.
            z1 (float): Outer point.
            z2 (float): Inner point, 0 < z2 < z1.
            n_terms (int): Number of Taylor orders kept.
            config (QuadratureConfig | None): Quadrature settings.

        Returns:
        -------
            ExpansionReport: direct value, series value, the J-coefficients and the relative modulus residual
        """
        plan: ExpansionPlan = DFIdentities.expansion_plan(region, params, z1, z2)
        e1, e2 = plan.exponents
        coefficients: list[complex] = []
        for k in range(n_terms):
            factor: LaurentPoly2 = DFIdentities.taylor_factor(plan.variant, k, e1, e2, params.coupling)
            coefficients.append(DFIntegrals.df_J(plan.j_region, plan.j_params, factor, config))
        series: complex = plan.phase * plan.prefactor * sum(
            (plan.small**k * c for k, c in enumerate(coefficients)), 0j
        )
        direct: complex = DFIntegrals.df_I(region, params, z1, z2, config=config)
        residual: float = abs(abs(series) - abs(direct)) / abs(direct)
        logger.info("expansion of %s with %d terms: residual %.3e", region, n_terms, residual)
        return ExpansionReport(str(region), direct, series, tuple(coefficients), residual)

    @staticmethod
    def series_check(
        a: complex, rho: complex, z: float, n_terms: int, config: QuadratureConfig | None = None
    ) -> ExpansionReport:
        """I^+_{0,0} at (z1, z2) = (1, z) with the constrained three-point parameters at gamma = 1."""
        return DFIdentities.expand_I(
            RegionSpec.parse("I+00"), DFParams.constrained_three_point(a, rho), 1.0, z, n_terms, config
        )

    @staticmethod
    def mixed_region_closed_form(
        sign: Literal["+", "-"], i: int, j: int, a1: complex, b1: complex, a2: complex, b2: complex
    ) -> complex:
        """J^pm_{i,j}[1] at gamma = 0 as a product of one-variable beta integrals."""
        u_interval, v_interval = RegionSpec("J", sign, i, j).box()
        names: dict[tuple[float, float], Literal["unit", "upper", "lower"]] = {
            (0.0, 1.0): "unit",
            (1.0, math.inf): "upper",
            (-math.inf, 0.0): "lower",
        }
        return SpecialFunctions.interval_beta(names[u_interval], a1, b1) * SpecialFunctions.interval_beta(
            names[v_interval], a2, b2
        )

    @staticmethod
    def contour_identity_check(
        a: complex, rho: complex, gamma: complex, z: float, config: QuadratureConfig | None = None
    ) -> ContourReport:
        """Three linear relations among region integrals with exponent a at 0, z, 1 on u and a' on v.

        Every factor is taken in absolute value; explicit side weights pick the part of a square with
        u > v (weights (1, 0)) or u < v (weights (0, 1)).

        Args:
        ----
            a (complex): Exponent of u at each of 0, z, 1.
            rho (complex): a' = -a/rho is the exponent of v.
            gamma (complex): Coupling, |u - v|^(-2 gamma).
            z (float): Middle point, 0 < z < 1.
            config (QuadratureConfig | None): Quadrature settings.

        Returns:
        -------
            ContourReport: the weighted terms and |sum| / max |term| per relation
        """
        if not 0 < z < 1:
            raise InvalidParameterError(f"z must lie in (0, 1), got {z}")
        a_prime: complex = DFParams.prime(a, rho)
        lam: complex = -2 * gamma
        inf: float = math.inf
        upper: tuple[float, float] = (1.0, inf)
        middle: tuple[float, float] = (z, 1.0)
        lower: tuple[float, float] = (-inf, 0.0)
        both: tuple[complex, complex] = (1, 1)
        above: tuple[complex, complex] = (1, 0)
        below: tuple[complex, complex] = (0, 1)

        def region(
            name: str, u_box: tuple[float, float], v_box: tuple[float, float], weights: tuple[complex, complex]
        ) -> complex:
            u: VariableSpec = VariableSpec(u_box, ((0.0, a), (z, a), (1.0, a)))
            v: VariableSpec = VariableSpec(v_box, ((0.0, a_prime), (z, a_prime), (1.0, a_prime)))
            return DFIntegrals.integrate(u, v, lam, weights=weights, config=config, label=f"contour {name}").value

        k1: complex = region("K1", middle, upper, both)
        k2: complex = region("K2", lower, upper, both)
        relations: dict[str, dict[str, complex]] = {
            "E1": {
                "P": _s(2 * a - 2 * gamma) * region("P", upper, upper, above),
                "Q": _s(2 * a) * region("Q", upper, upper, below),
                "K1": _s(a) * k1,
                "K2": -_s(a) * k2,
            },
            "E2": {
                "K1": _s(2 * a_prime - 2 * gamma) * k1,
                "R>": _s(a_prime - 2 * gamma) * region("R>", middle, middle, below),
                "R<": _s(a_prime) * region("R<", middle, middle, above),
                "M01": -_s(a_prime) * region("M01", middle, lower, both),
            },
            "E3": {
                "K2": _s(2 * a_prime) * k2,
                "M10": _s(a_prime) * region("M10", lower, middle, both),
                "R4": -_s(a_prime) * region("R4", lower, lower, below),
                "R5": -_s(a_prime - 2 * gamma) * region("R5", lower, lower, above),
            },
        }
        residuals: dict[str, float] = {
            name: abs(sum(terms.values(), 0j)) / max(abs(t) for t in terms.values())
            for name, terms in relations.items()
        }
        logger.info("contour identities at (%s, %s, %s, %s): %s", a, rho, gamma, z, residuals)
        return ContourReport(relations, residuals)

    @staticmethod
    def singular_locus_families(params: DFParams) -> dict[str, complex]:
        """Named linear forms whose integer values make up the singular locus.

        With c = 0 these are the nine forms of H_{a,b,gamma}; otherwise the union over the pairs
        (a,b), (b,c), (a,c), (a+b,c), (b+c,a), (a+c,b).
        """
        g2: complex = 2 * params.gamma

        def family(name: str, x: tuple[complex, complex], y: tuple[complex, complex]) -> dict[str, complex]:
            x1, x2 = x
            y1, y2 = y
            return {
                f"{name}:x1": x1,
                f"{name}:x2": x2,
                f"{name}:x1+x2-2g": x1 + x2 - g2,
                f"{name}:y1": y1,
                f"{name}:y2": y2,
                f"{name}:y1+y2-2g": y1 + y2 - g2,
                f"{name}:x1+y1": x1 + y1,
                f"{name}:x2+y2": x2 + y2,
                f"{name}:x1+x2+y1+y2-2g": x1 + x2 + y1 + y2 - g2,
            }

        a, b, c = params.a, params.b, params.c
        if c == (0, 0):
            return family("H(a,b)", a, b)

        def plus(x: tuple[complex, complex], y: tuple[complex, complex]) -> tuple[complex, complex]:
            return x[0] + y[0], x[1] + y[1]

        forms: dict[str, complex] = {}
        for name, x, y in (
            ("H(a,b)", a, b),
            ("H(b,c)", b, c),
            ("H(a,c)", a, c),
            ("H(a+b,c)", plus(a, b), c),
            ("H(b+c,a)", plus(b, c), a),
            ("H(a+c,b)", plus(a, c), b),
        ):
            forms.update(family(name, x, y))
        return forms

    @staticmethod
    def on_singular_locus(params: DFParams, tolerance: float = 1e-9) -> SingularLocusReport:
        """Whether some listed form takes an integer value (within tolerance), and which ones do."""
        violated: list[str] = [
            name
            for name, value in DFIdentities.singular_locus_families(params).items()
            if abs(complex(value) - round(complex(value).real)) < tolerance
        ]
        return SingularLocusReport(bool(violated), violated)

    @staticmethod
    def entire_factor(a: complex, b: complex, rho: complex, value: complex) -> complex:
        """T = J s(a) s(b) s(a') s(b') / (s(a+b) s(a'+b'))."""
        a_prime: complex = DFParams.prime(a, rho)
        b_prime: complex = DFParams.prime(b, rho)
        return value * _s(a) * _s(b) * _s(a_prime) * _s(b_prime) / (_s(a + b) * _s(a_prime + b_prime))

    @staticmethod
    def entire_factor_scan(
        path: tuple[complex, ...],
        b: complex,
        rho: complex,
        weight_function: LaurentPoly2 | None = None,
        config: QuadratureConfig | None = None,
        bound: float = 1e6,
    ) -> EntireFactorReport:
        """Follow T(a, b) along a path of a-values approaching a lattice point.

        The report is bounded when every |T| stays below `bound` and Cauchy when the increments between
        consecutive points shrink. The closed-form column is filled for F = 1 only.
        """
        quadrature: list[complex] = []
        closed: list[complex] = []
        for a in path:
            params: DFParams = DFParams.constrained(a, b, rho)
            value: complex = DFIntegrals.df_J(RegionSpec.parse("+00"), params, weight_function, config)
            quadrature.append(DFIdentities.entire_factor(a, b, rho, value))
            if weight_function is None:
                closed.append(DFIdentities.entire_factor(a, b, rho, DFIdentities.forrester_closed_form(a, b, rho)))
        increments: tuple[float, ...] = tuple(abs(abs(t1) - abs(t0)) for t0, t1 in zip(quadrature, quadrature[1:]))
        bounded: bool = all(math.isfinite(abs(t)) and abs(t) < bound for t in quadrature)
        cauchy: bool = all(later <= earlier for earlier, later in zip(increments, increments[1:]))
        logger.info("entire factor scan: |T| = %s", [abs(t) for t in quadrature])
        return EntireFactorReport(tuple(path), tuple(quadrature), tuple(closed), increments, bounded, cauchy)
