from __future__ import annotations

import math
from fractions import Fraction

import pytest

from swm_calc.model.df_identities import DFIdentities
from swm_calc.model.df_integrals import DFIntegrals
from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import InvalidParameterError
from swm_calc.model.exact_algebra import LaurentPoly2
from swm_calc.model.initial_params import InitialParams


def test_generators_are_df_symmetric() -> None:
    for n in (-2, -1, 1, 3):
        assert DFIdentities.is_df_symmetric(DFIdentities.df_symmetric_generator(n, Fraction(5, 2)), Fraction(5, 2))
    assert DFIdentities.is_df_symmetric(DFIdentities.df_symmetric_generator(2, 2.5, center=1), 2.5)
    assert DFIdentities.is_df_symmetric(LaurentPoly2.constant(1), 2)


def test_sum_of_variables_is_not_df_symmetric() -> None:
    poly: LaurentPoly2 = LaurentPoly2.monomial(1, 0) + LaurentPoly2.monomial(0, 1)
    assert not DFIdentities.is_df_symmetric(poly, 2)


def test_taylor_factor_low_orders() -> None:
    a, a_prime = Fraction(-3, 10), Fraction(3, 20)
    assert DFIdentities.taylor_factor("+1", 0, a, a_prime) == LaurentPoly2.constant(1)
    first: LaurentPoly2 = DFIdentities.taylor_factor("+1", 1, a, a_prime)
    assert first == LaurentPoly2.from_map({(-1, 0): -a, (0, -1): -a_prime})
    # a' = -a / rho makes every order DF-symmetric
    assert DFIdentities.is_df_symmetric(first, -a / a_prime)
    assert DFIdentities.is_df_symmetric(DFIdentities.taylor_factor("+1", 3, a, a_prime), -a / a_prime)


def test_minus_taylor_factors_are_centered_at_one() -> None:
    factor: LaurentPoly2 = DFIdentities.taylor_factor("-0", 1, Fraction(1, 3), Fraction(1, 5))
    assert factor.center == 1
    assert factor == LaurentPoly2.from_map({(1, 0): Fraction(1, 3), (0, 1): Fraction(1, 5)}, 1)


def test_mixed_taylor_factor_carries_the_coupling() -> None:
    factor: LaurentPoly2 = DFIdentities.taylor_factor("mixed+01", 1, Fraction(1, 3), Fraction(1, 5), -2)
    # first-order term of (1 - t u/v)^-2
    assert factor.as_map()[(1, -1)] == 2


@pytest.mark.parametrize(("variant", "k"), [("+2", 1), ("mixed+00", 1), ("+0", -1)])
def test_taylor_factor_rejects_bad_input(variant: str, k: int) -> None:
    with pytest.raises(InvalidParameterError):
        DFIdentities.taylor_factor(variant, k, Fraction(1, 3), Fraction(1, 5))


def test_forrester_closed_form_is_symmetric_in_a_and_b() -> None:
    ratio: complex = DFIdentities.forrester_closed_form(-0.3, -0.45, 2.0) / DFIdentities.forrester_closed_form(
        -0.45, -0.3, 2.0
    )
    assert ratio == pytest.approx(1, rel=1e-12)
    assert math.isfinite(abs(DFIdentities.forrester_closed_form(-0.25, -0.25, 4.0)))


def test_transformation_factors_for_equal_exponents() -> None:
    factors: dict[str, complex] = DFIdentities.transformation_factors(-0.3, -0.3, 2.5)
    assert set(factors) == {"+10", "-10", "+01", "-01", "+11", "-11"}
    assert factors["+10"] == pytest.approx(factors["-10"])
    assert factors["+11"] == pytest.approx(factors["+10"] * factors["+01"])


def test_mixed_region_closed_form_unit_square() -> None:
    # B(1/2, 1/2) B(1, 1)
    assert DFIdentities.mixed_region_closed_form("+", 0, 0, -0.5, -0.5, 0, 0) == pytest.approx(math.pi)


def test_generic_point_is_off_the_singular_locus() -> None:
    report = DFIdentities.on_singular_locus(DFParams(0.5, 0.5, -0.3, -0.3, 0.1))
    assert not report.on_locus
    assert report.violated == []


def test_integer_exponent_is_on_the_singular_locus() -> None:
    report = DFIdentities.on_singular_locus(DFParams(1.0, 0.5, -0.3, -0.3, 0.1))
    assert report.on_locus
    assert "H(a,b):x1" in report.violated


def test_constrained_vacuum_exponent_is_on_the_singular_locus() -> None:
    m: int = 2
    params: DFParams = DFParams.constrained(m / (2 * m + 1), 0.1, 1 / (2 * m + 1))
    assert params.a2 == pytest.approx(-m)
    assert "H(a,b):x2" in DFIdentities.on_singular_locus(params).violated


def test_three_point_locus_uses_every_pairing() -> None:
    forms: dict[str, complex] = DFIdentities.singular_locus_families(DFParams.constrained_three_point(-0.3, 2.5))
    assert len(forms) == 6 * 9
    assert len(DFIdentities.singular_locus_families(DFParams.constrained(-0.3, -0.45, 2.5))) == 9


def test_entire_factor_removes_the_sine_poles() -> None:
    a, b, rho = -0.3, -0.45, 2.0
    closed: complex = DFIdentities.forrester_closed_form(a, b, rho)
    assert math.isfinite(abs(DFIdentities.entire_factor(a, b, rho, closed)))


def test_contour_check_needs_interior_point() -> None:
    with pytest.raises(InvalidParameterError):
        DFIdentities.contour_identity_check(-0.42, -1.1, 0.06, 1.5)


def test_expansion_plan_needs_three_point_region() -> None:
    with pytest.raises(InvalidParameterError):
        DFIdentities.expansion_plan(RegionSpec.parse("+00"), DFParams.constrained(-0.3, -0.45, 2.5), 1.0, 0.5)


def test_expansion_plan_of_inner_square() -> None:
    params: DFParams = DFParams.constrained_three_point(-0.3, 2.5)
    plan = DFIdentities.expansion_plan(RegionSpec.parse("I+00"), params, 1.0, 0.25)
    assert plan.small == pytest.approx(0.25)
    assert plan.variant == "+0"
    assert plan.exponents == params.c
    assert str(plan.j_region) == "J+00"
    assert not plan.mixed


@pytest.mark.slow
def test_transformation_identities_at_profile_point() -> None:
    profile = InitialParams.picking_initial_parameters("full")
    a, b, rho = profile.transformation_points[0]
    report = DFIdentities.transformation_check(a, b, rho)
    assert report.passed(profile.tolerances["transformation"]), report.ratios


@pytest.mark.slow
def test_series_expansion_matches_direct_integral() -> None:
    profile = InitialParams.picking_initial_parameters("full")
    a, rho, zs, n_terms = profile.series_point
    report = DFIdentities.series_check(a, rho, zs[0], n_terms)
    assert report.residual < profile.tolerances["series"]


@pytest.mark.slow
def test_contour_identities_at_profile_point() -> None:
    profile = InitialParams.picking_initial_parameters("full")
    a, rho, gamma, z = profile.contour_points[0]
    report = DFIdentities.contour_identity_check(a, rho, gamma, z)
    assert report.max_residual < profile.tolerances["contour"], report.residuals


def test_decoupled_inner_square_expansion() -> None:
    params: DFParams = DFParams(a1=-0.3, a2=0.1, b1=-0.2, b2=-0.5, gamma=0, c1=0.4, c2=-0.3)
    report = DFIdentities.expand_I(RegionSpec.parse("I+00"), params, 1.0, 0.1, 10)
    assert len(report.coefficients) == 10
    assert report.residual < 1e-8


def test_closed_form_entire_factor_has_a_limit_at_the_lattice() -> None:
    b, rho = -0.4, 2.0
    values: list[complex] = [
        DFIdentities.entire_factor(a, b, rho, DFIdentities.forrester_closed_form(a, b, rho))
        for a in (-0.999, -0.9999)
    ]
    assert abs(DFIdentities.forrester_closed_form(-0.9999, b, rho)) > 100 * abs(values[1])
    assert abs(values[1]) == pytest.approx(abs(values[0]), rel=1e-2)


@pytest.mark.slow
def test_entire_factor_scan_towards_minus_one() -> None:
    report = DFIdentities.entire_factor_scan((-0.9, -0.95, -0.975, -0.9875), -0.4, 2.0)
    assert report.bounded
    assert report.cauchy
    for quadrature, closed in zip(report.quadrature, report.closed_form):
        assert abs(abs(quadrature) / abs(closed) - 1) < 1e-5


@pytest.mark.slow
def test_j00_stays_finite_with_exponent_near_minus_one() -> None:
    params: DFParams = DFParams.constrained(-0.95, -0.4, 2.0)
    value: complex = DFIntegrals.df_J(RegionSpec.parse("+00"), params)
    assert math.isfinite(abs(value))
    closed: complex = DFIdentities.forrester_closed_form(-0.95, -0.4, 2.0)
    assert abs(value) == pytest.approx(abs(closed), rel=1e-5)
