from __future__ import annotations

import mpmath
import pytest

from swm_calc.model.df_identities import DFIdentities
from swm_calc.model.df_integrals import DFIntegrals, VariableSpec
from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import ConvergenceError, InvalidParameterError
from swm_calc.model.exact_algebra import LaurentPoly2
from swm_calc.model.initial_params import InitialParams
from swm_calc.model.special_functions import SpecialFunctions


def _three_point_factor(interval: tuple[float, float], a: float, b: float, c: float, z1: float, z2: float) -> float:
    def integrand(x: mpmath.mpf) -> mpmath.mpf:
        return abs(x) ** a * abs(x - z2) ** b * abs(x - z1) ** c

    return float(mpmath.quad(integrand, list(interval)))


def test_decoupled_unit_square_is_beta_product() -> None:
    params: DFParams = DFParams(a1=-0.3, a2=0.2, b1=-0.45, b2=-0.6, gamma=0)
    expected: complex = SpecialFunctions.beta(0.7, 0.55) * SpecialFunctions.beta(1.2, 0.4)
    assert DFIntegrals.df_J(RegionSpec.parse("+00"), params) == pytest.approx(expected, rel=1e-8)


def test_monomial_weight_shifts_exponent() -> None:
    params: DFParams = DFParams(a1=-0.3, a2=0.2, b1=-0.45, b2=-0.6, gamma=0)
    weight: LaurentPoly2 = LaurentPoly2.monomial(1, 0)
    expected: complex = SpecialFunctions.beta(1.7, 0.55) * SpecialFunctions.beta(1.2, 0.4)
    assert DFIntegrals.df_J(RegionSpec.parse("+00"), params, weight) == pytest.approx(expected, rel=1e-8)


@pytest.mark.parametrize("region", ["+01", "+10", "-01", "-10"])
def test_decoupled_mixed_regions_match_closed_form(region: str) -> None:
    a1, b1, a2, b2 = -0.5, -0.6, -0.45, -0.7
    params: DFParams = DFParams(a1=a1, a2=a2, b1=b1, b2=b2, gamma=0)
    spec: RegionSpec = RegionSpec.parse(region)
    expected: complex = DFIdentities.mixed_region_closed_form(spec.sign, spec.i, spec.j, a1, b1, a2, b2)
    assert DFIntegrals.df_J(spec, params) == pytest.approx(expected, rel=1e-8)


@pytest.mark.slow
def test_unit_square_matches_closed_form_at_profile_points() -> None:
    profile = InitialParams.picking_initial_parameters("full")
    for a, b, rho in profile.forrester_points:
        value: complex = DFIntegrals.df_J(RegionSpec.parse("+00"), DFParams.constrained(a, b, rho))
        closed: complex = DFIdentities.forrester_closed_form(a, b, rho)
        assert abs(abs(value) / abs(closed) - 1) < profile.tolerances["forrester"], (a, b, rho)


def test_decoupled_three_point_integral_factorizes() -> None:
    z1, z2 = 1.0, 0.5
    params: DFParams = DFParams(a1=-0.3, a2=0.1, b1=-0.2, b2=-0.5, gamma=0, c1=0.4, c2=-0.3)
    expected: float = _three_point_factor((0.0, z2), -0.3, -0.2, 0.4, z1, z2) * _three_point_factor(
        (0.0, z2), 0.1, -0.5, -0.3, z1, z2
    )
    assert DFIntegrals.df_I(RegionSpec.parse("I+00"), params, z1, z2) == pytest.approx(expected, rel=1e-8)


def test_three_point_integral_is_homogeneous() -> None:
    params: DFParams = DFParams(a1=-0.3, a2=-0.5, b1=-0.2, b2=-0.4, gamma=0.3, c1=0.4, c2=-0.3)
    region: RegionSpec = RegionSpec.parse("I+01")
    base: complex = DFIntegrals.df_I(region, params, 1.0, 0.4)
    scaled: complex = DFIntegrals.df_I(region, params, 2.0, 0.8)
    assert scaled == pytest.approx(2 ** params.total() * base, rel=1e-7)


def test_integrate_with_explicit_side_weights_splits_the_square() -> None:
    u: VariableSpec = VariableSpec((0.0, 1.0), ())
    v: VariableSpec = VariableSpec((0.0, 1.0), ())
    above = DFIntegrals.integrate(u, v, 0, weights=(1, 0)).value
    below = DFIntegrals.integrate(u, v, 0, weights=(0, 1)).value
    assert above == pytest.approx(0.5, rel=1e-7)
    assert below == pytest.approx(0.5, rel=1e-7)


def test_region_kind_is_checked() -> None:
    params: DFParams = DFParams.constrained(-0.3, -0.45, 2.0)
    with pytest.raises(InvalidParameterError):
        DFIntegrals.df_J(RegionSpec.parse("I+00"), params)
    with pytest.raises(InvalidParameterError):
        DFIntegrals.df_I(RegionSpec.parse("+00"), params, 1.0, 0.5)
    with pytest.raises(InvalidParameterError):
        DFIntegrals.df_I(RegionSpec.parse("I+00"), params, 1.0, 0.5, pole="z3")


def test_divergent_edge_exponent_is_rejected() -> None:
    params: DFParams = DFParams(a1=-1.2, a2=0.2, b1=-0.45, b2=-0.6, gamma=0)
    with pytest.raises(ConvergenceError):
        DFIntegrals.df_J(RegionSpec.parse("+00"), params)
