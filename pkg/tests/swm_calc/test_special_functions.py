from __future__ import annotations

import cmath
import math

import mpmath
import pytest

from swm_calc.model.errors import DomainError, InvalidParameterError, PoleError
from swm_calc.model.special_functions import SpecialFunctions, e_factor


def test_log_gamma_at_integer_and_half() -> None:
    assert SpecialFunctions.log_gamma(5) == pytest.approx(math.log(24), abs=1e-13)
    assert SpecialFunctions.log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-13)


@pytest.mark.parametrize("z", [0.3, 0.25 + 0.5j, -1.7])
def test_gamma_reflection_formula(z: complex) -> None:
    product: complex = SpecialFunctions.gamma(z) * SpecialFunctions.gamma(1 - z)
    assert product == pytest.approx(math.pi / cmath.sin(math.pi * z), rel=1e-12)


@pytest.mark.parametrize("z", [0, -1, -4])
def test_gamma_poles(z: int) -> None:
    with pytest.raises(PoleError):
        SpecialFunctions.log_gamma(z)
    with pytest.raises(PoleError):
        SpecialFunctions.gamma(z)


def test_gamma_ratio_with_denominator_pole_vanishes() -> None:
    assert SpecialFunctions.gamma_ratio((1.5,), (-2,)) == 0


def test_beta_matches_gamma_quotient() -> None:
    assert SpecialFunctions.beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)
    assert SpecialFunctions.beta(2, 3) == pytest.approx(1 / 12, rel=1e-13)


@pytest.mark.parametrize(
    ("interval", "arguments"),
    [("unit", ("0.4", "0.3")), ("upper", ("0.3", "0.3")), ("lower", ("0.4", "0.3"))],
)
def test_interval_beta_against_mpmath_beta(interval: str, arguments: tuple[str, str]) -> None:
    # a = -0.6, b = -0.7: B(a+1, b+1), B(-a-b-1, b+1) and B(a+1, -a-b-1)
    with mpmath.workdps(30):
        expected: mpmath.mpf = mpmath.beta(*(mpmath.mpf(x) for x in arguments))
    value: complex = SpecialFunctions.interval_beta(interval, -0.6, -0.7)  # type: ignore[arg-type]
    assert value == pytest.approx(float(expected), rel=1e-12)


def test_unit_interval_beta_reference_value() -> None:
    assert SpecialFunctions.interval_beta("unit", -0.6, -0.7) == pytest.approx(5.11209124445735, rel=1e-12)
    assert SpecialFunctions.beta(0.4, 0.3) == pytest.approx(5.11209124445735, rel=1e-12)


def test_interval_beta_rejects_unknown_interval() -> None:
    with pytest.raises(InvalidParameterError):
        SpecialFunctions.interval_beta("middle", 0.1, 0.2)  # type: ignore[arg-type]


def test_phase_power_branches() -> None:
    assert SpecialFunctions.phase_power(-1, 0.5, "+") == pytest.approx(1j, abs=1e-15)
    assert SpecialFunctions.phase_power(-1, -0.5, "+") == pytest.approx(-1j, abs=1e-15)
    assert SpecialFunctions.phase_power(-1, 0.5, "-") == pytest.approx(-1j, abs=1e-15)
    assert SpecialFunctions.phase_power(-4, 0.5) == pytest.approx(2, abs=1e-15)
    assert SpecialFunctions.phase_power(4, 0.5, "+") == pytest.approx(2, abs=1e-15)


def test_phase_power_is_singular_at_zero() -> None:
    with pytest.raises(DomainError):
        SpecialFunctions.phase_power(0, 0.5, "+")


def test_phase_gap_ratio_is_continuous_at_zero() -> None:
    assert SpecialFunctions.phase_gap_ratio(0) == pytest.approx(-1j * math.pi)
    assert SpecialFunctions.phase_gap_ratio(1e-6) == pytest.approx(SpecialFunctions.phase_gap_ratio(1e-9), rel=1e-5)



def test_phase_gap_ratio_away_from_zero() -> None:
    eps: float = 0.3
    assert SpecialFunctions.phase_gap_ratio(eps) == pytest.approx(-(cmath.exp(1j * math.pi * eps) - 1) / eps, rel=1e-14)
    assert SpecialFunctions.phase_gap_ratio(-0.3 + 0.2j) == pytest.approx(
        -(cmath.exp(1j * math.pi * (-0.3 + 0.2j)) - 1) / (-0.3 + 0.2j), rel=1e-14
    )


def test_e_factor_values() -> None:
    assert e_factor(0.5) == pytest.approx(2, abs=1e-15)
    assert abs(e_factor(3)) < 1e-14


def test_minus_c_factor_swaps_a_and_b() -> None:
    a, b, gamma = (0.13, -0.27), (0.31, 0.44), 0.37
    assert SpecialFunctions.c_factor("-", 1, 1, a, b, gamma) == pytest.approx(
        SpecialFunctions.c_factor("+", 1, 1, b, a, gamma), abs=1e-15
    )
    assert SpecialFunctions.c_factor("-", 0, 0, a, b, gamma) == SpecialFunctions.c_factor("+", 0, 0, a, b, gamma)


def test_c_lmn_reduces_to_two_variable_factor() -> None:
    a, b, gamma = (0.13, -0.27), (0.31, 0.44), 0.37
    assert SpecialFunctions.c_lmn(0, 2, 0, a, b, {(1, 2): gamma}) == pytest.approx(
        SpecialFunctions.c_factor("+", 0, 0, a, b, gamma), rel=1e-12
    )


def test_c_lmn_rejects_inconsistent_sizes() -> None:
    with pytest.raises(InvalidParameterError):
        SpecialFunctions.c_lmn(1, 1, 0, (0.1,), (0.2,), {})


def test_d_factor_only_for_mixed_regions() -> None:
    with pytest.raises(InvalidParameterError):
        SpecialFunctions.d_factor("+", 0, 0, (0.1, 0.2), (0.3, 0.4), (0.5, 0.6), 0.7)


def test_trig_prefactor_dispatch() -> None:
    assert SpecialFunctions.trig_prefactor("e", 0.5) == pytest.approx(2)
    with pytest.raises(InvalidParameterError):
        SpecialFunctions.trig_prefactor("f", 0.5)
