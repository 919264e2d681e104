from __future__ import annotations

import math

import numpy as np
import pytest

from swm_calc.model.errors import AccuracyError, ConvergenceError, InvalidParameterError
from swm_calc.model.initial_params import InitialParams, QuadratureConfig
from swm_calc.model.quadrature import Quadrature
from swm_calc.model.special_functions import SpecialFunctions


@pytest.fixture()
def config() -> QuadratureConfig:
    return InitialParams.quadrature_config()


def test_arcsine_integral_is_pi(config: QuadratureConfig) -> None:
    value: complex = Quadrature.unit_power_integral(-0.5, -0.5, (), config.levels, config)
    assert value == pytest.approx(math.pi, abs=1e-10)


@pytest.mark.parametrize(("p", "q"), [(-0.3, -0.45), (0.5, -0.9), (-0.95, 1.2)])
def test_unit_power_integral_is_beta(p: float, q: float, config: QuadratureConfig) -> None:
    value: complex = Quadrature.unit_power_integral(p, q, (), config.levels, config)
    assert value == pytest.approx(SpecialFunctions.beta(p + 1, q + 1), rel=1e-8)


def test_unit_power_integral_with_affine_factor(config: QuadratureConfig) -> None:
    value: complex = Quadrature.unit_power_integral(0, 0, [(1.0, 1.0, 1.0)], config.levels, config)
    assert value == pytest.approx(1.5, rel=1e-12)


def test_half_rule_covers_upper_half(config: QuadratureConfig) -> None:
    rule = Quadrature.half_rule(Quadrature.tanh_sinh(config.levels, config.min_t_max))
    # nodes next to 1/2 round to it in x; the distance to 1 stays exact in log form
    assert np.all(rule.x >= 0.5)
    assert np.all(np.isfinite(rule.log_1mx))
    assert np.all(rule.log_1mx <= math.log(0.5))
    assert float(np.min(rule.log_1mx)) < -50
    assert float(np.sum(np.exp(rule.log_w))) == pytest.approx(0.5, rel=1e-10)


def test_gauss_jacobi_integrates_weighted_polynomial() -> None:
    rule = Quadrature.gauss_jacobi(10, -0.5, 1.0)
    assert float(np.sum(rule.w * rule.s**2)) == pytest.approx(0.4, rel=1e-12)


def test_gauss_jacobi_rejects_nonintegrable_weight() -> None:
    with pytest.raises(ConvergenceError):
        Quadrature.gauss_jacobi(10, -1.0, 1.0)


def test_t_max_widens_near_minus_one(config: QuadratureConfig) -> None:
    assert Quadrature.t_max((0.0, 0.0), config) == config.min_t_max
    assert Quadrature.t_max((-0.999, 0.0), config) == config.max_t_max
    with pytest.raises(ConvergenceError):
        Quadrature.t_max((-1.0, 0.2), config)


def test_refine_raises_when_levels_disagree(config: QuadratureConfig) -> None:
    def compute(level: int) -> complex:
        return 1.0 if level == config.levels else 2.0

    with pytest.raises(AccuracyError) as error:
        Quadrature.refine(compute, config, "toy")
    assert error.value.estimate == pytest.approx(1.0)


@pytest.mark.parametrize("bad", [complex("nan"), complex(math.inf, 0), complex(1e308, 1e308)])
def test_refine_rejects_non_finite_or_overflowing_values(bad: complex, config: QuadratureConfig) -> None:
    with pytest.raises(AccuracyError) as error:
        Quadrature.refine(lambda level: bad, config, "toy")
    assert error.value.estimate == math.inf


def test_refine_goes_one_level_deeper_before_failing(config: QuadratureConfig) -> None:
    values: dict[int, complex] = {config.levels - 1: 2.0, config.levels: 1.0, config.levels + 1: 1.0}
    result = Quadrature.refine(values.__getitem__, config, "toy")
    assert result.value == 1.0
    assert result.level == config.levels + 1
    assert result.estimate == 0.0
    strict: QuadratureConfig = InitialParams.quadrature_config(extra_levels=0)
    with pytest.raises(AccuracyError):
        Quadrature.refine(values.__getitem__, strict, "toy")


def test_default_refinement_depth_is_eight(config: QuadratureConfig) -> None:
    assert config.levels == 8


def test_refine_without_accuracy_check_reports_estimate() -> None:
    config: QuadratureConfig = InitialParams.quadrature_config(check_accuracy=False)
    result = Quadrature.refine(lambda level: float(level), config)
    assert result.value == config.levels
    assert result.estimate == pytest.approx(1.0)
    assert result.level == config.levels


@pytest.mark.parametrize(
    "overrides",
    [{"levels": 2}, {"precision": 32}, {"tolerance": 0.0}, {"min_t_max": 10.0}, {"extra_levels": -1}],
)
def test_invalid_quadrature_config(overrides: dict[str, object]) -> None:
    with pytest.raises(InvalidParameterError):
        InitialParams.quadrature_config(**overrides)
