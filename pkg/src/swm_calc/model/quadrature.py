from __future__ import annotations

import cmath
import functools
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from scipy import special

from swm_calc.model.errors import AccuracyError, ConvergenceError
from swm_calc.model.initial_params import QuadratureConfig

logger = logging.getLogger("swm_calc")

# (alpha, beta, exponent): the factor (alpha + beta x)^exponent, positive on [0, 1]
Affine = tuple[float, float, complex]


@dataclass(frozen=True)
class TanhSinhRule:
    """Double-exponential rule on (0, 1), kept in log form so endpoint powers never underflow."""

    x: np.ndarray
    log_x: np.ndarray
    log_1mx: np.ndarray
    log_w: np.ndarray

    @property
    def one_minus_x(self) -> np.ndarray:  # noqa: D102
        return np.exp(self.log_1mx)

    @property
    def size(self) -> int:  # noqa: D102
        return int(self.x.size)


@dataclass(frozen=True)
class GaussJacobiRule:
    """Nodes and weights for the integral of s^p g(s) over [0, c]."""

    s: np.ndarray
    w: np.ndarray
    p: float
    c: float


@dataclass(frozen=True)
class QuadratureResult:  # noqa: D101
    value: complex
    estimate: float
    level: int


def affine_log(affine: Sequence[Affine], x: np.ndarray) -> np.ndarray:
    """sum_k e_k log(alpha_k + beta_k x)."""
    total: np.ndarray = np.zeros_like(x, dtype=complex)
    for alpha, beta, exponent in affine:
        total = total + exponent * np.log(alpha + beta * x)
    return total


class Quadrature:
    """Tanh-sinh and Gauss-Jacobi rules and the level-refinement driver."""

    @staticmethod
    def step(level: int) -> float:  # noqa: D102
        return 2.0 ** (-(level - 3))

    @staticmethod
    def t_max(exponents: Sequence[complex], config: QuadratureConfig) -> float:
        """Truncation of the tanh-sinh sum: wider as the weakest endpoint exponent approaches -1."""
        margin: float = min([1.0] + [1.0 + complex(p).real for p in exponents])
        if margin <= 0:
            raise ConvergenceError(f"endpoint exponent {min(complex(p).real for p in exponents)} <= -1")
        margin = max(margin, 1e-3)
        return min(config.max_t_max, max(config.min_t_max, math.asinh(40.0 / (math.pi * margin))))

    @staticmethod
    @functools.lru_cache(maxsize=256)
    def tanh_sinh(level: int, t_max: float) -> TanhSinhRule:
        """x = 1 / (1 + exp(-pi sinh t)) on the grid t = k h, |t| <= t_max."""
        h: float = Quadrature.step(level)
        count: int = math.ceil(t_max / h)
        t: np.ndarray = h * np.arange(-count, count + 1, dtype=float)
        shifted: np.ndarray = math.pi * np.sinh(t)
        log_x: np.ndarray = -np.logaddexp(0.0, -shifted)
        log_1mx: np.ndarray = -np.logaddexp(0.0, shifted)
        log_w: np.ndarray = np.log(h * math.pi * np.cosh(t)) + log_x + log_1mx
        return TanhSinhRule(np.exp(log_x), log_x, log_1mx, log_w)

    @staticmethod
    def half_rule(rule: TanhSinhRule) -> TanhSinhRule:
        """The rule moved to (1/2, 1); log_1mx then measures the distance to 1."""
        return TanhSinhRule(
            0.5 + 0.5 * rule.x,
            np.log(0.5 + 0.5 * rule.x),
            math.log(0.5) + rule.log_1mx,
            rule.log_w + math.log(0.5),
        )

    @staticmethod
    def gauss_jacobi(n: int, p: float, c: float) -> GaussJacobiRule:
        """Gauss-Jacobi rule for the weight s^p on [0, c], p > -1."""
        if p <= -1:
            raise ConvergenceError(f"Gauss-Jacobi weight exponent {p} <= -1")
        x, w = Quadrature._jacobi_roots(n, round(p, 14))
        return GaussJacobiRule(c * (1 + x) / 2, w * (c / 2) ** (p + 1), p, c)

    @staticmethod
    @functools.lru_cache(maxsize=512)
    def _jacobi_roots(n: int, p: float) -> tuple[np.ndarray, np.ndarray]:
        x, w = special.roots_jacobi(n, 0.0, p)
        return np.asarray(x, dtype=float), np.asarray(w, dtype=float)

    @staticmethod
    def jacobi_size(level: int) -> int:  # noqa: D102
        return 8 * level + 8

    @staticmethod
    def unit_power_integral(
        p: complex, q: complex, affine: Sequence[Affine], level: int, config: QuadratureConfig
    ) -> complex:
        """Integral over (0,1) of x^p (1-x)^q prod (alpha + beta x)^e, by tanh-sinh.

        Args:
        ----
            p (complex): Exponent at 0, Re p > -1.
            q (complex): Exponent at 1, Re q > -1.
            affine (Sequence[Affine]): Factors positive on [0, 1].
            level (int): Refinement level.
            config (QuadratureConfig): Truncation bounds.

        Returns:
        -------
            complex: The integral
        """
        rule: TanhSinhRule = Quadrature.tanh_sinh(level, Quadrature.t_max((p, q), config))
        logs: np.ndarray = rule.log_w + p * rule.log_x + q * rule.log_1mx + affine_log(affine, rule.x)
        return complex(np.sum(np.exp(logs)))

    @staticmethod
    def refine(
        compute: Callable[[int], complex], config: QuadratureConfig, label: str = "integral"
    ) -> QuadratureResult:
        """Evaluate at `levels` and `levels - 1`; the difference is the error estimate.

        With the accuracy check on, a failing pair is retried up to `extra_levels` levels deeper.
        """
        level: int = config.levels
        coarse: complex = compute(level - 1)
        while True:
            fine: complex = compute(level)
            estimate, scale = Quadrature._level_gap(fine, coarse, label, level)
            logger.debug("%s: value %s, level %d estimate %.3e", label, fine, level, estimate)
            if not config.check_accuracy or estimate <= config.tolerance * scale:
                return QuadratureResult(fine, estimate, level)
            if level >= config.levels + config.extra_levels:
                raise AccuracyError(f"{label}: levels {level - 1} and {level} differ by {estimate:.3e}", estimate)
            level, coarse = level + 1, fine

    @staticmethod
    def _level_gap(fine: complex, coarse: complex, label: str, level: int) -> tuple[float, float]:
        if not (cmath.isfinite(fine) and cmath.isfinite(coarse)):
            raise AccuracyError(f"{label}: non-finite value {fine} at level {level}", math.inf)
        try:
            return abs(fine - coarse), max(abs(fine), 1e-12)
        except OverflowError as error:
            raise AccuracyError(f"{label}: value {fine} overflows", math.inf) from error
