from __future__ import annotations

import cmath
import functools
import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from swm_calc.model.df_regions import DFParams, Interval, RegionSpec
from swm_calc.model.errors import ConvergenceError, InvalidParameterError, PoleError
from swm_calc.model.exact_algebra import LaurentPoly2
from swm_calc.model.initial_params import InitialParams, QuadratureConfig
from swm_calc.model.quadrature import (
    Affine,
    GaussJacobiRule,
    Quadrature,
    QuadratureResult,
    TanhSinhRule,
    affine_log,
)
from swm_calc.model.special_functions import SpecialFunctions

logger = logging.getLogger("swm_calc")

_ZERO = 1e-12
_LOG_HALF = math.log(0.5)
# (s, log s, log(1 - s)) at s = 0
_ORIGIN: tuple[np.ndarray, np.ndarray, np.ndarray] = (np.zeros(1), np.full(1, -np.inf), np.zeros(1))


@dataclass(frozen=True)
class VariableSpec:
    """Integration interval of one variable and its factors |w - pole|^exponent."""

    interval: Interval
    poles: tuple[tuple[float, complex], ...]
    sign: int = 1

    def with_monomial(self, center: float, power: int) -> VariableSpec:
        """Fold (w - center)^power into the pole exponents, keeping track of the sign."""
        if power == 0:
            return self
        poles: dict[float, complex] = dict(self.poles)
        poles[center] = poles.get(center, 0) + power
        sign: int = self.sign * (-1) ** power if self.interval[1] <= center else self.sign
        return VariableSpec(self.interval, tuple(sorted(poles.items())), sign)


@dataclass(frozen=True)
class BoxProblem:
    """Integral of prod |u - p|^e prod |v - q|^f |u - v|^coupling over a box.

    weights = (w_>, w_<) multiply the parts with u > v and u < v; None means the +i0 prescription
    (1, e^{i pi coupling}).
    """

    u: VariableSpec
    v: VariableSpec
    coupling: complex
    weights: tuple[complex, complex] | None = None

    def side_weights(self) -> tuple[complex, complex]:  # noqa: D102
        if self.weights is None:
            return 1 + 0j, cmath.exp(1j * math.pi * self.coupling)
        return complex(self.weights[0]), complex(self.weights[1])


@dataclass(frozen=True)
class LocalFactors:
    """One variable pulled back to x in (0, 1): exp(log_const) x^p (1-x)^q prod (alpha + beta x)^e.

    The original variable is w = (n0 + n1 x) / (d0 + d1 x).
    """

    log_const: complex
    p: complex
    q: complex
    affine: tuple[Affine, ...]
    numerator: tuple[float, float]
    denominator: tuple[float, float]

    def reflected(self) -> LocalFactors:
        """Same factors in the variable 1 - x."""
        n0, n1 = self.numerator
        d0, d1 = self.denominator
        return LocalFactors(
            self.log_const,
            self.q,
            self.p,
            tuple((alpha + beta, -beta, e) for alpha, beta, e in self.affine),
            (n0 + n1, -n1),
            (d0 + d1, -d1),
        )

    def log_density(self, rule: TanhSinhRule) -> np.ndarray:  # noqa: D102
        return self.p * rule.log_x + self.q * rule.log_1mx + affine_log(self.affine, rule.x)


class CouplingKind(str, Enum):  # noqa: D101
    SMOOTH = "smooth"
    CORNER = "corner"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class Bilinear:
    """B(x, y) = alpha + beta x + gamma y + delta x y with u - v = B / (D_u D_v)."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def corners(self) -> tuple[float, float, float, float]:
        """Values at (0,0), (1,0), (0,1), (1,1)."""
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        return a, a + b, a + c, a + b + c + d

    def reflect_x(self) -> Bilinear:  # noqa: D102
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        return Bilinear(a + b, -b, c + d, -d)

    def reflect_y(self) -> Bilinear:  # noqa: D102
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        return Bilinear(a + c, b + d, -c, -d)

    def negated(self) -> Bilinear:  # noqa: D102
        return Bilinear(-self.alpha, -self.beta, -self.gamma, -self.delta)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:  # noqa: D102
        return self.alpha + self.beta * x + self.gamma * y + self.delta * x * y


def _chart(spec: VariableSpec) -> LocalFactors:
    """Map the interval to (0, 1): affine for finite intervals, reciprocal for half-lines."""
    low, high = spec.interval
    p: complex = 0j
    q: complex = 0j
    log_const: complex = 0j
    affine: list[Affine] = []
    if math.isfinite(low) and math.isfinite(high):
        width: float = high - low
        log_const += math.log(width)
        for pole, e in spec.poles:
            if pole == low:
                p += e
                log_const += e * math.log(width)
            elif pole == high:
                q += e
                log_const += e * math.log(width)
            elif low < pole < high:
                raise InvalidParameterError(f"pole {pole} lies inside the interval {spec.interval}")
            else:
                side: float = 1.0 if low > pole else -1.0
                affine.append((abs(low - pole), side * width, e))
        return LocalFactors(log_const, p, q, tuple(affine), (low, width), (1.0, 0.0))
    if math.isfinite(low):
        # w = low / x
        if low <= 0:
            raise InvalidParameterError(f"half-line ({low}, inf) must start at a positive point")
        log_const += math.log(low)
        p -= 2
        for pole, e in spec.poles:
            if pole > low:
                raise InvalidParameterError(f"pole {pole} lies inside the interval {spec.interval}")
            p -= e
            if pole == low:
                q += e
                log_const += e * math.log(low)
            else:
                affine.append((low, -pole, e))
        return LocalFactors(log_const, p, q, tuple(affine), (low, 0.0), (0.0, 1.0))
    # w = high - scale (1 - x) / x, scale = distance to the nearest point on the right
    distances: list[float] = [pole - high for pole, _ in spec.poles if pole > high]
    scale: float = min(distances) if distances else 1.0
    log_const += math.log(scale)
    p -= 2
    for pole, e in spec.poles:
        if pole < high:
            raise InvalidParameterError(f"pole {pole} lies inside the interval {spec.interval}")
        p -= e
        if pole == high:
            q += e
            log_const += e * math.log(scale)
        else:
            affine.append((scale, pole - high - scale, e))
    return LocalFactors(log_const, p, q, tuple(affine), (-scale, high + scale), (0.0, 1.0))


def _coupling(u: LocalFactors, v: LocalFactors) -> Bilinear:
    nu0, nu1 = u.numerator
    du0, du1 = u.denominator
    nv0, nv1 = v.numerator
    dv0, dv1 = v.denominator
    return Bilinear(nu0 * dv0 - nv0 * du0, nu1 * dv0 - nv0 * du1, nu0 * dv1 - nv1 * du0, nu1 * dv1 - nv1 * du1)


def _classify(coupling: Bilinear) -> tuple[CouplingKind, tuple[bool, bool]]:
    """Kind of zero set of B on the closed unit square; for a corner, which axes to reflect."""
    corners: tuple[float, float, float, float] = coupling.corners()
    scale: float = max(abs(c) for c in (coupling.alpha, coupling.beta, coupling.gamma, coupling.delta))
    zero: list[bool] = [abs(c) <= _ZERO * scale for c in corners]
    if not any(zero) and (all(c > 0 for c in corners) or all(c < 0 for c in corners)):
        return CouplingKind.SMOOTH, (False, False)
    if (
        abs(coupling.alpha) <= _ZERO * scale
        and abs(coupling.delta) <= _ZERO * scale
        and abs(coupling.beta + coupling.gamma) <= _ZERO * scale
    ):
        return CouplingKind.DIAGONAL, (False, False)
    if sum(zero) == 1:
        others: list[float] = [c for c, z in zip(corners, zero) if not z]
        if all(c > 0 for c in others) or all(c < 0 for c in others):
            index: int = zero.index(True)
            return CouplingKind.CORNER, (index in (1, 3), index in (2, 3))
    raise ConvergenceError(f"u - v changes sign across the box in an unsupported way: corners {corners}")


def _radial_exponent_check(exponent: complex, where: str) -> None:
    if exponent.real <= -2:
        raise ConvergenceError(f"radial exponent {exponent} <= -2 at {where}")
    if abs(exponent + 1) < 1e-10:
        raise PoleError(f"radial exponent {exponent} hits the pole -1 at {where}")


def _radial_integral(
    inner: np.ndarray, inner_at_zero: complex, rule: GaussJacobiRule, exponent: complex, finite_part: bool
) -> complex:
    """Integral of s^exponent G(s) over [0, c] from G on the Gauss-Jacobi nodes."""
    twist: np.ndarray = np.exp(1j * exponent.imag * np.log(rule.s))
    if not finite_part:
        return complex(np.sum(rule.w * twist * inner))
    tail: complex = inner_at_zero * rule.c ** (exponent + 1) / (exponent + 1)
    return complex(np.sum(rule.w * twist * (inner - inner_at_zero) / rule.s)) + tail


class DFIntegrals:
    """Two-variable Dotsenko-Fateev integrals by singularity-adapted quadrature."""

    @staticmethod
    def box_integral(problem: BoxProblem, config: QuadratureConfig | None = None) -> QuadratureResult:
        """Value of one box problem, refined over two levels."""
        config = config or InitialParams.quadrature_config()
        return Quadrature.refine(lambda level: DFIntegrals._box_value(problem, level, config), config, "box integral")

    @staticmethod
    @functools.lru_cache(maxsize=4096)
    def _box_value(problem: BoxProblem, level: int, config: QuadratureConfig) -> complex:
        u: LocalFactors = _chart(problem.u)
        v: LocalFactors = _chart(problem.v)
        lam: complex = complex(problem.coupling)
        coupling: Bilinear = _coupling(u, v)
        # |u - v|^lam = |B|^lam D_u^-lam D_v^-lam
        if u.denominator[1] != 0:
            u = replace(u, p=u.p - lam)
        if v.denominator[1] != 0:
            v = replace(v, p=v.p - lam)
        w_above, w_below = problem.side_weights()
        constant: complex = cmath.exp(u.log_const + v.log_const) * problem.u.sign * problem.v.sign
        kind, (flip_x, flip_y) = _classify(coupling)

        if kind is not CouplingKind.DIAGONAL or (lam == 0 and w_above == w_below):
            if kind is CouplingKind.DIAGONAL:
                weight: complex = w_above
            else:
                inside: float = coupling.evaluate(np.array(0.5), np.array(0.5)).item()
                if kind is CouplingKind.CORNER:
                    trial: Bilinear = coupling.reflect_x() if flip_x else coupling
                    trial = trial.reflect_y() if flip_y else trial
                    inside = trial.evaluate(np.array(0.5), np.array(0.5)).item()
                weight = w_above if inside > 0 else w_below
            if lam == 0:
                return constant * weight * DFIntegrals._separable(u, v, level, config)
            if kind is CouplingKind.SMOOTH:
                return constant * weight * DFIntegrals._tensor(u, v, coupling, lam, level, config)
            if not config.split_diagonal:
                return constant * weight * DFIntegrals._unsplit(u, v, coupling, lam, level, config)
            if flip_x:
                u, coupling = u.reflected(), coupling.reflect_x()
            if flip_y:
                v, coupling = v.reflected(), coupling.reflect_y()
            if coupling.beta < 0:
                coupling = coupling.negated()
            return constant * weight * DFIntegrals._corner(u, v, coupling, lam, level, config)

        if not config.split_diagonal:
            if lam.real <= -1:
                raise ConvergenceError(f"diagonal exponent {lam} needs the diagonal split")
            return constant * DFIntegrals._unsplit_diagonal(u, v, coupling, lam, (w_above, w_below), level, config)
        # B = beta (x - y): x > y is u > v when beta > 0
        beta: float = coupling.beta
        lower_weight, upper_weight = (w_above, w_below) if beta > 0 else (w_below, w_above)
        scale: complex = abs(beta) ** lam
        first: complex = DFIntegrals._diagonal_piece(
            u, v, lam, lower_weight, upper_weight, problem.weights is None, beta > 0, level, config
        )
        second: complex = DFIntegrals._diagonal_piece(
            u.reflected(),
            v.reflected(),
            lam,
            upper_weight,
            lower_weight,
            problem.weights is None,
            beta < 0,
            level,
            config,
        )
        return constant * scale * (first + second)

    @staticmethod
    def _rule(exponents: tuple[complex, ...], level: int, config: QuadratureConfig) -> TanhSinhRule:
        return Quadrature.tanh_sinh(level, Quadrature.t_max(exponents, config))

    @staticmethod
    def _separable(u: LocalFactors, v: LocalFactors, level: int, config: QuadratureConfig) -> complex:
        return Quadrature.unit_power_integral(u.p, u.q, u.affine, level, config) * Quadrature.unit_power_integral(
            v.p, v.q, v.affine, level, config
        )

    @staticmethod
    def _tensor(
        u: LocalFactors, v: LocalFactors, coupling: Bilinear, lam: complex, level: int, config: QuadratureConfig
    ) -> complex:
        """B keeps one sign on the closed square, so the coupling is smooth."""
        x_rule: TanhSinhRule = DFIntegrals._rule((u.p, u.q), level, config)
        y_rule: TanhSinhRule = DFIntegrals._rule((v.p, v.q), level, config)
        x_part: np.ndarray = np.exp(x_rule.log_w + u.log_density(x_rule))
        y_part: np.ndarray = np.exp(y_rule.log_w + v.log_density(y_rule))
        values: np.ndarray = np.abs(coupling.evaluate(x_rule.x[:, None], y_rule.x[None, :])) ** lam
        return complex(x_part @ values @ y_part)

    @staticmethod
    def _unsplit(
        u: LocalFactors, v: LocalFactors, coupling: Bilinear, lam: complex, level: int, config: QuadratureConfig
    ) -> complex:
        if lam.real <= -1:
            raise ConvergenceError(f"coupling exponent {lam} needs the corner split")
        return DFIntegrals._tensor(u, v, coupling, lam, level, config)

    @staticmethod
    def _unsplit_diagonal(
        u: LocalFactors,
        v: LocalFactors,
        coupling: Bilinear,
        lam: complex,
        weights: tuple[complex, complex],
        level: int,
        config: QuadratureConfig,
    ) -> complex:
        x_rule: TanhSinhRule = DFIntegrals._rule((u.p, u.q), level, config)
        y_rule: TanhSinhRule = DFIntegrals._rule((v.p, v.q), level, config)
        x_part: np.ndarray = np.exp(x_rule.log_w + u.log_density(x_rule))
        y_part: np.ndarray = np.exp(y_rule.log_w + v.log_density(y_rule))
        b: np.ndarray = coupling.evaluate(x_rule.x[:, None], y_rule.x[None, :])
        side: np.ndarray = np.where(b > 0, weights[0], weights[1])
        values: np.ndarray = side * np.abs(np.where(b == 0, 1.0, b)) ** lam * (b != 0)
        return complex(x_part @ values @ y_part)

    @staticmethod
    def _corner(
        u: LocalFactors, v: LocalFactors, coupling: Bilinear, lam: complex, level: int, config: QuadratureConfig
    ) -> complex:
        """B = beta x + gamma y + delta x y > 0 away from the origin; Duffy split along x = y."""
        beta, gamma, delta = coupling.beta, coupling.gamma, coupling.delta
        # x is radial below the diagonal, y above it.
        return DFIntegrals._duffy_half(u, v, (beta, gamma, delta), lam, level, config) + DFIntegrals._duffy_half(
            v, u, (gamma, beta, delta), lam, level, config
        )

    @staticmethod
    def _duffy_half(
        radial: LocalFactors,
        other: LocalFactors,
        coefficients: tuple[float, float, float],
        lam: complex,
        level: int,
        config: QuadratureConfig,
    ) -> complex:
        """Integral over 0 < other < radial < 1 with radial = s, other = s t.

        The integrand is s^P t^p_other Phi(s, t), P = p_radial + p_other + lam + 1, and
        B / s = c0 + c1 t + c2 s t stays positive.
        """
        c0, c1, c2 = coefficients
        exponent: complex = radial.p + other.p + lam + 1
        _radial_exponent_check(exponent, "a corner of the box")
        t_rule: TanhSinhRule = DFIntegrals._rule((other.p, other.q, radial.q), level, config)
        t: np.ndarray = t_rule.x[None, :]
        log_1mt: np.ndarray = t_rule.log_1mx[None, :]
        t_log_weight: np.ndarray = (t_rule.log_w + other.p * t_rule.log_x)[None, :]

        def inner(
            s: np.ndarray, log_s: np.ndarray, log_1ms: np.ndarray, log_scale: np.ndarray | float = 0.0
        ) -> np.ndarray:
            s_col: np.ndarray = s[:, None]
            # 1 - s t = (1 - s) + s (1 - t), summed in log form
            log_1mst: np.ndarray = np.logaddexp(log_1ms[:, None], log_s[:, None] + log_1mt)
            logs: np.ndarray = (
                t_log_weight
                + np.reshape(log_scale, (-1, 1))
                + radial.q * log_1ms[:, None]
                + affine_log(radial.affine, s_col)
                + other.q * log_1mst
                + affine_log(other.affine, s_col * t)
                + lam * np.log(c0 + c1 * t + c2 * s_col * t)
            )
            return np.sum(np.exp(logs), axis=1)

        finite_part: bool = exponent.real <= -1
        jacobi: GaussJacobiRule = Quadrature.gauss_jacobi(
            Quadrature.jacobi_size(level), exponent.real + (1 if finite_part else 0), 0.5
        )
        near: np.ndarray = inner(jacobi.s, np.log(jacobi.s), np.log1p(-jacobi.s))
        at_zero: complex = complex(inner(*_ORIGIN)[0]) if finite_part else 0j
        total: complex = _radial_integral(near, at_zero, jacobi, exponent, finite_part)

        s_rule: TanhSinhRule = Quadrature.half_rule(DFIntegrals._rule((radial.q, other.q), level, config))
        total += complex(np.sum(inner(s_rule.x, s_rule.log_x, s_rule.log_1mx, s_rule.log_w + exponent * s_rule.log_x)))
        return total

    @staticmethod
    def _diagonal_piece(
        u: LocalFactors,
        v: LocalFactors,
        lam: complex,
        lower_weight: complex,
        upper_weight: complex,
        i0: bool,
        lower_is_above: bool,
        level: int,
        config: QuadratureConfig,
    ) -> complex:
        """Triangle x + y < 1 with x = s(1+tau)/2, y = s(1-tau)/2; tau < 0 is the side x < y.

        The tau-integral of |tau|^lam h(s, tau) keeps the Taylor terms h0 + h1 tau in closed form,
        which continues it to Re(lam) > -3.
        """
        p1, q1, p2, q2 = u.p, u.q, v.p, v.q
        exponent: complex = p1 + p2 + lam + 1
        _radial_exponent_check(exponent, "a corner on the diagonal")
        if lam.real <= -3:
            raise ConvergenceError(f"diagonal exponent {lam} <= -3")

        def log_amplitude(
            s: np.ndarray, log_s: np.ndarray, log_1ms: np.ndarray, nu: np.ndarray, log_nu: np.ndarray, mirrored: bool
        ) -> np.ndarray:
            # A(s, tau) with nu = 1 - tau; mirrored gives A(s, -tau)
            long_log: np.ndarray = np.log(1 - nu / 2)
            short_log: np.ndarray = log_nu + _LOG_HALF
            # log((1 - s) + s nu / 2); both terms underflow together near the corner s = 1, nu = 0
            log_near_one: np.ndarray = np.logaddexp(log_1ms, log_s + short_log)
            far_one: np.ndarray = 1 - s * nu / 2
            big: np.ndarray = s * (1 - nu / 2)
            small: np.ndarray = s * nu / 2
            if mirrored:
                return (
                    _LOG_HALF
                    + p1 * short_log
                    + p2 * long_log
                    + q1 * np.log(far_one)
                    + q2 * log_near_one
                    + affine_log(u.affine, small)
                    + affine_log(v.affine, big)
                )
            return (
                _LOG_HALF
                + p1 * long_log
                + p2 * short_log
                + q1 * log_near_one
                + q2 * np.log(far_one)
                + affine_log(u.affine, big)
                + affine_log(v.affine, small)
            )

        def folded(
            s: np.ndarray,
            log_s: np.ndarray,
            log_1ms: np.ndarray,
            nu: np.ndarray,
            log_nu: np.ndarray,
            log_weight: np.ndarray | float = 0.0,
        ) -> np.ndarray:
            # weight folded into the exponent: endpoint powers cancel before exp
            lower: np.ndarray = np.exp(log_weight + log_amplitude(s, log_s, log_1ms, nu, log_nu, False))
            upper: np.ndarray = np.exp(log_weight + log_amplitude(s, log_s, log_1ms, nu, log_nu, True))
            return lower_weight * lower + upper_weight * upper

        # Closed-form coefficients of the Taylor terms over [0, 1/2].
        half: float = 0.5
        if i0:
            sign: float = 1.0 if lower_is_above else -1.0
            even_factor: complex = SpecialFunctions.phase_gap_ratio(lam + 1) * half ** (lam + 1)
            odd_factor: complex = sign * SpecialFunctions.phase_gap_ratio(lam + 2) * half ** (lam + 2)
        else:
            even_weight: complex = lower_weight + upper_weight
            odd_weight: complex = lower_weight - upper_weight
            if abs(lam + 1) < 1e-10 and abs(even_weight) > 0:
                raise PoleError("diagonal exponent -1 with a nonzero symmetric part")
            if abs(lam + 2) < 1e-10 and abs(odd_weight) > 0:
                raise PoleError("diagonal exponent -2 with a nonzero antisymmetric part")
            even_factor = even_weight * half ** (lam + 1) / (lam + 1) if even_weight != 0 else 0j
            odd_factor = odd_weight * half ** (lam + 2) / (lam + 2) if odd_weight != 0 else 0j

        tau_jacobi: GaussJacobiRule = Quadrature.gauss_jacobi(Quadrature.jacobi_size(level), lam.real + 2, half)
        tau: np.ndarray = tau_jacobi.s[None, :]
        tau_twist: np.ndarray = np.exp(1j * lam.imag * np.log(tau_jacobi.s))[None, :]
        tau_rule: TanhSinhRule = Quadrature.half_rule(DFIntegrals._rule((p1, p2, q1, q2), level, config))
        nu_far: np.ndarray = tau_rule.one_minus_x[None, :]
        log_nu_far: np.ndarray = tau_rule.log_1mx[None, :]
        tau_far_log_weight: np.ndarray = (tau_rule.log_w + lam * tau_rule.log_x)[None, :]

        def inner(
            s: np.ndarray, log_s: np.ndarray, log_1ms: np.ndarray, log_scale: np.ndarray | float = 0.0
        ) -> np.ndarray:
            # every term is linear in the amplitude, so the s weight rides along in log form
            scale_col: np.ndarray = np.reshape(log_scale, (-1, 1))
            s_col: np.ndarray = s[:, None]
            log_s_col: np.ndarray = log_s[:, None]
            log_1ms_col: np.ndarray = log_1ms[:, None]
            half_s: np.ndarray = s / 2
            a0: np.ndarray = np.exp(
                np.reshape(log_scale, -1)
                + _LOG_HALF
                + (p1 + p2) * _LOG_HALF
                + (q1 + q2) * np.log(1 - half_s)
                + affine_log(u.affine, half_s)
                + affine_log(v.affine, half_s)
            )
            slope: np.ndarray = p1 - p2 + (q2 - q1) * half_s / (1 - half_s)
            for alpha, beta, e in u.affine:
                slope = slope + e * beta * half_s / (alpha + beta * half_s)
            for alpha, beta, e in v.affine:
                slope = slope - e * beta * half_s / (alpha + beta * half_s)
            a1: np.ndarray = a0 * slope
            h0: np.ndarray = (lower_weight + upper_weight) * a0
            h1: np.ndarray = (lower_weight - upper_weight) * a1
            nu_near: np.ndarray = 1 - tau
            values: np.ndarray = folded(s_col, log_s_col, log_1ms_col, nu_near, np.log(nu_near), scale_col)
            remainder: np.ndarray = (values - h0[:, None] - h1[:, None] * tau) / tau**2
            near: np.ndarray = np.sum(tau_jacobi.w[None, :] * tau_twist * remainder, axis=1)
            far: np.ndarray = np.sum(
                folded(s_col, log_s_col, log_1ms_col, nu_far, log_nu_far, tau_far_log_weight + scale_col), axis=1
            )
            return near + far + even_factor * a0 + odd_factor * a1

        finite_part: bool = exponent.real <= -1
        jacobi: GaussJacobiRule = Quadrature.gauss_jacobi(
            Quadrature.jacobi_size(level), exponent.real + (1 if finite_part else 0), half
        )
        near_values: np.ndarray = inner(jacobi.s, np.log(jacobi.s), np.log1p(-jacobi.s))
        at_zero: complex = complex(inner(*_ORIGIN)[0]) if finite_part else 0j
        total: complex = _radial_integral(near_values, at_zero, jacobi, exponent, finite_part)
        s_rule: TanhSinhRule = Quadrature.half_rule(DFIntegrals._rule((q1, q2), level, config))
        total += complex(np.sum(inner(s_rule.x, s_rule.log_x, s_rule.log_1mx, s_rule.log_w + exponent * s_rule.log_x)))
        return total

    @staticmethod
    def integrate(
        u: VariableSpec,
        v: VariableSpec,
        coupling: complex,
        weight_function: LaurentPoly2 | None = None,
        center: float = 0.0,
        weights: tuple[complex, complex] | None = None,
        config: QuadratureConfig | None = None,
        label: str = "integral",
    ) -> QuadratureResult:
        """Integral over a box with a Laurent polynomial in (u - center, v - center) as extra weight.

        Args:
        ----
            u (VariableSpec): Interval and pole exponents of u.
            v (VariableSpec): Interval and pole exponents of v.
            coupling (complex): Exponent of u - v.
            weight_function (LaurentPoly2 | None): Polynomial weight; None means 1.
            center (float): Real point the polynomial is expanded around.
            weights (tuple[complex, complex] | None): Side weights (u > v, u < v); None is the +i0 prescription.
            config (QuadratureConfig | None): Quadrature settings.
            label (str): Name used in log messages and errors.

        Returns:
        -------
            QuadratureResult: The value and the level-difference estimate
        """
        config = config or InitialParams.quadrature_config()
        poly: LaurentPoly2 = weight_function if weight_function is not None else LaurentPoly2.constant(1)
        problems: list[tuple[complex, BoxProblem]] = [
            (
                complex(c),
                BoxProblem(u.with_monomial(center, p), v.with_monomial(center, q), complex(coupling), weights),
            )
            for (p, q), c in poly.terms
        ]

        def compute(level: int) -> complex:
            return sum((c * DFIntegrals._box_value(problem, level, config) for c, problem in problems), 0j)

        return Quadrature.refine(compute, config, label)

    @staticmethod
    def df_J(
        region: RegionSpec,
        params: DFParams,
        weight_function: LaurentPoly2 | None = None,
        config: QuadratureConfig | None = None,
    ) -> complex:
        """J-integral of |u|^a1 |u-1|^b1 |v|^a2 |v-1|^b2 (u - v + i0)^(-2 gamma) F(u, v) over the region.

        Args:
        ----
            region (RegionSpec): A J-region.
            params (DFParams): Exponents a1, a2, b1, b2 and gamma.
            weight_function (LaurentPoly2 | None): F, centered at 0 or 1; None means F = 1.
            config (QuadratureConfig | None): Quadrature settings.

        Returns:
        -------
            complex: The regularized value
        """
        if region.kind != "J":
            raise InvalidParameterError(f"df_J needs a J-region, got {region}")
        u_box, v_box = region.box()
        u: VariableSpec = VariableSpec(u_box, ((0.0, params.a1), (1.0, params.b1)))
        v: VariableSpec = VariableSpec(v_box, ((0.0, params.a2), (1.0, params.b2)))
        center: float = float(weight_function.center) if weight_function is not None else 0.0
        return DFIntegrals.integrate(
            u, v, params.coupling, weight_function, center, None, config, f"df_J {region}"
        ).value

    @staticmethod
    def df_I(
        region: RegionSpec,
        params: DFParams,
        z1: float,
        z2: float,
        weight_function: LaurentPoly2 | None = None,
        pole: str = "0",
        config: QuadratureConfig | None = None,
    ) -> complex:
        """I-integral with the points 0 < z2 < z1 and (u - v + i0)^(-2 gamma) E(u, v).

        E is a Laurent polynomial centered at the point named by `pole` ("0", "z2" or "z1").
        """
        if region.kind != "I":
            raise InvalidParameterError(f"df_I needs an I-region, got {region}")
        u_box, v_box = region.box(z1, z2)
        points: dict[str, float] = {"0": 0.0, "z2": z2, "z1": z1}
        if pole not in points:
            raise InvalidParameterError(f"expansion point must be one of {tuple(points)}, got {pole!r}")
        u: VariableSpec = VariableSpec(u_box, ((0.0, params.a1), (z2, params.b1), (z1, params.c1)))
        v: VariableSpec = VariableSpec(v_box, ((0.0, params.a2), (z2, params.b2), (z1, params.c2)))
        return DFIntegrals.integrate(
            u, v, params.coupling, weight_function, points[pole], None, config, f"df_I {region}"
        ).value
