from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import mpmath

from swm_calc.model.errors import DomainError, InconsistencyError, LogarithmicSolutionError
from swm_calc.model.fuchsian_operator import FuchsianAnalysis, FuchsianOperator, LocalRecurrence

logger = logging.getLogger("swm_calc")

Coefficient = Union[Fraction, mpmath.mpf]


def to_mpf(value: Fraction | int) -> mpmath.mpf:
    """Fraction -> mpf at the current working precision."""
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


@dataclass(frozen=True)
class FrobeniusSolution:
    """t^exponent * sum_k coefficients[k] t^k with t = z (base point 0) or t = 1 - z (base point 1)."""

    base_point: int
    exponent: Fraction
    coefficients: tuple[Coefficient, ...]
    log_residual: Fraction = Fraction(0)
    resonant_orders: tuple[int, ...] = field(default=())

    @property
    def n_terms(self) -> int:  # noqa: D102
        return len(self.coefficients)


@dataclass(frozen=True)
class SeriesValues:
    """Value and z-derivatives of a truncated series, with a heuristic tail bound on the value."""

    values: tuple[mpmath.mpc, ...]
    tail_bound: float


class FrobeniusSeries:
    """Frobenius solutions at z = 0 and z = 1 and their evaluation."""

    @staticmethod
    def _checked_recurrence(op: FuchsianOperator, point: int, exponent: Fraction) -> LocalRecurrence:
        roots: tuple[Fraction, ...] = FuchsianAnalysis.indicial_exponents(op, str(point))
        if Fraction(exponent) not in roots:
            raise InconsistencyError(f"{exponent} is not an indicial exponent at z={point}: {roots}")
        return FuchsianAnalysis.local_recurrence(op, str(point))

    @staticmethod
    def frobenius_series(op: FuchsianOperator, point: int, exponent: Fraction, n_terms: int) -> FrobeniusSolution:
        """Exact series solution with c_0 = 1.

        At a resonant order the inhomogeneous term is the logarithmic obstruction. It is stored as
        log_residual and, when it vanishes, the free coefficient is set to 0.

        Args:
        ----
            op (FuchsianOperator): The operator.
            point (int): Base point, 0 or 1.
            exponent (Fraction): One of the four indicial exponents at the base point.
            n_terms (int): Number of coefficients c_0..c_{n_terms-1}.

        Returns:
        -------
            FrobeniusSolution: The exact truncated solution
        """
        recurrence: LocalRecurrence = FrobeniusSeries._checked_recurrence(op, point, exponent)
        rho: Fraction = Fraction(exponent)
        coefficients: list[Fraction] = [Fraction(1)]
        log_residual: Fraction = Fraction(0)
        resonant: list[int] = []
        for n in range(1, n_terms):
            rhs: Fraction = -sum(
                (recurrence.shift_polynomial(j, rho + n - j) * coefficients[n - j] for j in range(1, min(4, n) + 1)),
                Fraction(0),
            )
            leading: Fraction = recurrence.shift_polynomial(0, rho + n)
            if leading == 0:
                resonant.append(n)
                log_residual = rhs
                logger.debug("resonance at order %d for exponent %s at z=%d, obstruction %s", n, rho, point, rhs)
                if rhs != 0:
                    raise LogarithmicSolutionError(
                        f"logarithmic obstruction {rhs} at order {n} for exponent {rho} at z={point}", rhs
                    )
                coefficients.append(Fraction(0))
            else:
                coefficients.append(rhs / leading)
        return FrobeniusSolution(point, rho, tuple(coefficients), log_residual, tuple(resonant))

    @staticmethod
    def numeric_series(op: FuchsianOperator, point: int, exponent: Fraction, n_terms: int) -> FrobeniusSolution:
        """Same recurrence carried in mpmath at the current working precision.

        The shift polynomials are evaluated exactly and resonances are detected exactly; only the
        coefficient recursion is floating.
        """
        recurrence: LocalRecurrence = FrobeniusSeries._checked_recurrence(op, point, exponent)
        rho: Fraction = Fraction(exponent)
        shifts: dict[tuple[int, int], mpmath.mpf] = {}
        coefficients: list[mpmath.mpf] = [mpmath.mpf(1)]
        resonant: list[int] = []
        for n in range(1, n_terms):
            for j in range(5):
                if n - j >= 0 and (j, n - j) not in shifts:
                    shifts[(j, n - j)] = to_mpf(recurrence.shift_polynomial(j, rho + n - j))
            leading: mpmath.mpf = shifts[(0, n)]
            if leading == 0:
                resonant.append(n)
                coefficients.append(mpmath.mpf(0))
                continue
            rhs: mpmath.mpf = -mpmath.fsum(shifts[(j, n - j)] * coefficients[n - j] for j in range(1, min(4, n) + 1))
            coefficients.append(rhs / leading)
        return FrobeniusSolution(point, rho, tuple(coefficients), Fraction(0), tuple(resonant))

    @staticmethod
    def operator_residual(op: FuchsianOperator, solution: FrobeniusSolution) -> int | None:
        """Lowest index of a nonzero coefficient of L applied to the truncated series.

        Returns None when the truncated series is an exact solution.
        """
        recurrence: LocalRecurrence = FuchsianAnalysis.local_recurrence(op, str(solution.base_point))
        n_terms: int = solution.n_terms
        for n in range(n_terms + 4):
            total: Fraction = sum(
                (
                    recurrence.shift_polynomial(j, solution.exponent + n - j) * Fraction(solution.coefficients[n - j])
                    for j in range(5)
                    if 0 <= n - j < n_terms
                ),
                Fraction(0),
            )
            if total != 0:
                return n
        return None

    @staticmethod
    def _term(factor: mpmath.mpf, t: mpmath.mpc, power: mpmath.mpf) -> mpmath.mpc:
        if t != 0:
            return factor * mpmath.power(t, power)
        if factor == 0 or power > 0:
            return mpmath.mpf(0)
        if power == 0:
            return factor
        raise DomainError(f"t^{power} with coefficient {factor} diverges at the base point")

    @staticmethod
    def evaluate_solution(solution: FrobeniusSolution, z: complex | float, derivatives: int = 3) -> SeriesValues:
        """Value and the first `derivatives` z-derivatives of the truncated series.

        Args:
        ----
            solution (FrobeniusSolution): The series.
            z (complex | float): Evaluation point, |z - base_point| < 1. At the base point itself the limits are
                returned; a derivative that diverges there raises DomainError.
            derivatives (int): Highest derivative order, 0..3.

        Returns:
        -------
            SeriesValues: values[d] is the d-th derivative; tail_bound estimates the truncation error
        """
        t: mpmath.mpc = mpmath.mpmathify(z) if solution.base_point == 0 else 1 - mpmath.mpmathify(z)
        if abs(t) >= 1:
            raise DomainError(f"z={z} is outside the convergence disk around {solution.base_point}")
        rho: mpmath.mpf = to_mpf(solution.exponent)
        chain: int = 1 if solution.base_point == 0 else -1
        coefficients: list[mpmath.mpf] = [
            c if isinstance(c, mpmath.mpf) else to_mpf(c) for c in solution.coefficients
        ]
        values: list[mpmath.mpc] = []
        for d in range(derivatives + 1):
            total: mpmath.mpc = mpmath.fsum(
                FrobeniusSeries._term(c * mpmath.fprod(rho + k - i for i in range(d)), t, rho + k - d)
                for k, c in enumerate(coefficients)
                if c != 0
            )
            values.append(chain**d * total)
        tail: float = 0.0
        if len(coefficients) >= 2 and t != 0:
            last: mpmath.mpf = max(abs(coefficients[-1]), abs(coefficients[-2]))
            tail = float(last * abs(mpmath.power(t, rho + len(coefficients))) / (1 - abs(t)))
        return SeriesValues(tuple(values), tail)
