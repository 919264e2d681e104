from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import sympy as sp

from swm_calc.model.errors import IllConditionedError, InvalidParameterError
from swm_calc.model.frobenius_series import FrobeniusSeries, FrobeniusSolution
from swm_calc.model.fuchsian_operator import FuchsianAnalysis, FuchsianOperator
from swm_calc.model.initial_params import ConnectionConfig, InitialParams
from swm_calc.model.representation_data import RepresentationData

logger = logging.getLogger("swm_calc")

# Basis order (1,1), (0,1), (1,0), (0,0). Resonant pairs: A = (11, 10), B = (01, 00).
PAIR_A: tuple[int, int] = (0, 2)
PAIR_B: tuple[int, int] = (1, 3)
# Column k of N expands the k-th solution at 0 in the basis at 1. Adding multiples of the higher solution
# of a pair changes columns (10, 00) and rows (11, 01), so rows {10, 00} x columns {11, 01} are invariant.
INVARIANT_ROWS: tuple[int, int] = (2, 3)
INVARIANT_COLUMNS: tuple[int, int] = (0, 1)


@dataclass(frozen=True)
class ConnectionInvariants:
    """Gauge-invariant data of a 4x4 connection matrix."""

    block: tuple[tuple[complex, ...], ...]
    inverse_block: tuple[tuple[complex, ...], ...]
    trace_a: complex
    det_a: complex
    trace_b: complex
    det_b: complex


@dataclass(frozen=True)
class ConnectionResult:  # noqa: D101
    m: int
    numeric_matrix: tuple[tuple[complex, ...], ...]
    closed_form_matrix: sp.Matrix
    cross_ratio_residual: float
    zero_pattern_ok: bool
    condition_number: float
    invariants_numeric: ConnectionInvariants
    invariants_exact: ConnectionInvariants

    def passed(self, tolerance: float) -> bool:  # noqa: D102
        return self.zero_pattern_ok and self.cross_ratio_residual < tolerance


def _monodromy_pair(matrix: mpmath.matrix, first: tuple[int, int], second: tuple[int, int]) -> mpmath.matrix:
    """Q = N_AA^{-1} N_AB N_BB^{-1} N_BA; conjugation invariant under block-diagonal gauges."""

    def block(rows: tuple[int, int], columns: tuple[int, int]) -> mpmath.matrix:
        return mpmath.matrix([[matrix[i, j] for j in columns] for i in rows])

    return (
        mpmath.inverse(block(first, first))
        * block(first, second)
        * mpmath.inverse(block(second, second))
        * block(second, first)
    )


def _trace_det(q: mpmath.matrix) -> tuple[complex, complex]:
    return complex(q[0, 0] + q[1, 1]), complex(mpmath.det(q))


class ConnectionMatrix:
    """Numerical connection matrix between the Frobenius bases at 0 and 1, and the exact closed form."""

    @staticmethod
    def fourrel_matrix(c: sp.Expr, c_prime: sp.Expr) -> sp.Matrix:
        """Involutory 4x4 matrix in the two parameters c, c'."""
        x: sp.Expr = 1 / c
        y: sp.Expr = c - 1 / c
        xp: sp.Expr = 1 / c_prime
        yp: sp.Expr = c_prime - 1 / c_prime
        return sp.Matrix(
            [
                [x * xp, -x * xp, -x * xp, x * xp],
                [-y * xp, -x * xp, y * xp, x * xp],
                [-x * yp, x * yp, -x * xp, x * xp],
                [y * yp, x * yp, y * xp, x * xp],
            ]
        )

    @staticmethod
    def closed_form_matrix(m: int) -> sp.Matrix:
        """Exact connection matrix: fourrel_matrix at c = 2cos(pi m/(2m+1)), c' = 2(-1)^m."""
        a, _ = RepresentationData.df_exponent_pair(m)
        c: sp.Expr = 2 * sp.cos(sp.pi * sp.Rational(a.numerator, a.denominator))
        return ConnectionMatrix.fourrel_matrix(c, sp.Integer(2 * (-1) ** m))

    @staticmethod
    def is_involutory(matrix: sp.Matrix) -> bool:
        """M * M == I after exact simplification."""
        size: int = matrix.shape[0]
        difference: sp.Matrix = (matrix * matrix - sp.eye(size)).applyfunc(sp.simplify)
        return bool(difference.is_zero_matrix)

    @staticmethod
    def reduced_subspace_check(m: int) -> bool:
        """Sums Psi_11 + Psi_10 and Psi_01 + Psi_00 span an invariant plane with the closed 2x2 matrix.

        Args:
        ----
            m (int): The SW(m) parameter.

        Returns:
        -------
            bool: True when the row sums of M reproduce (-1)^m [[-1/c, 1/c], [c - 1/c, 1/c]]
        """
        matrix: sp.Matrix = ConnectionMatrix.closed_form_matrix(m)
        a, _ = RepresentationData.df_exponent_pair(m)
        c: sp.Expr = 2 * sp.cos(sp.pi * sp.Rational(a.numerator, a.denominator))
        expected: sp.Matrix = (-1) ** m * sp.Matrix([[-1 / c, 1 / c], [c - 1 / c, 1 / c]])
        sums: list[sp.Matrix] = [matrix.row(0) + matrix.row(2), matrix.row(1) + matrix.row(3)]
        for row, target in zip(sums, (expected.row(0), expected.row(1))):
            # The sum must not distinguish the two members of each pair.
            if sp.simplify(row[0] - row[2]) != 0 or sp.simplify(row[1] - row[3]) != 0:
                return False
            if sp.simplify(row[0] - target[0]) != 0 or sp.simplify(row[1] - target[1]) != 0:
                return False
        return bool((expected * expected - sp.eye(2)).applyfunc(sp.simplify).is_zero_matrix)

    @staticmethod
    def local_basis(op: FuchsianOperator, point: int, n_terms: int) -> list[FrobeniusSolution]:
        """Numeric Frobenius basis at the point, ordered (1,1), (0,1), (1,0), (0,0)."""
        exponents: tuple[Fraction, ...] = RepresentationData.riemann_exponents(op.m).at(str(point))
        return [FrobeniusSeries.numeric_series(op, point, rho, n_terms) for rho in exponents]

    @staticmethod
    def matching_matrix(basis: list[FrobeniusSolution], z: float) -> mpmath.matrix:
        """Rows: derivative order 0..3, columns: basis solutions."""
        columns: list[tuple[mpmath.mpc, ...]] = [FrobeniusSeries.evaluate_solution(sol, z, 3).values for sol in basis]
        return mpmath.matrix([[columns[j][d] for j in range(4)] for d in range(4)])

    @staticmethod
    def invariants(matrix: mpmath.matrix) -> ConnectionInvariants:
        """Gauge-invariant block, inverse block, and trace/determinant of the pair monodromies."""
        inverse: mpmath.matrix = mpmath.inverse(matrix)
        trace_a, det_a = _trace_det(_monodromy_pair(matrix, PAIR_A, PAIR_B))
        trace_b, det_b = _trace_det(_monodromy_pair(matrix, PAIR_B, PAIR_A))
        return ConnectionInvariants(
            tuple(tuple(complex(matrix[i, j]) for j in INVARIANT_COLUMNS) for i in INVARIANT_ROWS),
            tuple(tuple(complex(inverse[i, j]) for j in INVARIANT_COLUMNS) for i in INVARIANT_ROWS),
            trace_a,
            det_a,
            trace_b,
            det_b,
        )

    @staticmethod
    def _cross_ratio_residual(
        numeric: tuple[tuple[complex, ...], ...], exact: tuple[tuple[complex, ...], ...]
    ) -> float:
        # Only a 2x2 block is available, so there is a single cross-ratio; skipped if M has a zero there.
        if any(abs(value) < 1e-14 for row in exact for value in row):
            return 0.0
        left: complex = numeric[0][0] * numeric[1][1] * exact[0][1] * exact[1][0]
        right: complex = numeric[0][1] * numeric[1][0] * exact[0][0] * exact[1][1]
        return abs(left - right) / max(abs(left), abs(right))

    @staticmethod
    def compare(numeric: ConnectionInvariants, exact: ConnectionInvariants) -> float:
        """Largest relative discrepancy over cross-ratios and pair-monodromy invariants."""
        residuals: list[float] = [
            ConnectionMatrix._cross_ratio_residual(numeric.block, exact.block),
            ConnectionMatrix._cross_ratio_residual(numeric.inverse_block, exact.inverse_block),
        ]
        for left, right in (
            (numeric.trace_a, exact.trace_a),
            (numeric.det_a, exact.det_a),
            (numeric.trace_b, exact.trace_b),
            (numeric.det_b, exact.det_b),
        ):
            residuals.append(abs(left - right) / max(1.0, abs(right)))
        return max(residuals)

    @staticmethod
    def zero_pattern(numeric: ConnectionInvariants, exact: ConnectionInvariants, tolerance: float) -> bool:
        """Invariant entries vanish numerically exactly where the closed form vanishes."""
        for numeric_block, exact_block in ((numeric.block, exact.block), (numeric.inverse_block, exact.inverse_block)):
            scale: float = max(abs(v) for row in numeric_block for v in row)
            for numeric_row, exact_row in zip(numeric_block, exact_block):
                for value, target in zip(numeric_row, exact_row):
                    if (abs(target) < 1e-14) != (abs(value) < tolerance * scale):
                        return False
        return True

    @staticmethod
    def connection_matrix(m: int, config: ConnectionConfig | None = None) -> ConnectionResult:
        """Match the bases at 0 and 1 at a point of (0, 1) and compare with the closed form.

        Args:
        ----
            m (int): The SW(m) parameter.
            config (ConnectionConfig | None): Terms, matching point, precision and tolerance.

        Returns:
        -------
            ConnectionResult: N with Phi_0 = Phi_1 N for the matching matrices, and the comparison data
        """
        config = config or InitialParams.connection_config()
        if not 0 < config.matching_point < 1:
            raise InvalidParameterError(f"matching point must lie in (0, 1), got {config.matching_point}")
        op: FuchsianOperator = FuchsianAnalysis.build_operator(m)
        exact_matrix: sp.Matrix = ConnectionMatrix.closed_form_matrix(m)
        with mpmath.workprec(config.precision):
            z: mpmath.mpf = mpmath.mpf(config.matching_point)
            at_zero: mpmath.matrix = ConnectionMatrix.matching_matrix(
                ConnectionMatrix.local_basis(op, 0, config.n_terms), z
            )
            at_one: mpmath.matrix = ConnectionMatrix.matching_matrix(
                ConnectionMatrix.local_basis(op, 1, config.n_terms), z
            )
            condition: float = float(max(mpmath.cond(at_zero), mpmath.cond(at_one)))
            logger.debug("connection m=%d: matching condition number %.3e", m, condition)
            if condition * 2.0 ** (-config.precision) > config.tolerance * 1e-3:
                raise IllConditionedError(
                    f"matching matrices too ill-conditioned for {config.precision}-bit arithmetic", condition
                )
            numeric: mpmath.matrix = mpmath.inverse(at_one) * at_zero
            exact: mpmath.matrix = mpmath.matrix(
                [[mpmath.mpf(str(sp.N(exact_matrix[i, j], 40))) for j in range(4)] for i in range(4)]
            )
            numeric_invariants: ConnectionInvariants = ConnectionMatrix.invariants(numeric)
            exact_invariants: ConnectionInvariants = ConnectionMatrix.invariants(exact)
            residual: float = ConnectionMatrix.compare(numeric_invariants, exact_invariants)
            zero_ok: bool = ConnectionMatrix.zero_pattern(numeric_invariants, exact_invariants, config.zero_tolerance)
            entries: tuple[tuple[complex, ...], ...] = tuple(
                tuple(complex(numeric[i, j]) for j in range(4)) for i in range(4)
            )
        logger.debug("connection m=%d: residual %.3e, zero pattern %s", m, residual, zero_ok)
        return ConnectionResult(
            m, entries, exact_matrix, residual, zero_ok, condition, numeric_invariants, exact_invariants
        )
