from __future__ import annotations

import mpmath
import pytest
import sympy as sp

from swm_calc.model.connection_matrix import ConnectionInvariants, ConnectionMatrix, ConnectionResult
from swm_calc.model.errors import InvalidParameterError
from swm_calc.model.initial_params import InitialParams


def test_fourrel_matrix_is_involutory_for_symbolic_parameters() -> None:
    c, c_prime = sp.symbols("c c_prime", nonzero=True)
    assert ConnectionMatrix.is_involutory(ConnectionMatrix.fourrel_matrix(c, c_prime))


@pytest.mark.parametrize("m", range(1, 11))
def test_closed_form_is_involutory(m: int) -> None:
    assert ConnectionMatrix.is_involutory(ConnectionMatrix.closed_form_matrix(m))


def test_closed_form_m1_zero_pattern() -> None:
    matrix: sp.Matrix = ConnectionMatrix.closed_form_matrix(1)
    zeros: list[tuple[int, int]] = [
        (i, j) for i in range(4) for j in range(4) if sp.simplify(matrix[i, j]) == 0
    ]
    # c = 2cos(pi/3) = 1 kills every c - 1/c entry
    assert zeros == [(1, 0), (1, 2), (3, 0), (3, 2)]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reduced_subspace(m: int) -> None:
    assert ConnectionMatrix.reduced_subspace_check(m)


def test_invalid_matching_point() -> None:
    with pytest.raises(InvalidParameterError):
        ConnectionMatrix.connection_matrix(1, InitialParams.connection_config(matching_point=1.2))
    with pytest.raises(InvalidParameterError):
        InitialParams.connection_config(n_terms=8)


@pytest.mark.slow
@pytest.mark.parametrize("m", [1, 2, 3])
def test_numeric_connection_reproduces_closed_form(m: int) -> None:
    result: ConnectionResult = ConnectionMatrix.connection_matrix(m)
    assert result.zero_pattern_ok
    assert result.cross_ratio_residual < 1e-6
    assert result.passed(1e-6)


@pytest.mark.slow
def test_numeric_connection_m1_vanishes_where_closed_form_does() -> None:
    result: ConnectionResult = ConnectionMatrix.connection_matrix(1)
    largest: float = max(abs(value) for row in result.numeric_matrix for value in row)
    zeros: list[tuple[int, int]] = [
        (i, j) for i in range(4) for j in range(4) if abs(result.numeric_matrix[i][j]) < 1e-20 * largest
    ]
    assert zeros == [(1, 0), (1, 2), (3, 0), (3, 2)]


@pytest.mark.slow
def test_numeric_connection_with_longer_series() -> None:
    config = InitialParams.connection_config(n_terms=400)
    result: ConnectionResult = ConnectionMatrix.connection_matrix(2, config)
    assert result.cross_ratio_residual < 1e-6
    assert len(result.numeric_matrix) == 4


def test_invariants_of_closed_form() -> None:
    closed: sp.Matrix = ConnectionMatrix.closed_form_matrix(2)
    matrix: mpmath.matrix = mpmath.matrix(
        [[mpmath.mpf(str(sp.N(closed[i, j], 30))) for j in range(4)] for i in range(4)]
    )
    invariants: ConnectionInvariants = ConnectionMatrix.invariants(matrix)
    assert ConnectionMatrix.compare(invariants, invariants) == 0
    assert ConnectionMatrix.zero_pattern(invariants, invariants, 1e-8)
    # an involution has the same invariant block as its inverse
    for row, inverse_row in zip(invariants.block, invariants.inverse_block):
        for value, inverse_value in zip(row, inverse_row):
            assert abs(value - inverse_value) < 1e-12
