from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp

from swm_calc.model.errors import InvalidParameterError
from swm_calc.model.fuchsian_operator import FuchsianAnalysis, FuchsianOperator
from swm_calc.model.representation_data import RepresentationData


def test_p3_for_m1() -> None:
    op: FuchsianOperator = FuchsianAnalysis.build_operator(1)
    z: sp.Symbol = sp.Symbol("z")
    assert sp.simplify(op.numerator(3) - sp.Rational(16, 3) * (2 * z - 1)) == 0
    assert op.numerators[3] == (Fraction(-16, 3), Fraction(32, 3))


@pytest.mark.parametrize("m", [1, 2, 5])
def test_p3_vanishes_at_half(m: int) -> None:
    assert FuchsianAnalysis.build_operator(m).evaluate_numerator(3, Fraction(1, 2)) == 0


def test_indicial_exponents_m1() -> None:
    op: FuchsianOperator = FuchsianAnalysis.build_operator(1)
    assert FuchsianAnalysis.indicial_exponents(op, "0") == (
        Fraction(-1),
        Fraction(-2, 3),
        Fraction(1, 3),
        Fraction(2),
    )
    assert FuchsianAnalysis.indicial_exponents(op, "inf") == (
        Fraction(0),
        Fraction(1, 3),
        Fraction(4, 3),
        Fraction(3),
    )


@pytest.mark.parametrize("m", range(1, 11))
def test_indicial_exponents_match_riemann_scheme(m: int) -> None:
    op: FuchsianOperator = FuchsianAnalysis.build_operator(m)
    scheme = RepresentationData.riemann_exponents(m)
    total: Fraction = Fraction(0)
    for point in ("0", "1", "inf"):
        roots = FuchsianAnalysis.indicial_exponents(op, point)
        assert roots == tuple(sorted(scheme.at(point)))
        total += sum(roots, Fraction(0))
    assert total == 6
    assert FuchsianAnalysis.indicial_exponents(op, "0") == FuchsianAnalysis.indicial_exponents(op, "1")


def test_local_recurrence_degree() -> None:
    recurrence = FuchsianAnalysis.local_recurrence(FuchsianAnalysis.build_operator(2), "1")
    assert len(recurrence.table) == 5
    assert all(len(row) == 5 for row in recurrence.table)
    # f_0 at an indicial exponent vanishes
    assert recurrence.shift_polynomial(0, Fraction(4, 5)) == 0


def test_bad_points() -> None:
    op: FuchsianOperator = FuchsianAnalysis.build_operator(1)
    with pytest.raises(InvalidParameterError):
        FuchsianAnalysis.indicial_exponents(op, "2")
    with pytest.raises(InvalidParameterError):
        FuchsianAnalysis.local_recurrence(op, "inf")
    with pytest.raises(InvalidParameterError):
        FuchsianAnalysis.build_operator(0)
