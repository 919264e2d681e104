from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from swm_calc.model.errors import InvalidParameterError, MismatchedParameterError
from swm_calc.model.exact_algebra import ChebyshevPoly, ExactAlgebra, LaurentPoly1, LaurentPoly2


@pytest.mark.parametrize(
    ("n", "monomial"),
    [
        (0, (1,)),
        (2, (-1, 0, 1)),
        (4, (1, 0, -3, 0, 1)),
    ],
)
def test_chebyshev_u_monomial_form(n: int, monomial: tuple[int, ...]) -> None:
    assert ExactAlgebra.chebyshev_u(n).to_monomial() == monomial


def test_chebyshev_u_rejects_negative_degree() -> None:
    with pytest.raises(InvalidParameterError):
        ExactAlgebra.chebyshev_u(-1)


@pytest.mark.parametrize(
    ("j", "k", "terms"),
    [
        (0, 5, {5: 1}),
        (1, 1, {2: 1, 0: 1}),
        (2, 2, {4: 1, 2: 1, 0: 1}),
        (3, 5, {8: 1, 6: 1, 4: 1, 2: 1}),
    ],
)
def test_chebyshev_product_linearization(j: int, k: int, terms: dict[int, int]) -> None:
    product: ChebyshevPoly = ExactAlgebra.chebyshev_product(j, k)
    assert product.terms() == terms
    assert len(product.terms()) == min(j, k) + 1


def test_chebyshev_u_trigonometric_identity() -> None:
    rng: np.random.Generator = np.random.default_rng(7)
    thetas: np.ndarray = rng.uniform(0.05, np.pi - 0.05, 100)
    for n in (0, 1, 3, 6, 11):
        poly: ChebyshevPoly = ExactAlgebra.chebyshev_u(n)
        for theta in thetas:
            value: float = poly.evaluate(2 * np.cos(theta))
            assert value * np.sin(theta) == pytest.approx(np.sin((n + 1) * theta), abs=1e-12)


def test_chebyshev_product_matches_pointwise_product() -> None:
    for theta in np.linspace(0.1, 3.0, 25):
        x: float = 2 * np.cos(theta)
        expected: float = ExactAlgebra.chebyshev_u(3).evaluate(x) * ExactAlgebra.chebyshev_u(4).evaluate(x)
        assert ExactAlgebra.chebyshev_product(3, 4).evaluate(x) == pytest.approx(expected, abs=1e-12)


def test_chebyshev_poly_arithmetic() -> None:
    u2: ChebyshevPoly = ExactAlgebra.chebyshev_u(2)
    u3: ChebyshevPoly = ExactAlgebra.chebyshev_u(3)
    # (A^2 - 1)(A^3 - 2A) = A^5 - 3A^3 + 2A
    assert (u2 * u3).to_monomial() == (0, 2, 0, -3, 0, 1)
    assert (u2 + u3 - u3) == u2
    assert (u2 - u2).is_zero()
    assert (u2 - u2).degree == -1
    assert ChebyshevPoly((1, 2, 0, 0)).coefficients == (1, 2)
    assert str(ChebyshevPoly.from_terms({3: 1, 1: -2})) == "U_3 - 2*U_1"


def test_rational_arithmetic_is_exact() -> None:
    rng: np.random.Generator = np.random.default_rng(11)
    for _ in range(50):
        a, b, c, d = (int(v) for v in rng.integers(1, 2**62, 4))
        assert Fraction(a, b) + Fraction(c, d) - Fraction(c, d) == Fraction(a, b)


def test_laurent_poly_is_canonical() -> None:
    first: LaurentPoly2 = LaurentPoly2.from_map({(1, 0): 2, (0, -1): 0, (-1, 2): Fraction(1, 3)})
    second: LaurentPoly2 = LaurentPoly2.from_map({(-1, 2): Fraction(1, 3), (1, 0): 2})
    assert first == second
    assert [pq for pq, _ in first.terms] == [(-1, 2), (1, 0)]


def test_laurent_poly_partials_and_product() -> None:
    poly: LaurentPoly2 = LaurentPoly2.from_map({(2, -1): 1, (1, 1): 3})
    assert poly.partial_u().as_map() == {(1, -1): 2, (0, 1): 3}
    assert poly.partial_v().as_map() == {(2, -2): -1, (1, 0): 3}
    product: LaurentPoly2 = LaurentPoly2.monomial(1, 0) * LaurentPoly2.monomial(0, -1)
    assert product.as_map() == {(1, -1): 1}
    assert poly.evaluate(2, 1) == pytest.approx(4 + 6)


@pytest.mark.parametrize("center", [0, 1])
def test_restrict_diagonal(center: int) -> None:
    rho: Fraction = Fraction(5, 2)
    product: LaurentPoly2 = LaurentPoly2.from_map({(1, 1): 1}, center)
    assert ExactAlgebra.laurent_restrict_diagonal(product) == LaurentPoly1.from_map({2: 1}, center)

    generator: LaurentPoly2 = LaurentPoly2.from_map({(3, 0): 1, (0, 3): -1 / rho}, center)
    assert ExactAlgebra.laurent_restrict_diagonal(generator).as_map() == {3: 1 - 1 / rho}

    unit: LaurentPoly2 = LaurentPoly2.constant(1, center)
    assert ExactAlgebra.laurent_restrict_diagonal(unit).as_map() == {0: 1}


def test_mixing_centers_fails() -> None:
    with pytest.raises(MismatchedParameterError):
        LaurentPoly2.constant(1, 0) + LaurentPoly2.constant(1, 1)
