from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from swm_calc.model.errors import InvalidParameterError, MismatchedParameterError

Rational = Fraction
Scalar = Union[int, Fraction, float, complex]


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an integer, a "p/q" string or a Fraction into a Fraction.

    Args:
    ----
        value (int | str | Fraction): The value to coerce.

    Returns:
    -------
        Fraction: The exact rational.
    """
    return Fraction(value)


@dataclass(frozen=True)
class ChebyshevPoly:
    """Integer polynomial stored in the Chebyshev-U basis: coefficients[k] multiplies U_k."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coefficients: list[int] = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> ChebyshevPoly:
        """Build from a sparse {degree: coefficient} map."""
        if not terms:
            return cls(())
        dense: list[int] = [0] * (max(terms) + 1)
        for degree, coefficient in terms.items():
            if degree < 0:
                raise InvalidParameterError(f"negative Chebyshev degree {degree}")
            dense[degree] += coefficient
        return cls(tuple(dense))

    @property
    def degree(self) -> int:
        """Chebyshev degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coefficients

    def coefficient(self, k: int) -> int:  # noqa: D102
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def terms(self) -> dict[int, int]:
        """Sparse view, nonzero coefficients only."""
        return {k: c for k, c in enumerate(self.coefficients) if c != 0}

    def __add__(self, other: ChebyshevPoly) -> ChebyshevPoly:
        size: int = max(len(self.coefficients), len(other.coefficients))
        return ChebyshevPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __sub__(self, other: ChebyshevPoly) -> ChebyshevPoly:
        return self + other.scale(-1)

    def __neg__(self) -> ChebyshevPoly:
        return self.scale(-1)

    def scale(self, factor: int) -> ChebyshevPoly:  # noqa: D102
        return ChebyshevPoly(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: ChebyshevPoly | int) -> ChebyshevPoly:
        if isinstance(other, int):
            return self.scale(other)
        product: dict[int, int] = {}
        for j, cj in self.terms().items():
            for k, ck in other.terms().items():
                for degree in ExactAlgebra.chebyshev_product(j, k).terms():
                    product[degree] = product.get(degree, 0) + cj * ck
        return ChebyshevPoly.from_terms(product)

    __rmul__ = __mul__

    def to_monomial(self) -> tuple[int, ...]:
        """Monomial coefficients in A (index = power), for display."""
        if self.is_zero():
            return ()
        size: int = len(self.coefficients)
        result: list[int] = [0] * size
        previous: list[int] = []
        current: list[int] = [1]
        for k in range(size):
            for power, c in enumerate(current):
                result[power] += self.coefficients[k] * c
            shifted: list[int] = [0, *current]
            for power, c in enumerate(previous):
                shifted[power] -= c
            previous, current = current, shifted
        while result and result[-1] == 0:
            result.pop()
        return tuple(result)

    def evaluate(self, x: float | complex) -> float | complex:
        """Clenshaw evaluation of the U-series at A = x."""
        b1: float | complex = 0.0
        b2: float | complex = 0.0
        for c in reversed(self.coefficients):
            b1, b2 = c + x * b1 - b2, b1
        return b1

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k, c in sorted(self.terms().items(), reverse=True):
            sign: str = "-" if c < 0 else "+"
            magnitude: str = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {magnitude}U_{k}")
        text: str = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class LaurentPoly1:
    """Sparse one-variable Laurent polynomial in (v - center)."""

    terms: tuple[tuple[int, Scalar], ...]
    center: int = 0

    @classmethod
    def from_map(cls, terms: dict[int, Scalar], center: int = 0) -> LaurentPoly1:  # noqa: D102
        return cls(tuple(sorted((p, c) for p, c in terms.items() if c != 0)), center)

    def as_map(self) -> dict[int, Scalar]:  # noqa: D102
        return dict(self.terms)

    def __add__(self, other: LaurentPoly1) -> LaurentPoly1:
        _check_center(self.center, other.center)
        merged: dict[int, Scalar] = self.as_map()
        for p, c in other.terms:
            merged[p] = merged.get(p, 0) + c
        return LaurentPoly1.from_map(merged, self.center)

    def __sub__(self, other: LaurentPoly1) -> LaurentPoly1:
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> LaurentPoly1:  # noqa: D102
        return LaurentPoly1.from_map({p: factor * c for p, c in self.terms}, self.center)

    def derivative(self) -> LaurentPoly1:  # noqa: D102
        return LaurentPoly1.from_map({p - 1: p * c for p, c in self.terms if p != 0}, self.center)

    def evaluate(self, v: Scalar) -> Scalar:  # noqa: D102
        return sum((c * (v - self.center) ** p for p, c in self.terms), 0)

    def max_abs_coefficient(self) -> float:  # noqa: D102
        return max((abs(c) for _, c in self.terms), default=0.0)

    def is_zero(self) -> bool:  # noqa: D102
        return not self.terms


@dataclass(frozen=True)
class LaurentPoly2:
    """Sparse Laurent polynomial in (u - center, v - center).

    Terms are kept sorted lexicographically by exponent pair and zero coefficients are dropped,
    so two equal polynomials compare equal and iterate in the same order.
    """

    terms: tuple[tuple[tuple[int, int], Scalar], ...]
    center: int = 0

    @classmethod
    def from_map(cls, terms: dict[tuple[int, int], Scalar], center: int = 0) -> LaurentPoly2:
        """Build from a {(p, q): coefficient} map."""
        return cls(tuple(sorted((pq, c) for pq, c in terms.items() if c != 0)), center)

    @classmethod
    def constant(cls, value: Scalar = 1, center: int = 0) -> LaurentPoly2:  # noqa: D102
        return cls.from_map({(0, 0): value}, center)

    @classmethod
    def monomial(cls, p: int, q: int, coefficient: Scalar = 1, center: int = 0) -> LaurentPoly2:  # noqa: D102
        return cls.from_map({(p, q): coefficient}, center)

    def as_map(self) -> dict[tuple[int, int], Scalar]:  # noqa: D102
        return dict(self.terms)

    def is_zero(self) -> bool:  # noqa: D102
        return not self.terms

    def __add__(self, other: LaurentPoly2) -> LaurentPoly2:
        _check_center(self.center, other.center)
        merged: dict[tuple[int, int], Scalar] = self.as_map()
        for pq, c in other.terms:
            merged[pq] = merged.get(pq, 0) + c
        return LaurentPoly2.from_map(merged, self.center)

    def __sub__(self, other: LaurentPoly2) -> LaurentPoly2:
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> LaurentPoly2:  # noqa: D102
        return LaurentPoly2.from_map({pq: factor * c for pq, c in self.terms}, self.center)

    def __mul__(self, other: LaurentPoly2) -> LaurentPoly2:
        _check_center(self.center, other.center)
        product: dict[tuple[int, int], Scalar] = {}
        for (p1, q1), c1 in self.terms:
            for (p2, q2), c2 in other.terms:
                key: tuple[int, int] = (p1 + p2, q1 + q2)
                product[key] = product.get(key, 0) + c1 * c2
        return LaurentPoly2.from_map(product, self.center)

    def partial_u(self) -> LaurentPoly2:  # noqa: D102
        return LaurentPoly2.from_map({(p - 1, q): p * c for (p, q), c in self.terms if p != 0}, self.center)

    def partial_v(self) -> LaurentPoly2:  # noqa: D102
        return LaurentPoly2.from_map({(p, q - 1): q * c for (p, q), c in self.terms if q != 0}, self.center)

    def swap(self) -> LaurentPoly2:
        """F(v, u)."""
        return LaurentPoly2.from_map({(q, p): c for (p, q), c in self.terms}, self.center)

    def evaluate(self, u: Scalar, v: Scalar) -> Scalar:  # noqa: D102
        x: int = self.center
        return sum((c * (u - x) ** p * (v - x) ** q for (p, q), c in self.terms), 0)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        u: str = "u" if self.center == 0 else f"(u-{self.center})"
        v: str = "v" if self.center == 0 else f"(v-{self.center})"
        parts: list[str] = []
        for (p, q), c in self.terms:
            factors: list[str] = [f"({c})"]
            if p:
                factors.append(f"{u}^{p}")
            if q:
                factors.append(f"{v}^{q}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _check_center(first: int, second: int) -> None:
    if first != second:
        raise MismatchedParameterError(f"Laurent polynomials centered at {first} and {second} cannot be combined")


class ExactAlgebra:
    """Chebyshev and Laurent operations shared by the fusion, ODE and DF modules."""

    @staticmethod
    def chebyshev_u(n: int) -> ChebyshevPoly:
        """Second-kind Chebyshev polynomial U_n in the U-basis.

        Use `.to_monomial()` on the result for the monomial form (U_4 -> A^4 - 3A^2 + 1).

        Args:
        ----
            n (int): The degree, n >= 0.

        Returns:
        -------
            ChebyshevPoly: U_n
        """
        if n < 0:
            raise InvalidParameterError(f"Chebyshev degree must be nonnegative, got {n}")
        return ChebyshevPoly.from_terms({n: 1})

    @staticmethod
    def chebyshev_product(j: int, k: int) -> ChebyshevPoly:
        """Linearization U_j U_k = sum_{i=0}^{min(j,k)} U_{j+k-2i}.

        Args:
        ----
            j (int): First degree.
            k (int): Second degree.

        Returns:
        -------
            ChebyshevPoly: The U-basis expansion of the product, all coefficients equal to 1.
        """
        if j < 0 or k < 0:
            raise InvalidParameterError(f"Chebyshev degrees must be nonnegative, got {j}, {k}")
        return ChebyshevPoly.from_terms({j + k - 2 * i: 1 for i in range(min(j, k) + 1)})

    @staticmethod
    def laurent_restrict_diagonal(poly: LaurentPoly2) -> LaurentPoly1:
        """F(v, v) as a Laurent polynomial in (v - center).

        Args:
        ----
            poly (LaurentPoly2): The two-variable polynomial.

        Returns:
        -------
            LaurentPoly1: The restriction to u = v
        """
        diagonal: dict[int, Scalar] = {}
        for (p, q), c in poly.terms:
            diagonal[p + q] = diagonal.get(p + q, 0) + c
        return LaurentPoly1.from_map(diagonal, poly.center)
