from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from swm_calc.model.errors import InconsistencyError, InvalidParameterError
from swm_calc.model.representation_data import RepresentationData

logger = logging.getLogger("swm_calc")

_Z = sp.Symbol("z")
_S = sp.Symbol("s")

POINTS: tuple[str, ...] = ("0", "1", "inf")


def _to_fraction(value: sp.Rational) -> Fraction:
    rational: sp.Rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _coefficients(expression: sp.Expr, variable: sp.Symbol) -> tuple[Fraction, ...]:
    """Ascending coefficients of a polynomial expression with rational coefficients."""
    poly: sp.Poly = sp.Poly(sp.expand(expression), variable, domain=sp.QQ)
    return tuple(_to_fraction(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class FuchsianOperator:
    """d^4 + p3/(z(z-1)) d^3 + p2/(z(z-1))^2 d^2 + p1/(z(z-1))^3 d + p0/(z(z-1))^4.

    `numerators[k]` holds the ascending rational coefficients of p_k(z), k = 0..3.
    """

    m: int
    numerators: tuple[tuple[Fraction, ...], ...]

    def numerator(self, k: int) -> sp.Expr:
        """p_k(z) as a sympy expression (p_4 = 1)."""
        if k == 4:
            return sp.Integer(1)
        return sum(
            (sp.Rational(c.numerator, c.denominator) * _Z**power for power, c in enumerate(self.numerators[k])),
            sp.Integer(0),
        )

    def evaluate_numerator(self, k: int, z: Fraction) -> Fraction:  # noqa: D102
        return sum((c * z**power for power, c in enumerate(self.numerators[k])), Fraction(0))


@dataclass(frozen=True)
class LocalRecurrence:
    """Coefficient table r[k][j] of R_k(t) = sum_j r[k][j] t^j at a finite singular point.

    Multiplying the operator by z^4 (z-1)^4 gives sum_k Q_k d^k. In the local variable t (t = z at 0,
    t = 1 - z at 1) R_k = (+-1)^k Q_k / t^k is a polynomial of degree <= 4, and
    L[t^s] = t^s sum_j f_j(s) t^j with f_j(s) = sum_k r[k][j] s(s-1)...(s-k+1).
    """

    point: str
    table: tuple[tuple[Fraction, ...], ...]

    def shift_polynomial(self, j: int, s: Fraction) -> Fraction:
        """f_j(s), exactly."""
        total: Fraction = Fraction(0)
        falling: Fraction = Fraction(1)
        for k in range(5):
            total += self.table[k][j] * falling
            falling *= s - k
        return total


class FuchsianAnalysis:
    """Construction of the fourth-order operator and its exact local data."""

    @staticmethod
    def build_operator(m: int) -> FuchsianOperator:
        """Transcribe p_0..p_3 with exact rational arithmetic.

        Args:
        ----
            m (int): The SW(m) parameter, m >= 1.

        Returns:
        -------
            FuchsianOperator: The operator for this m
        """
        RepresentationData.check_m(m)
        n: sp.Integer = sp.Integer(m)
        q: sp.Integer = 2 * n + 1
        z: sp.Symbol = _Z
        p0: sp.Expr = (
            3
            * n**4
            / q**4
            * (
                (16 * n**3 - 8 * n**2 - 16 * n - 4) * z**2
                + (-16 * n**3 + 8 * n**2 + 16 * n + 4) * z
                + (3 * n**4 + 12 * n**3 + 2 * n**2 - 4 * n - 1)
            )
        )
        p1: sp.Expr = (
            2
            / q**3
            * (
                (16 * n**5 + 48 * n**4 + 56 * n**3 + 34 * n**2 + 12 * n + 2) * z**3
                + (-24 * n**5 - 72 * n**4 - 84 * n**3 - 51 * n**2 - 18 * n - 3) * z**2
                + (-12 * n**6 - 8 * n**5 + 12 * n**3 + 13 * n**2 + 6 * n + 1) * z
                + (6 * n**6 + 8 * n**5 + 12 * n**4 + 8 * n**3 + 2 * n**2)
            )
        )
        p2: sp.Expr = (
            2
            / q**2
            * (
                (8 * n**4 + 32 * n**3 + 44 * n**2 + 28 * n + 7) * z**2
                + (-8 * n**4 - 32 * n**3 - 44 * n**2 - 28 * n - 7) * z
                + (-(n**4) + 2 * n**3 + 5 * n**2 + 4 * n + 1)
            )
        )
        p3: sp.Expr = 4 * (n + 1) ** 2 * (2 * z - 1) / q
        return FuchsianOperator(m, tuple(_coefficients(p, z) for p in (p0, p1, p2, p3)))

    @staticmethod
    @functools.lru_cache(maxsize=64)
    def local_recurrence(op: FuchsianOperator, point: str) -> LocalRecurrence:
        """Table r[k][j] at the base point "0" or "1"."""
        if point not in ("0", "1"):
            raise InvalidParameterError(f"Frobenius base point must be '0' or '1', got {point!r}")
        t: sp.Symbol = sp.Symbol("t")
        rows: list[tuple[Fraction, ...]] = []
        for k in range(5):
            if point == "0":
                local: sp.Expr = op.numerator(k).subs(_Z, t) * (t - 1) ** k
            else:
                local = op.numerator(k).subs(_Z, 1 - t) * (1 - t) ** k
            coefficients: tuple[Fraction, ...] = _coefficients(local, t)
            if len(coefficients) > 5:
                raise InconsistencyError(f"R_{k} has degree {len(coefficients) - 1} > 4 at z={point}")
            rows.append(coefficients + (Fraction(0),) * (5 - len(coefficients)))
        return LocalRecurrence(point, tuple(rows))

    @staticmethod
    def indicial_polynomial(op: FuchsianOperator, point: str) -> sp.Poly:
        """Indicial polynomial in the exponent rho at 0, 1 or infinity.

        At infinity the dominant part of L[z^s] is z^(s+4) f_4(s), and a solution behaving like
        z^(-rho) has exponent rho, so the polynomial is f_4(-rho).
        """
        rho: sp.Symbol = _S
        recurrence: LocalRecurrence
        if point == "inf":
            recurrence = FuchsianAnalysis.local_recurrence(op, "0")
            j: int = 4
            argument: sp.Expr = -rho
        else:
            recurrence = FuchsianAnalysis.local_recurrence(op, point)
            j = 0
            argument = rho
        expression: sp.Expr = sum(
            (
                sp.Rational(recurrence.table[k][j].numerator, recurrence.table[k][j].denominator)
                * sp.ff(argument, k)
                for k in range(5)
            ),
            sp.Integer(0),
        )
        return sp.Poly(sp.expand(expression), rho, domain=sp.QQ)

    @staticmethod
    def indicial_exponents(op: FuchsianOperator, point: str) -> tuple[Fraction, ...]:
        """The four exact roots of the indicial polynomial, ascending.

        Args:
        ----
            op (FuchsianOperator): The operator.
            point (str): "0", "1" or "inf".

        Returns:
        -------
            tuple[Fraction, ...]: The exponents with multiplicity
        """
        if point not in POINTS:
            raise InvalidParameterError(f"singular point must be one of {POINTS}, got {point!r}")
        poly: sp.Poly = FuchsianAnalysis.indicial_polynomial(op, point)
        roots: dict[sp.Expr, int] = sp.roots(poly)
        exponents: list[Fraction] = []
        for root, multiplicity in roots.items():
            if not root.is_rational:
                raise InconsistencyError(f"non-rational indicial root {root} at z={point} for m={op.m}")
            exponents.extend([_to_fraction(root)] * multiplicity)
        if len(exponents) != 4:
            raise InconsistencyError(f"expected 4 indicial roots at z={point}, found {len(exponents)}")
        logger.debug("indicial exponents at %s for m=%d: %s", point, op.m, exponents)
        return tuple(sorted(exponents))
