from __future__ import annotations

import cmath
import itertools
import math
from typing import Literal

import mpmath

from swm_calc.model.errors import DomainError, InvalidParameterError, PoleError

I0 = Literal["+", "-", "none"]

_POLE_TOLERANCE = 1e-13


def _is_pole(z: complex) -> bool:
    nearest: int = round(z.real)
    return nearest <= 0 and abs(z - nearest) < _POLE_TOLERANCE


def e_factor(x: complex) -> complex:
    """1 - exp(2 pi i x)."""
    return 1 - cmath.exp(2j * math.pi * x)


def sin_pi(x: complex) -> complex:  # noqa: D103
    return cmath.sin(math.pi * x)


class SpecialFunctions:
    """Gamma-type closed forms, branch conventions and trigonometric prefactors."""

    @staticmethod
    def log_gamma(z: complex, precision: int = 53) -> complex:
        """Principal branch of log Gamma.

        Args:
        ----
            z (complex): Argument, not a nonpositive integer.
            precision (int): Working precision in bits.

        Returns:
        -------
            complex: log Gamma(z); exp of it recovers Gamma(z)
        """
        z = complex(z)
        if _is_pole(z):
            raise PoleError(f"Gamma has a pole at {z}")
        with mpmath.workprec(precision):
            return complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))

    @staticmethod
    def gamma(z: complex, precision: int = 53) -> complex:  # noqa: D102
        z = complex(z)
        if _is_pole(z):
            raise PoleError(f"Gamma has a pole at {z}")
        with mpmath.workprec(precision):
            return complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))

    @staticmethod
    def gamma_ratio(numerator: tuple[complex, ...], denominator: tuple[complex, ...], precision: int = 53) -> complex:
        """prod Gamma(numerator) / prod Gamma(denominator); a pole of a denominator Gamma gives 0."""
        if any(_is_pole(complex(z)) for z in denominator):
            for z in numerator:
                SpecialFunctions.log_gamma(z, precision)
            return 0j
        total: complex = sum((SpecialFunctions.log_gamma(z, precision) for z in numerator), 0j) - sum(
            (SpecialFunctions.log_gamma(z, precision) for z in denominator), 0j
        )
        return cmath.exp(total)

    @staticmethod
    def beta(x: complex, y: complex, precision: int = 53) -> complex:
        """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)."""
        return SpecialFunctions.gamma_ratio((x, y), (x + y,), precision)

    @staticmethod
    def interval_beta(interval: Literal["unit", "upper", "lower"], a: complex, b: complex) -> complex:
        """Closed form of the one-variable integral of |v|^a |v-1|^b over (0,1), (1,inf) or (-inf,0).

        Args:
        ----
            interval (str): "unit" for (0, 1), "upper" for (1, inf), "lower" for (-inf, 0).
            a (complex): Exponent at 0.
            b (complex): Exponent at 1.

        Returns:
        -------
            complex: The Gamma-product value
        """
        if interval == "unit":
            return SpecialFunctions.gamma_ratio((a + 1, b + 1), (a + b + 2,))
        if interval == "upper":
            return SpecialFunctions.gamma_ratio((b + 1, -a - b - 1), (-a,))
        if interval == "lower":
            return SpecialFunctions.gamma_ratio((a + 1, -a - b - 1), (-b,))
        raise InvalidParameterError(f"unknown interval {interval!r}")

    @staticmethod
    def phase_power(x: float, p: complex, i0: I0 = "none") -> complex:
        """x^p on the real line with the branch fixed by the i0 prescription.

        Negative x gets e^{i pi p}|x|^p for "+", e^{-i pi p}|x|^p for "-", and |x|^p for "none".
        """
        if x == 0:
            raise DomainError("phase_power is singular at x = 0")
        modulus: complex = abs(x) ** complex(p)
        if x > 0 or i0 == "none":
            return modulus
        if i0 == "+":
            return cmath.exp(1j * math.pi * p) * modulus
        if i0 == "-":
            return cmath.exp(-1j * math.pi * p) * modulus
        raise InvalidParameterError(f"unknown i0 prescription {i0!r}")

    @staticmethod
    def phase_gap_ratio(eps: complex) -> complex:
        """(1 - e^{i pi eps}) / eps, continued to -i pi at eps = 0."""
        if abs(eps) < 1e-8:
            return -1j * math.pi * (1 + 0.5j * math.pi * eps)
        return -complex(mpmath.expm1(1j * math.pi * complex(eps))) / eps

    @staticmethod
    def c_factor(
        sign: Literal["+", "-"], i: int, j: int, a: tuple[complex, complex], b: tuple[complex, complex], gamma: complex
    ) -> complex:
        """Trigonometric factor c^pm_{i,j}(a, b, gamma) of the two-variable cycles."""
        if sign == "-" and (i, j) != (0, 0):
            return SpecialFunctions.c_factor("+", i, j, b, a, gamma)
        a1, a2 = a
        b1, b2 = b
        g2: complex = 2 * gamma
        factors: tuple[complex, ...]
        if (i, j) == (1, 1):
            factors = (b1, b2, b1 + b2 - g2, a1 + b1 - g2, a2 + b2 - g2, a1 + a2 + b1 + b2 - g2)
        elif (i, j) == (0, 0):
            factors = (a1, a2, b1, b2, a1 + a2 - g2, b1 + b2 - g2)
        elif (i, j) == (0, 1):
            factors = (a1, b1, b2, b1 + b2 - g2, a2 + b2 - g2)
        elif (i, j) == (1, 0):
            factors = (a2, b1, b2, b1 + b2 - g2, a1 + b1 - g2)
        else:
            raise InvalidParameterError(f"region indices must be 0 or 1, got ({i}, {j})")
        return math.prod((e_factor(x) for x in factors), start=1 + 0j)

    @staticmethod
    def d_factor(
        sign: Literal["+", "-"],
        i: int,
        j: int,
        a: tuple[complex, complex],
        b: tuple[complex, complex],
        c: tuple[complex, complex],
        gamma: complex,
    ) -> complex:
        """Trigonometric factor d^pm_{i,j}(a, b, c, gamma) of the mixed three-point regions."""
        a1, a2 = a
        b1, b2 = b
        c1, c2 = c
        g2: complex = 2 * gamma
        table: dict[tuple[str, int, int], tuple[complex, ...]] = {
            ("+", 0, 1): (a1, b1, c2, a2 + b2 + c2 - g2),
            ("+", 1, 0): (a2, b2, c1, a1 + b1 + c1 - g2),
            ("-", 0, 1): (b1, c1, a2, a2 + b2 + c2 - g2),
            ("-", 1, 0): (b2, c2, a1, a1 + b1 + c1 - g2),
        }
        if (sign, i, j) not in table:
            raise InvalidParameterError(f"d-factor is defined for mixed regions only, got {sign}({i},{j})")
        return math.prod((e_factor(x) for x in table[(sign, i, j)]), start=1 + 0j)

    @staticmethod
    def c_lmn(
        l: int,  # noqa: E741
        m: int,
        n: int,
        a: tuple[complex, ...],
        b: tuple[complex, ...],
        gamma: dict[tuple[int, int], complex],
    ) -> complex:
        """Trigonometric factor c_{l,m,n} of the N-variable cycle, N = l + m + n.

        Args:
        ----
            l (int): Number of variables attached to the left point only.
            m (int): Number of variables between the two points.
            n (int): Number of variables attached to the right point only.
            a (tuple[complex, ...]): Exponents a_1..a_N.
            b (tuple[complex, ...]): Exponents b_1..b_N.
            gamma (dict[tuple[int, int], complex]): Couplings gamma_{j,k} for 1 <= j < k <= N; missing pairs are 0.

        Returns:
        -------
            complex: The product of e-factors over all nonempty subsets
        """
        size: int = l + m + n
        if min(l, m, n) < 0 or size == 0 or len(a) != size or len(b) != size:
            raise InvalidParameterError(f"inconsistent sizes l={l}, m={m}, n={n}, |a|={len(a)}, |b|={len(b)}")

        def coupling(j: int, k: int) -> complex:
            return gamma.get((min(j, k), max(j, k)), 0)

        def pair_sum(subset: tuple[int, ...]) -> complex:
            return sum((coupling(j, k) for j, k in itertools.combinations(subset, 2)), 0j)

        def a_subset(subset: tuple[int, ...]) -> complex:
            return sum((a[j - 1] for j in subset), 0j) - 2 * pair_sum(subset)

        def b_subset(subset: tuple[int, ...]) -> complex:
            return sum((b[j - 1] for j in subset), 0j) - 2 * pair_sum(subset)

        def zeta_subset(subset: tuple[int, ...]) -> complex:
            touching: complex = sum(
                (
                    coupling(j, k)
                    for j, k in itertools.combinations(range(1, size + 1), 2)
                    if j in subset or k in subset
                ),
                0j,
            )
            return -sum((a[j - 1] + b[j - 1] for j in subset), 0j) + 2 * touching

        def subsets(indices: list[int]) -> itertools.chain[tuple[int, ...]]:
            return itertools.chain.from_iterable(itertools.combinations(indices, r) for r in range(1, len(indices) + 1))

        total: complex = 1 + 0j
        for subset in subsets(list(range(1, l + m + 1))):
            total *= e_factor(a_subset(subset))
        for subset in subsets(list(range(l + 1, size + 1))):
            total *= e_factor(b_subset(subset))
        for subset in subsets(list(range(1, l + 1)) + list(range(l + m + 1, size + 1))):
            total *= e_factor(zeta_subset(subset))
        return total

    @staticmethod
    def trig_prefactor(which: str, *args: object) -> complex:
        """Dispatch by name: "e" (x), "c" (sign, i, j, a, b, gamma), "d" (sign, i, j, a, b, c, gamma)."""
        if which == "e":
            return e_factor(complex(args[0]))  # type: ignore[arg-type]
        if which == "c":
            return SpecialFunctions.c_factor(*args)  # type: ignore[arg-type]
        if which == "d":
            return SpecialFunctions.d_factor(*args)  # type: ignore[arg-type]
        raise InvalidParameterError(f"unknown trigonometric prefactor {which!r}")
