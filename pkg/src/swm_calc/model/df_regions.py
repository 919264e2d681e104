from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Literal

from swm_calc.model.errors import InvalidParameterError

Interval = tuple[float, float]

_REGION_PATTERN = re.compile(r"^\s*([JI])?\s*([+-])\s*\(?\s*([01])\s*,?\s*([01])\s*\)?\s*$")


@dataclass(frozen=True)
class RegionSpec:
    """Box region of a Dotsenko-Fateev integral.

    kind "J" uses the points 0 and 1, kind "I" the points 0 < z2 < z1. J with sign "-" and (0, 0)
    is the same box as "+" (0, 0).
    """

    kind: Literal["J", "I"]
    sign: Literal["+", "-"]
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("J", "I") or self.sign not in ("+", "-") or {self.i, self.j} - {0, 1}:
            raise InvalidParameterError(f"invalid region {self.kind}{self.sign}({self.i},{self.j})")

    @classmethod
    def parse(cls, text: str, kind: Literal["J", "I"] = "J") -> RegionSpec:
        """Parse "+00", "-(1,0)" or "I+01"."""
        match: re.Match[str] | None = _REGION_PATTERN.match(text)
        if match is None:
            raise InvalidParameterError(f"cannot parse region {text!r}")
        found_kind: str = match.group(1) or kind
        return cls(found_kind, match.group(2), int(match.group(3)), int(match.group(4)))  # type: ignore[arg-type]

    @property
    def is_diagonal(self) -> bool:  # noqa: D102
        return self.i == self.j

    def box(self, z1: float = 1.0, z2: float | None = None) -> tuple[Interval, Interval]:
        """(u-interval, v-interval) of the region."""
        inf: float = math.inf
        if self.kind == "J":
            unit: Interval = (0.0, 1.0)
            upper: Interval = (1.0, inf)
            lower: Interval = (-inf, 0.0)
            table: dict[tuple[str, int, int], tuple[Interval, Interval]] = {
                ("+", 0, 0): (unit, unit),
                ("-", 0, 0): (unit, unit),
                ("+", 1, 1): (upper, upper),
                ("+", 0, 1): (unit, upper),
                ("+", 1, 0): (upper, unit),
                ("-", 1, 1): (lower, lower),
                ("-", 0, 1): (unit, lower),
                ("-", 1, 0): (lower, unit),
            }
            return table[(self.sign, self.i, self.j)]
        if z2 is None or not 0 < z2 < z1:
            raise InvalidParameterError(f"I-regions need 0 < z2 < z1, got z1={z1}, z2={z2}")
        near: Interval = (0.0, z2)
        far: Interval = (z1, inf)
        middle: Interval = (z2, z1)
        negative: Interval = (-inf, 0.0)
        table = {
            ("+", 0, 0): (near, near),
            ("+", 1, 1): (far, far),
            ("+", 0, 1): (near, far),
            ("+", 1, 0): (far, near),
            ("-", 1, 1): (negative, negative),
            ("-", 0, 1): (middle, negative),
            ("-", 1, 0): (negative, middle),
            ("-", 0, 0): (middle, middle),
        }
        return table[(self.sign, self.i, self.j)]

    def __str__(self) -> str:
        return f"{self.kind}{self.sign}{self.i}{self.j}"


@dataclass(frozen=True)
class DFParams:
    """Exponents of a two-variable Dotsenko-Fateev integrand.

    (a1, b1, c1) belong to u and (a2, b2, c2) to v, attached to the points 0, z2 (or 1) and z1.
    The c-exponents are only used by I-integrals.
    """

    a1: complex
    a2: complex
    b1: complex
    b2: complex
    gamma: complex
    c1: complex = 0
    c2: complex = 0

    @staticmethod
    def prime(x: complex, rho: complex) -> complex:
        """x' = -x / rho."""
        if rho in (0, 1):
            raise InvalidParameterError(f"rho must avoid 0 and 1, got {rho}")
        return -x / rho

    @classmethod
    def constrained(cls, a: complex, b: complex, rho: complex, gamma: complex = 1) -> DFParams:
        """({a, a'}, {b, b'}, gamma) for J-integrals."""
        return cls(a, cls.prime(a, rho), b, cls.prime(b, rho), gamma)

    @classmethod
    def constrained_three_point(cls, a: complex, rho: complex, gamma: complex = 1) -> DFParams:
        """({a, a'}, {a, a'}, {a, a'}, gamma) for I-integrals."""
        a_prime: complex = cls.prime(a, rho)
        return cls(a, a_prime, a, a_prime, gamma, a, a_prime)

    @property
    def a(self) -> tuple[complex, complex]:  # noqa: D102
        return self.a1, self.a2

    @property
    def b(self) -> tuple[complex, complex]:  # noqa: D102
        return self.b1, self.b2

    @property
    def c(self) -> tuple[complex, complex]:  # noqa: D102
        return self.c1, self.c2

    @property
    def coupling(self) -> complex:
        """Exponent of (u - v + i0), i.e. -2 gamma."""
        return -2 * self.gamma

    def total(self) -> complex:
        """Homogeneity degree of the three-point integral: sum of all exponents - 2 gamma + 2."""
        return sum(self.a + self.b + self.c, 0j) - 2 * self.gamma + 2
