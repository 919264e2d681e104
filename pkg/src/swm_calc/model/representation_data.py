from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from swm_calc.model.errors import InconsistencyError, InvalidParameterError, UnsupportedLabelError


class ModuleKind(str, Enum):  # noqa: D101
    SIMPLE = "X"
    PROJECTIVE = "P"


@dataclass(frozen=True, order=True)
class ModuleLabel:
    """A simple module X_s (1 <= s <= 2m+1) or a projective cover P_s (1 <= s <= 2m) of SW(m)."""

    kind: ModuleKind
    index: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidParameterError(f"m must be a positive integer, got {self.m}")
        upper: int = 2 * self.m + 1 if self.kind is ModuleKind.SIMPLE else 2 * self.m
        if not 1 <= self.index <= upper:
            raise InvalidParameterError(f"{self.kind.value}_{self.index} is not a valid label for m={self.m}")

    @property
    def is_simple(self) -> bool:  # noqa: D102
        return self.kind is ModuleKind.SIMPLE

    @property
    def position(self) -> int:
        """Index in the canonical basis order (X_1..X_{2m+1}, P_1..P_{2m})."""
        return self.index - 1 if self.is_simple else 2 * self.m + self.index

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.index}"


def simple(s: int, m: int) -> ModuleLabel:  # noqa: D103
    return ModuleLabel(ModuleKind.SIMPLE, s, m)


def projective(s: int, m: int) -> ModuleLabel:  # noqa: D103
    return ModuleLabel(ModuleKind.PROJECTIVE, s, m)


@dataclass(frozen=True)
class WeightData:  # noqa: D101
    r: int
    s: int
    n: int
    value: Fraction


@dataclass(frozen=True)
class RiemannScheme:
    """Characteristic exponents at 0, 1 and infinity.

    Exponents at 0 and 1 are listed in the pairing order (1,1), (0,1), (1,0), (0,0).
    """

    exponents_at_0: tuple[Fraction, ...]
    exponents_at_1: tuple[Fraction, ...]
    exponents_at_infinity: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.total() != 6:
            raise InconsistencyError(f"Fuchs relation violated: exponents sum to {self.total()}")

    def total(self) -> Fraction:  # noqa: D102
        return sum(self.exponents_at_0 + self.exponents_at_1 + self.exponents_at_infinity, Fraction(0))

    def at(self, point: str) -> tuple[Fraction, ...]:
        """Exponents at "0", "1" or "inf"."""
        return {"0": self.exponents_at_0, "1": self.exponents_at_1, "inf": self.exponents_at_infinity}[point]


_LABEL_PATTERN = re.compile(r"^\s*([XP])_?(\d+)\s*$")


class RepresentationData:
    """Exact representation-theoretic data of SW(m): weights, labels, decompositions, blocks."""

    @staticmethod
    def check_m(m: int) -> None:  # noqa: D102
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidParameterError(f"m must be a positive integer, got {m!r}")

    @staticmethod
    def central_charge(m: int) -> Fraction:
        """c_{1,2m+1} = 15/2 - 3(2m+1 + 1/(2m+1)).

        Args:
        ----
            m (int): The SW(m) parameter, m >= 1.

        Returns:
        -------
            Fraction: The central charge
        """
        RepresentationData.check_m(m)
        p: int = 2 * m + 1
        return Fraction(15, 2) - 3 * (p + Fraction(1, p))

    @staticmethod
    def conformal_weight(r: int, s: int, n: int, m: int) -> Fraction:
        """h_{r,s;n} = h_{r-n,s} with the closed formula for h_{r,s}.

        Args:
        ----
            r (int): First Kac index.
            s (int): Second Kac index.
            n (int): Lattice shift.
            m (int): The SW(m) parameter.

        Returns:
        -------
            Fraction: The conformal weight
        """
        RepresentationData.check_m(m)
        p: int = 2 * m + 1
        r_shifted: int = r - n
        return (
            Fraction((r_shifted * r_shifted - 1) * p, 8)
            - Fraction(r_shifted * s - 1, 4)
            + Fraction(s * s - 1, 8 * p)
        )

    @staticmethod
    def weight_data(r: int, s: int, n: int, m: int) -> WeightData:  # noqa: D102
        return WeightData(r, s, n, RepresentationData.conformal_weight(r, s, n, m))

    @staticmethod
    def h22_closed_form(m: int) -> Fraction:
        """h_{2,2} = 3/8 (2m+1) - 3/4 + 3/(8(2m+1))."""
        RepresentationData.check_m(m)
        return Fraction(3, 8) * (2 * m + 1) - Fraction(3, 4) + Fraction(3, 8 * (2 * m + 1))

    @staticmethod
    def lattice_momenta(m: int) -> tuple[float, float, float]:
        """(alpha_+, alpha_-, alpha_0) with alpha_+ = sqrt(2m+1) and alpha_- = -1/alpha_+."""
        RepresentationData.check_m(m)
        alpha_plus: float = math.sqrt(2 * m + 1)
        alpha_minus: float = -1.0 / alpha_plus
        return alpha_plus, alpha_minus, alpha_plus + alpha_minus

    @staticmethod
    def momentum(r: int, s: int, n: int, m: int) -> float:
        """beta_{r,s;n} = (1-r)/2 alpha_+ + (1-s)/2 alpha_- + n/2 alpha_+."""
        alpha_plus, alpha_minus, _ = RepresentationData.lattice_momenta(m)
        return (1 - r) / 2 * alpha_plus + (1 - s) / 2 * alpha_minus + n / 2 * alpha_plus

    @staticmethod
    def central_charge_from_momentum(m: int) -> float:
        """c = 3/2 - 3 alpha_0^2, numerically."""
        alpha_zero: float = RepresentationData.lattice_momenta(m)[2]
        return 1.5 - 3 * alpha_zero**2

    @staticmethod
    def df_exponent_pair(m: int) -> tuple[Fraction, Fraction]:
        """(a, rho) = (alpha_- beta_{2,2}, alpha_-^2) = (m/(2m+1), 1/(2m+1)), exactly."""
        RepresentationData.check_m(m)
        p: int = 2 * m + 1
        return Fraction(m, p), Fraction(1, p)

    @staticmethod
    def deformed_df_parameters(m: int, eps: complex, theta: float = 0.1) -> tuple[complex, complex]:
        """Deformed pair (a, rho) with alpha_+ -> alpha_+ + theta*eps and alpha_- = -1/alpha_+.

        Args:
        ----
            m (int): The SW(m) parameter.
            eps (complex): Deformation parameter; eps = 0 returns df_exponent_pair(m).
            theta (float): Fixed small slope of the deformation.

        Returns:
        -------
            tuple[complex, complex]: (a, rho)
        """
        alpha_plus: complex = RepresentationData.lattice_momenta(m)[0] + theta * eps
        alpha_minus: complex = -1 / alpha_plus
        beta_22: complex = -alpha_plus / 2 - alpha_minus / 2
        return alpha_minus * beta_22, alpha_minus**2

    @staticmethod
    def basis_labels(m: int) -> list[ModuleLabel]:
        """The 4m+1 labels in canonical order."""
        RepresentationData.check_m(m)
        return [simple(s, m) for s in range(1, 2 * m + 2)] + [projective(s, m) for s in range(1, 2 * m + 1)]

    @staticmethod
    def parse_label(text: str, m: int) -> ModuleLabel:
        """Parse "X_3", "X3", "P_2" into a label for SW(m)."""
        match: re.Match[str] | None = _LABEL_PATTERN.match(text)
        if match is None:
            raise InvalidParameterError(f"cannot parse module label {text!r}")
        return ModuleLabel(ModuleKind(match.group(1)), int(match.group(2)), m)

    @staticmethod
    def min_weight(label: ModuleLabel) -> Fraction:
        """Minimal conformal weight of a simple module.

        X_{2i+1} has h_{1,2i+1}; X_{2(m-i)} has h_{1,2(m-i);-1} = h_{2,2(m-i)}.

        Args:
        ----
            label (ModuleLabel): A simple label.

        Returns:
        -------
            Fraction: The minimal weight
        """
        if not label.is_simple:
            raise UnsupportedLabelError(f"minimal weight is not defined for the projective label {label}")
        if label.index % 2 == 1:
            return RepresentationData.conformal_weight(1, label.index, 0, label.m)
        return RepresentationData.conformal_weight(1, label.index, -1, label.m)

    @staticmethod
    def ns_decomposition(label: ModuleLabel, n_max: int) -> list[tuple[int, Fraction]]:
        """Multiplicities and weights of the N=1 Virasoro decomposition.

        Args:
        ----
            label (ModuleLabel): A simple label.
            n_max (int): Number of terms to generate, n_max >= 0.

        Returns:
        -------
            list[tuple[int, Fraction]]: (2n+1, h_{1,s;-2n}) for odd s; (2n, h_{1,s;-2n+1}) for even s
        """
        if not label.is_simple:
            raise UnsupportedLabelError(f"the decomposition is listed for simple modules only, got {label}")
        if n_max < 0:
            raise InvalidParameterError(f"n_max must be nonnegative, got {n_max}")
        s: int = label.index
        if s % 2 == 1:
            return [
                (2 * n + 1, RepresentationData.conformal_weight(1, s, -2 * n, label.m)) for n in range(n_max + 1)
            ]
        return [(2 * n, RepresentationData.conformal_weight(1, s, -2 * n + 1, label.m)) for n in range(1, n_max + 1)]

    @staticmethod
    def block_of(label: ModuleLabel) -> int:
        """Block index in 1..m+1."""
        m: int = label.m
        s: int = label.index
        if label.is_simple:
            if s == 2 * m + 1:
                return m + 1
            return s // 2 + 1 if s % 2 == 1 else m - s // 2 + 1
        return m - s // 2 + 1 if s % 2 == 0 else s // 2 + 1

    @staticmethod
    def zhu_dimension(m: int) -> int:
        """4m + 2m + 1: m blocks of dimension 4, m of dimension 2, one of dimension 1."""
        RepresentationData.check_m(m)
        return 4 * m + 2 * m + 1

    @staticmethod
    def riemann_exponents(m: int) -> RiemannScheme:
        """Riemann scheme of the fourth-order equation.

        Args:
        ----
            m (int): The SW(m) parameter.

        Returns:
        -------
            RiemannScheme: exponents at 0 and 1 ordered (1,1), (0,1), (1,0), (0,0), then those at infinity
        """
        RepresentationData.check_m(m)
        p: int = 2 * m + 1
        local: tuple[Fraction, ...] = (
            Fraction(m * m, p),
            Fraction(m * m + 4 * m + 1, p),
            Fraction(1 - 3 * m * m, p),
            Fraction(-3 * m * m, p),
        )
        at_infinity: tuple[Fraction, ...] = (Fraction(0), Fraction(1, p), Fraction(4 * m * m, p), Fraction(p))
        return RiemannScheme(local, local, at_infinity)
