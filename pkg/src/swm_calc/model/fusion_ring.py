from __future__ import annotations

from dataclasses import dataclass

import pandas as pd
import sympy as sp

from swm_calc.model.errors import InvalidParameterError, MismatchedParameterError, UnsupportedLabelError
from swm_calc.model.exact_algebra import ChebyshevPoly, ExactAlgebra
from swm_calc.model.representation_data import ModuleLabel, RepresentationData, projective, simple


def _render(multiplicities: tuple[int, ...], labels: list[str]) -> str:
    parts: list[str] = []
    for coefficient, label in zip(multiplicities, labels):
        if coefficient == 0:
            continue
        sign: str = "-" if coefficient < 0 else "+"
        magnitude: str = "" if abs(coefficient) == 1 else f"{abs(coefficient)}*"
        parts.append(f"{sign} {magnitude}{label}")
    if not parts:
        return "0"
    text: str = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class FusionElement:
    """Integer combination of the basis classes (X_1..X_{2m+1}, P_1..P_{2m}) of the fusion ring."""

    m: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.multiplicities) != 4 * self.m + 1:
            raise InvalidParameterError(
                f"a fusion element for m={self.m} has {4 * self.m + 1} entries, got {len(self.multiplicities)}"
            )

    @classmethod
    def zero(cls, m: int) -> FusionElement:  # noqa: D102
        return cls(m, (0,) * (4 * m + 1))

    @classmethod
    def of(cls, label: ModuleLabel) -> FusionElement:
        """The class of a single basis module."""
        entries: list[int] = [0] * (4 * label.m + 1)
        entries[label.position] = 1
        return cls(label.m, tuple(entries))

    @classmethod
    def from_labels(cls, m: int, terms: dict[str, int]) -> FusionElement:
        """Build from {"X_3": 2, "P_2": 1}."""
        entries: list[int] = [0] * (4 * m + 1)
        for text, coefficient in terms.items():
            entries[RepresentationData.parse_label(text, m).position] += coefficient
        return cls(m, tuple(entries))

    def __add__(self, other: FusionElement) -> FusionElement:
        _check_same_m(self.m, other.m)
        return FusionElement(self.m, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def scale(self, factor: int) -> FusionElement:  # noqa: D102
        return FusionElement(self.m, tuple(factor * a for a in self.multiplicities))

    def multiplicity(self, label: ModuleLabel) -> int:  # noqa: D102
        return self.multiplicities[label.position]

    def is_nonnegative(self) -> bool:  # noqa: D102
        return all(a >= 0 for a in self.multiplicities)

    def as_dict(self) -> dict[str, int]:
        """Nonzero entries keyed by label, in basis order."""
        labels: list[ModuleLabel] = RepresentationData.basis_labels(self.m)
        return {str(label): a for label, a in zip(labels, self.multiplicities) if a != 0}

    def __str__(self) -> str:
        return _render(self.multiplicities, [str(label) for label in RepresentationData.basis_labels(self.m)])


@dataclass(frozen=True)
class GrothendieckElement:
    """Composition-factor multiplicities over (X_1..X_{2m+1})."""

    m: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.multiplicities) != 2 * self.m + 1:
            raise InvalidParameterError(
                f"a Grothendieck element for m={self.m} has {2 * self.m + 1} entries, got {len(self.multiplicities)}"
            )

    def as_dict(self) -> dict[str, int]:  # noqa: D102
        return {f"X_{s + 1}": a for s, a in enumerate(self.multiplicities) if a != 0}

    def __str__(self) -> str:
        return _render(self.multiplicities, [f"X_{s}" for s in range(1, 2 * self.m + 2)])


@dataclass(frozen=True)
class SocleSeries:
    """Three socle layers Soc_1, Soc_2/Soc_1, Soc_3/Soc_2 of a projective cover."""

    layers: tuple[tuple[ModuleLabel, ...], ...]

    def __post_init__(self) -> None:
        if len(self.layers) != 3 or self.layers[0] != self.layers[2]:
            raise InvalidParameterError("a projective cover has three layers with equal top and bottom")
        if len(self.layers[1]) != 2 or self.layers[1][0] != self.layers[1][1]:
            raise InvalidParameterError("the middle layer of a projective cover is a doubled simple")

    @property
    def top(self) -> ModuleLabel:  # noqa: D102
        return self.layers[2][0]

    def as_lists(self) -> list[list[str]]:  # noqa: D102
        return [[str(label) for label in layer] for layer in self.layers]


def _check_same_m(first: int, second: int) -> None:
    if first != second:
        raise MismatchedParameterError(f"cannot combine elements for m={first} and m={second}")


class FusionRing:
    """Fusion ring P(SW(m)) = Z[X]/<U_{4m+1} - 2U_{2m}> and Grothendieck ring K(SW(m))."""

    @staticmethod
    def p_ideal_generator(m: int) -> ChebyshevPoly:  # noqa: D102
        return ChebyshevPoly.from_terms({4 * m + 1: 1, 2 * m: -2})

    @staticmethod
    def k_ideal_generator(m: int) -> ChebyshevPoly:  # noqa: D102
        return ChebyshevPoly.from_terms({2 * m + 1: 1, 2 * m - 1: -1, 0: -2})

    @staticmethod
    def _reduce(poly: ChebyshevPoly, generator: ChebyshevPoly) -> ChebyshevPoly:
        # The generator is monic in the U-basis, so U_k * generator has top term U_{k + deg}.
        top: int = generator.degree
        while poly.degree >= top:
            leading: int = poly.coefficient(poly.degree)
            shift: ChebyshevPoly = ExactAlgebra.chebyshev_u(poly.degree - top)
            poly = poly - (shift * generator).scale(leading)
        return poly

    @staticmethod
    def class_polynomial(label: ModuleLabel) -> ChebyshevPoly:
        """X_s -> U_{s-1}; P_s -> U_{2m+s} + U_{2m-s}.

        Args:
        ----
            label (ModuleLabel): A basis label.

        Returns:
        -------
            ChebyshevPoly: The class as a polynomial in X = [X_2]
        """
        if label.is_simple:
            return ExactAlgebra.chebyshev_u(label.index - 1)
        m: int = label.m
        return ChebyshevPoly.from_terms({2 * m + label.index: 1, 2 * m - label.index: 1})

    @staticmethod
    def reduce_P(poly: ChebyshevPoly, m: int) -> ChebyshevPoly:  # noqa: N802
        """Representative of degree <= 4m modulo <U_{4m+1} - 2U_{2m}>."""
        return FusionRing._reduce(poly, FusionRing.p_ideal_generator(m))

    @staticmethod
    def grothendieck_reduce(poly: ChebyshevPoly, m: int) -> ChebyshevPoly:
        """Representative of degree <= 2m modulo <U_{2m+1} - U_{2m-1} - 2>."""
        return FusionRing._reduce(poly, FusionRing.k_ideal_generator(m))

    @staticmethod
    def from_reduced(poly: ChebyshevPoly, m: int) -> FusionElement:
        """Convert a reduced U-basis polynomial into basis classes.

        U_k (k <= 2m) gives X_{k+1}; U_{2m+s} gives P_s - X_{2m+1-s}.

        Args:
        ----
            poly (ChebyshevPoly): A polynomial of degree <= 4m.
            m (int): The SW(m) parameter.

        Returns:
        -------
            FusionElement: The corresponding element
        """
        if poly.degree > 4 * m:
            raise InvalidParameterError(f"polynomial of degree {poly.degree} is not reduced for m={m}")
        entries: list[int] = [0] * (4 * m + 1)
        for k, c in poly.terms().items():
            if k <= 2 * m:
                entries[simple(k + 1, m).position] += c
            else:
                s: int = k - 2 * m
                entries[projective(s, m).position] += c
                entries[simple(2 * m + 1 - s, m).position] -= c
        return FusionElement(m, tuple(entries))

    @staticmethod
    def to_polynomial(element: FusionElement) -> ChebyshevPoly:
        """Linear extension of class_polynomial."""
        total: ChebyshevPoly = ChebyshevPoly()
        for label, coefficient in zip(RepresentationData.basis_labels(element.m), element.multiplicities):
            if coefficient:
                total = total + FusionRing.class_polynomial(label).scale(coefficient)
        return total

    @staticmethod
    def fuse(first: FusionElement, second: FusionElement) -> FusionElement:
        """Fusion product of two elements of P(SW(m)).

        Args:
        ----
            first (FusionElement): Left factor.
            second (FusionElement): Right factor.

        Returns:
        -------
            FusionElement: The product, computed in the Chebyshev quotient ring
        """
        _check_same_m(first.m, second.m)
        m: int = first.m
        product: ChebyshevPoly = FusionRing.to_polynomial(first) * FusionRing.to_polynomial(second)
        return FusionRing.from_reduced(FusionRing.reduce_P(product, m), m)

    @staticmethod
    def fuse_labels(first: ModuleLabel, second: ModuleLabel) -> FusionElement:  # noqa: D102
        return FusionRing.fuse(FusionElement.of(first), FusionElement.of(second))

    @staticmethod
    def fuse_direct_x2(label: ModuleLabel) -> FusionElement:
        """X_2 fused with a basis label, read from the explicit fusion tables."""
        m: int = label.m
        s: int = label.index
        terms: dict[str, int]
        if label.is_simple:
            if s == 1:
                terms = {"X_2": 1}
            elif s <= 2 * m:
                terms = {f"X_{s - 1}": 1, f"X_{s + 1}": 1}
            else:
                terms = {"P_1": 1}
        elif s == 1:
            terms = {f"X_{2 * m + 1}": 2, "P_2": 1}
        elif s == 2 * m:
            terms = {f"X_{2 * m + 1}": 2, f"P_{2 * m - 1}": 1}
        else:
            terms = {f"P_{s - 1}": 1, f"P_{s + 1}": 1}
        return FusionElement.from_labels(m, terms)

    @staticmethod
    def grothendieck(element: FusionElement) -> GrothendieckElement:
        """Composition factors: P_{2i} -> 2X_{2(m-i)+1} + 2X_{2i}, P_{2i+1} -> 2X_{2(m-i)} + 2X_{2i+1}."""
        m: int = element.m
        entries: list[int] = list(element.multiplicities[: 2 * m + 1])
        for s in range(1, 2 * m + 1):
            coefficient: int = element.multiplicities[projective(s, m).position]
            if coefficient:
                for factor in FusionRing.socle_series(projective(s, m)).layers:
                    for label in factor:
                        entries[label.index - 1] += coefficient
        return GrothendieckElement(m, tuple(entries))

    @staticmethod
    def k_product(first: GrothendieckElement, second: GrothendieckElement) -> GrothendieckElement:
        """Product in K(SW(m)) via U_{s-1} and grothendieck_reduce."""
        _check_same_m(first.m, second.m)
        m: int = first.m
        product: ChebyshevPoly = ChebyshevPoly(first.multiplicities) * ChebyshevPoly(second.multiplicities)
        reduced: ChebyshevPoly = FusionRing.grothendieck_reduce(product, m)
        return GrothendieckElement(m, tuple(reduced.coefficient(k) for k in range(2 * m + 1)))

    @staticmethod
    def socle_series(label: ModuleLabel) -> SocleSeries:
        """Socle layers of P_s.

        Args:
        ----
            label (ModuleLabel): A projective label.

        Returns:
        -------
            SocleSeries: [X_{2(m-i)+1}], [X_{2i}, X_{2i}], [X_{2(m-i)+1}] for s = 2i, and
                [X_{2(m-i)}], [X_{2i+1}, X_{2i+1}], [X_{2(m-i)}] for s = 2i+1
        """
        if label.is_simple:
            raise UnsupportedLabelError(f"{label} is simple and is its own socle")
        m: int = label.m
        i: int = label.index // 2
        if label.index % 2 == 0:
            outer: ModuleLabel = simple(2 * (m - i) + 1, m)
        else:
            outer = simple(2 * (m - i), m)
        middle: ModuleLabel = simple(label.index, m)
        return SocleSeries(((outer,), (middle, middle), (outer,)))

    @staticmethod
    def fusion_table(m: int) -> pd.DataFrame:
        """Multiplication table of all basis classes as rendered strings."""
        labels: list[ModuleLabel] = RepresentationData.basis_labels(m)
        names: list[str] = [str(label) for label in labels]
        rows: list[list[str]] = [[str(FusionRing.fuse_labels(a, b)) for b in labels] for a in labels]
        return pd.DataFrame(rows, index=pd.Index(names, name="fuse"), columns=names)

    @staticmethod
    def ring_presentation(m: int, kind: str) -> dict[str, object]:
        """Presentation string, reduced basis and rank of the P- or K-ring."""
        RepresentationData.check_m(m)
        if kind == "P":
            presentation: str = f"Z[X]/(U_{4 * m + 1} - 2U_{2 * m})"
            top: int = 4 * m
        elif kind == "K":
            presentation = f"Z[X]/(U_{2 * m + 1} - U_{2 * m - 1} - 2)"
            top = 2 * m
        else:
            raise InvalidParameterError(f"ring kind must be 'P' or 'K', got {kind!r}")
        return {
            "presentation": presentation,
            "reduced_basis": [f"U_{k}" for k in range(top + 1)],
            "rank": FusionRing.quotient_rank(m, kind),
        }

    @staticmethod
    def quotient_rank(m: int, kind: str) -> int:
        """Rank of the reduced images of the basis classes (4m+1 for P, 2m+1 for K)."""
        if kind == "P":
            polys: list[ChebyshevPoly] = [
                FusionRing.reduce_P(FusionRing.class_polynomial(label), m)
                for label in RepresentationData.basis_labels(m)
            ]
            size: int = 4 * m + 1
        else:
            polys = [
                FusionRing.grothendieck_reduce(ExactAlgebra.chebyshev_u(s), m) for s in range(2 * m + 1)
            ]
            size = 2 * m + 1
        matrix: sp.Matrix = sp.Matrix([[poly.coefficient(k) for k in range(size)] for poly in polys])
        return int(matrix.rank())

    @staticmethod
    def head_multiplicity_of_unit(element: FusionElement) -> int:
        """Copies of X_1 in the head: simple X_1 summands plus projective summands topped by X_1."""
        m: int = element.m
        total: int = element.multiplicity(simple(1, m))
        for s in range(1, 2 * m + 1):
            if FusionRing.socle_series(projective(s, m)).top == simple(1, m):
                total += element.multiplicity(projective(s, m))
        return total

    @staticmethod
    def self_duality_check(m: int) -> bool:
        """Every simple L has exactly one X_1 in the head of L fused with L."""
        return all(
            FusionRing.head_multiplicity_of_unit(FusionRing.fuse_labels(simple(s, m), simple(s, m))) == 1
            for s in range(1, 2 * m + 2)
        )
