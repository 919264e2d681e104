from __future__ import annotations

import math

import pytest

from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import InvalidParameterError


@pytest.mark.parametrize(
    ("text", "kind", "expected"),
    [
        ("+00", "J", RegionSpec("J", "+", 0, 0)),
        ("-(1,0)", "J", RegionSpec("J", "-", 1, 0)),
        ("I+01", "J", RegionSpec("I", "+", 0, 1)),
        (" - 1 1 ", "I", RegionSpec("I", "-", 1, 1)),
    ],
)
def test_parse_region(text: str, kind: str, expected: RegionSpec) -> None:
    assert RegionSpec.parse(text, kind) == expected  # type: ignore[arg-type]


@pytest.mark.parametrize("text", ["00", "+02", "K+00", "+0,", ""])
def test_parse_rejects_malformed_regions(text: str) -> None:
    with pytest.raises(InvalidParameterError):
        RegionSpec.parse(text)


def test_region_string_form() -> None:
    assert str(RegionSpec.parse("-(0,1)")) == "J-01"
    assert RegionSpec.parse("+11").is_diagonal
    assert not RegionSpec.parse("+10").is_diagonal


def test_j_boxes() -> None:
    assert RegionSpec.parse("+00").box() == ((0.0, 1.0), (0.0, 1.0))
    assert RegionSpec.parse("-00").box() == RegionSpec.parse("+00").box()
    assert RegionSpec.parse("+10").box() == ((1.0, math.inf), (0.0, 1.0))
    assert RegionSpec.parse("-11").box() == ((-math.inf, 0.0), (-math.inf, 0.0))


def test_i_boxes() -> None:
    assert RegionSpec.parse("I+00").box(1.0, 0.5) == ((0.0, 0.5), (0.0, 0.5))
    assert RegionSpec.parse("I-00").box(1.0, 0.5) == ((0.5, 1.0), (0.5, 1.0))
    assert RegionSpec.parse("I+01").box(2.0, 0.5) == ((0.0, 0.5), (2.0, math.inf))
    assert RegionSpec.parse("I-10").box(1.0, 0.25) == ((-math.inf, 0.0), (0.25, 1.0))


@pytest.mark.parametrize(("z1", "z2"), [(1.0, None), (1.0, 1.0), (1.0, 1.5), (1.0, 0.0)])
def test_i_boxes_need_ordered_points(z1: float, z2: float | None) -> None:
    with pytest.raises(InvalidParameterError):
        RegionSpec.parse("I+00").box(z1, z2)


def test_prime_and_constrained_parameters() -> None:
    assert DFParams.prime(-0.3, 2.0) == pytest.approx(0.15)
    params: DFParams = DFParams.constrained(-0.3, -0.45, 2.0, gamma=0.5)
    assert params.a == pytest.approx((-0.3, 0.15))
    assert params.b == pytest.approx((-0.45, 0.225))
    assert params.c == (0, 0)
    assert params.coupling == -1.0


@pytest.mark.parametrize("rho", [0, 1])
def test_prime_rejects_degenerate_rho(rho: int) -> None:
    with pytest.raises(InvalidParameterError):
        DFParams.prime(0.1, rho)


def test_three_point_parameters_and_total() -> None:
    params: DFParams = DFParams.constrained_three_point(-0.3, 2.5)
    assert params.a == params.b == params.c
    # 3(a + a') - 2 gamma + 2 with a' = 0.12
    assert params.total() == pytest.approx(3 * (-0.3 + 0.12))
