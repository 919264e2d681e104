from __future__ import annotations

from dataclasses import dataclass, field, replace

from swm_calc.model.errors import InvalidParameterError


@dataclass(frozen=True)
class QuadratureConfig:
    """Settings of the Dotsenko-Fateev quadrature engine.

    levels: refinement depth; the tanh-sinh step is 2^-(levels-3) and Gauss-Jacobi uses 8*levels+8 nodes.
    split_diagonal: resolve the u=v singularity by a radial split; without it the coupling must be integrable.
    precision: mantissa bits for the mpmath closed forms; the engine itself runs in float64.
    tolerance: largest accepted difference between the last two levels (relative to the value).
    check_accuracy: raise AccuracyError when the tolerance is exceeded.
    extra_levels: deeper levels tried before a disagreement is reported.
    min_t_max, max_t_max: bounds for the tanh-sinh truncation, which grows as endpoint exponents approach -1.
    """

    levels: int = 8
    split_diagonal: bool = True
    precision: int = 53
    tolerance: float = 1e-6
    check_accuracy: bool = True
    extra_levels: int = 1
    min_t_max: float = 4.0
    max_t_max: float = 9.0

    def __post_init__(self) -> None:
        if self.levels < 3:
            raise InvalidParameterError(f"levels must be >= 3, got {self.levels}")
        if self.precision < 53:
            raise InvalidParameterError(f"precision must be >= 53 bits, got {self.precision}")
        if self.tolerance <= 0:
            raise InvalidParameterError(f"tolerance must be positive, got {self.tolerance}")
        if self.extra_levels < 0:
            raise InvalidParameterError(f"extra_levels must be nonnegative, got {self.extra_levels}")
        if not 0 < self.min_t_max <= self.max_t_max:
            raise InvalidParameterError(f"invalid tanh-sinh truncation bounds {self.min_t_max}, {self.max_t_max}")


@dataclass(frozen=True)
class ConnectionConfig:
    """Frobenius truncation, matching point and working precision of the connection computation."""

    n_terms: int = 200
    matching_point: float = 0.5
    precision: int = 128
    tolerance: float = 1e-6
    zero_tolerance: float = 1e-8

    def __post_init__(self) -> None:
        if self.n_terms < 16:
            raise InvalidParameterError(f"n_terms must be >= 16, got {self.n_terms}")
        if self.precision < 53:
            raise InvalidParameterError(f"precision must be >= 53 bits, got {self.precision}")


@dataclass(frozen=True)
class VerificationProfile:
    """Parameter ranges and sample points used by the verification driver."""

    fusion_ms: tuple[int, ...]
    ring_ms: tuple[int, ...]
    scheme_ms: tuple[int, ...]
    no_log_ms: tuple[int, ...]
    involution_ms: tuple[int, ...]
    connection_ms: tuple[int, ...]
    structural_ms: tuple[int, ...]
    # (a, b, rho) with J^+_{0,0}[1] inside the regularized window
    forrester_points: tuple[tuple[float, float, float], ...]
    transformation_points: tuple[tuple[float, float, float], ...]
    # points where F = 1 + u - v/rho also converges on every region (needs rho < 0)
    symmetric_f_points: tuple[tuple[float, float, float], ...]
    beta_samples: int
    # (a, rho, z values, number of terms)
    series_point: tuple[float, float, tuple[float, ...], int]
    # (a, rho, gamma, z)
    contour_points: tuple[tuple[float, float, float, float], ...]
    seed: int = 2024
    tolerances: dict[str, float] = field(
        default_factory=lambda: {
            "connection": 1e-6,
            "forrester": 1e-6,
            "transformation": 1e-5,
            "beta": 1e-8,
            "series": 1e-6,
            "contour": 1e-4,
        }
    )


class InitialParams:
    """Defaults for every numerical routine, gathered in one place."""

    @staticmethod
    def quadrature_config(**overrides: object) -> QuadratureConfig:  # noqa: D102
        return replace(QuadratureConfig(), **overrides)  # type: ignore[arg-type]

    @staticmethod
    def connection_config(**overrides: object) -> ConnectionConfig:  # noqa: D102
        return replace(ConnectionConfig(), **overrides)  # type: ignore[arg-type]

    @staticmethod
    def picking_initial_parameters(profile: str = "full") -> VerificationProfile:
        """Sets the parameter ranges and sample points for a verification run.

        Args:
        ----
            profile (str): "full" runs every range of the acceptance suite, "quick" a reduced subset.

        Returns:
        -------
            VerificationProfile: ranges of m and the Dotsenko-Fateev sample points
        """
        # Every point keeps the edge exponents above -1 and the corner exponents in (-2, -1) or above.
        forrester_points: tuple[tuple[float, float, float], ...] = (
            (-0.3, -0.45, 2.0),
            (-0.25, -0.25, 4.0),
            (-0.3, -0.35, 2.5),
            (-0.2, -0.4, 3.0),
            (-0.35, -0.3, 2.2),
        )
        transformation_points: tuple[tuple[float, float, float], ...] = (
            (-0.3, -0.35, 2.5),
            (-0.3, -0.35, -2.5),
            (-0.25, -0.3, -3.0),
            (-0.35, -0.25, -2.2),
        )
        symmetric_f_points: tuple[tuple[float, float, float], ...] = transformation_points[1:]
        contour_points: tuple[tuple[float, float, float, float], ...] = (
            (-0.42, -1.1, 0.06, 0.5),
            (-0.45, -1.25, 0.08, 0.4),
        )
        series_point: tuple[float, float, tuple[float, ...], int] = (-0.3, 2.5, (0.05, 0.1), 8)

        if profile == "full":
            return VerificationProfile(
                fusion_ms=tuple(range(1, 7)),
                ring_ms=tuple(range(1, 5)),
                scheme_ms=tuple(range(1, 11)),
                no_log_ms=tuple(range(1, 6)),
                involution_ms=tuple(range(1, 11)),
                connection_ms=(1, 2, 3),
                structural_ms=tuple(range(1, 7)),
                forrester_points=forrester_points,
                transformation_points=transformation_points,
                symmetric_f_points=symmetric_f_points,
                beta_samples=10,
                series_point=series_point,
                contour_points=contour_points,
            )
        if profile == "quick":
            return VerificationProfile(
                fusion_ms=(1, 2),
                ring_ms=(1, 2),
                scheme_ms=(1, 2, 3),
                no_log_ms=(1, 2),
                involution_ms=(1, 2, 3),
                connection_ms=(1,),
                structural_ms=(1, 2),
                forrester_points=forrester_points[:1],
                transformation_points=transformation_points[:1],
                symmetric_f_points=symmetric_f_points[:1],
                beta_samples=3,
                series_point=(-0.3, 2.5, (0.1,), 6),
                contour_points=contour_points[:1],
            )
        raise InvalidParameterError(f"unknown verification profile {profile!r}")
