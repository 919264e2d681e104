from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy as sp

from swm_calc.model.connection_matrix import ConnectionMatrix
from swm_calc.model.df_identities import DFIdentities
from swm_calc.model.df_integrals import DFIntegrals
from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import SwmCalcError
from swm_calc.model.exact_algebra import LaurentPoly2
from swm_calc.model.frobenius_series import FrobeniusSeries
from swm_calc.model.fuchsian_operator import FuchsianAnalysis, FuchsianOperator
from swm_calc.model.fusion_ring import FusionElement, FusionRing
from swm_calc.model.initial_params import (
    ConnectionConfig,
    InitialParams,
    QuadratureConfig,
    VerificationProfile,
)
from swm_calc.model.representation_data import ModuleLabel, RepresentationData, simple

logger = logging.getLogger("swm_calc")

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

MIXED_REGIONS: tuple[str, ...] = ("+01", "+10", "-01", "-10")

Check = Callable[[], tuple[bool, dict[str, object]]]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one acceptance criterion."""

    criterion: int
    name: str
    status: str
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:  # noqa: D102
        return self.status != FAIL


@dataclass(frozen=True)
class VerificationReport:  # noqa: D101
    m: int
    profile: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:  # noqa: D102
        return all(check.passed for check in self.checks)


def _guarded(criterion: int, name: str, check: Check) -> CheckResult:
    """Run a check; a library error counts as a failure with its message recorded."""
    try:
        ok, details = check()
    except SwmCalcError as error:
        logger.warning("criterion %d (%s) raised %s: %s", criterion, name, type(error).__name__, error)
        return CheckResult(criterion, name, FAIL, {"error": f"{type(error).__name__}: {error}"})
    logger.info("criterion %d (%s): %s", criterion, name, PASS if ok else FAIL)
    return CheckResult(criterion, name, PASS if ok else FAIL, details)


def _skipped(criterion: int, name: str, m: int) -> CheckResult:
    return CheckResult(criterion, name, SKIP, {"reason": f"m={m} is outside the range of this check"})


class VerificationDriver:
    """Runs the acceptance suite at one value of m."""

    @staticmethod
    def run(
        m: int,
        profile: str = "full",
        include_df: bool = True,
        quadrature: QuadratureConfig | None = None,
        connection: ConnectionConfig | None = None,
        seed: int | None = None,
    ) -> VerificationReport:
        """Every criterion applicable at m, in criterion order.

        Args:
        ----
            m (int): The SW(m) parameter.
            profile (str): "full" or "quick", see InitialParams.picking_initial_parameters.
            include_df (bool): Also run the m-independent Dotsenko-Fateev criteria.
            quadrature (QuadratureConfig | None): Quadrature settings for the integral checks.
            connection (ConnectionConfig | None): Settings of the numeric connection matrix.
            seed (int | None): Seed of the randomized checks; None takes the profile's seed.

        Returns:
        -------
            VerificationReport: one CheckResult per criterion
        """
        RepresentationData.check_m(m)
        params: VerificationProfile = InitialParams.picking_initial_parameters(profile)
        tolerances: dict[str, float] = params.tolerances
        rng: np.random.Generator = np.random.default_rng(params.seed if seed is None else seed)

        checks: list[CheckResult] = []

        def ranged(criterion: int, name: str, ms: tuple[int, ...], check: Check) -> None:
            if m <= max(ms):
                checks.append(_guarded(criterion, name, check))
            else:
                checks.append(_skipped(criterion, name, m))

        numeric_connection: bool = m in params.connection_ms
        connection_config: ConnectionConfig = connection or InitialParams.connection_config()
        ranged(1, "fusion oracle", params.fusion_ms, lambda: VerificationDriver.fusion_oracle(m))
        ranged(2, "ring axioms", params.ring_ms, lambda: VerificationDriver.ring_axioms(m))
        ranged(3, "Grothendieck homomorphism", params.ring_ms, lambda: VerificationDriver.grothendieck_homomorphism(m))
        ranged(4, "Riemann scheme", params.scheme_ms, lambda: VerificationDriver.riemann_scheme(m))
        ranged(5, "no logarithms", params.no_log_ms, lambda: VerificationDriver.no_logarithms(m))
        ranged(
            6,
            "connection matrix",
            params.involution_ms,
            lambda: VerificationDriver.connection(m, numeric_connection, connection_config, tolerances["connection"]),
        )
        if include_df:
            config: QuadratureConfig = quadrature or InitialParams.quadrature_config()
            df_checks: list[tuple[int, str, Check]] = [
                (7, "Forrester formula", lambda: VerificationDriver.forrester(params, config, tolerances["forrester"])),
                (
                    8,
                    "transformation formulas",
                    lambda: VerificationDriver.transformations(params, config, tolerances["transformation"]),
                ),
                (
                    9,
                    "beta degenerations",
                    lambda: VerificationDriver.beta_degenerations(params, rng, config, tolerances["beta"]),
                ),
                (10, "series expansion", lambda: VerificationDriver.series(params, config, tolerances["series"])),
                (
                    11,
                    "contour identities",
                    lambda: VerificationDriver.contours(params, rng, config, tolerances["contour"]),
                ),
            ]
            checks.extend(_guarded(criterion, name, check) for criterion, name, check in df_checks)
        ranged(12, "structural data", params.structural_ms, lambda: VerificationDriver.structural(m))
        return VerificationReport(m, profile, tuple(checks))

    @staticmethod
    def fusion_oracle(m: int) -> tuple[bool, dict[str, object]]:
        """X_2 fused with every basis label, quotient ring against the explicit tables."""
        x2: FusionElement = FusionElement.of(simple(2, m))
        mismatches: list[str] = [
            str(label)
            for label in RepresentationData.basis_labels(m)
            if FusionRing.fuse(x2, FusionElement.of(label)) != FusionRing.fuse_direct_x2(label)
        ]
        return not mismatches, {"mismatches": mismatches}

    @staticmethod
    def ring_axioms(m: int) -> tuple[bool, dict[str, object]]:
        """Commutativity, associativity, unit and nonnegativity on basis classes, and the two ranks."""
        basis: list[FusionElement] = [FusionElement.of(label) for label in RepresentationData.basis_labels(m)]
        unit: FusionElement = FusionElement.of(simple(1, m))
        products: dict[tuple[int, int], FusionElement] = {
            (i, j): FusionRing.fuse(basis[i], basis[j]) for i, j in itertools.product(range(len(basis)), repeat=2)
        }
        commutative: bool = all(products[(i, j)] == products[(j, i)] for i, j in products)
        nonnegative: bool = all(product.is_nonnegative() for product in products.values())
        with_unit: bool = all(FusionRing.fuse(unit, element) == element for element in basis)
        associative: bool = all(
            FusionRing.fuse(products[(i, j)], basis[k]) == FusionRing.fuse(basis[i], products[(j, k)])
            for i, j, k in itertools.product(range(len(basis)), repeat=3)
        )
        p_rank: int = FusionRing.quotient_rank(m, "P")
        k_rank: int = FusionRing.quotient_rank(m, "K")
        details: dict[str, object] = {
            "commutative": commutative,
            "associative": associative,
            "unit": with_unit,
            "nonnegative": nonnegative,
            "p_rank": p_rank,
            "k_rank": k_rank,
        }
        ok: bool = commutative and associative and with_unit and nonnegative
        return ok and p_rank == 4 * m + 1 and k_rank == 2 * m + 1, details

    @staticmethod
    def grothendieck_homomorphism(m: int) -> tuple[bool, dict[str, object]]:  # noqa: D102
        labels: list[ModuleLabel] = RepresentationData.basis_labels(m)
        failures: list[str] = []
        for first, second in itertools.combinations_with_replacement(labels, 2):
            fused = FusionRing.grothendieck(FusionRing.fuse_labels(first, second))
            expected = FusionRing.k_product(
                FusionRing.grothendieck(FusionElement.of(first)), FusionRing.grothendieck(FusionElement.of(second))
            )
            if fused != expected:
                failures.append(f"{first}*{second}")
        return not failures, {"failures": failures}

    @staticmethod
    def riemann_scheme(m: int) -> tuple[bool, dict[str, object]]:
        """Indicial roots of the operator against the closed-form scheme, plus the Fuchs relation and gaps."""
        op: FuchsianOperator = FuchsianAnalysis.build_operator(m)
        scheme = RepresentationData.riemann_exponents(m)
        found: dict[str, tuple[Fraction, ...]] = {
            point: FuchsianAnalysis.indicial_exponents(op, point) for point in ("0", "1", "inf")
        }
        matches: bool = all(found[point] == tuple(sorted(scheme.at(point))) for point in found)
        total: Fraction = sum((sum(roots, Fraction(0)) for roots in found.values()), Fraction(0))
        rho11, rho01, rho10, rho00 = scheme.exponents_at_0
        gaps: bool = rho11 - rho10 == 2 * m - 1 and rho01 - rho00 == 2 * m + 1
        details: dict[str, object] = {
            "exponents": {point: [str(r) for r in roots] for point, roots in found.items()},
            "sum": str(total),
        }
        return matches and total == 6 and gaps, details

    @staticmethod
    def no_logarithms(m: int) -> tuple[bool, dict[str, object]]:
        """Exact Frobenius series past every resonance at 0 and 1; a nonzero obstruction raises."""
        op: FuchsianOperator = FuchsianAnalysis.build_operator(m)
        n_terms: int = 2 * m + 4
        resonances: dict[str, list[int]] = {}
        for point in (0, 1):
            for rho in RepresentationData.riemann_exponents(m).at(str(point)):
                solution = FrobeniusSeries.frobenius_series(op, point, rho, n_terms)
                if solution.resonant_orders:
                    resonances[f"{point}:{rho}"] = list(solution.resonant_orders)
                if solution.log_residual != 0:
                    return False, {"obstruction": f"{point}:{rho}"}
        return True, {"resonances": resonances}

    @staticmethod
    def connection(m: int, numeric: bool, config: ConnectionConfig, tolerance: float) -> tuple[bool, dict[str, object]]:
        """Exact involution and invariant plane of the closed form; numeric comparison where requested."""
        involutory: bool = ConnectionMatrix.is_involutory(ConnectionMatrix.closed_form_matrix(m))
        plane: bool = ConnectionMatrix.reduced_subspace_check(m)
        details: dict[str, object] = {"involutory": involutory, "reduced_subspace": plane}
        ok: bool = involutory and plane
        if numeric:
            result = ConnectionMatrix.connection_matrix(m, config)
            details.update(
                {
                    "cross_ratio_residual": result.cross_ratio_residual,
                    "zero_pattern": result.zero_pattern_ok,
                    "condition_number": result.condition_number,
                }
            )
            ok = ok and result.passed(tolerance)
        return ok, details

    @staticmethod
    def forrester(
        params: VerificationProfile, config: QuadratureConfig, tolerance: float
    ) -> tuple[bool, dict[str, object]]:
        """|J^+_{0,0}[1]| by quadrature against the closed form."""
        residuals: list[float] = []
        for a, b, rho in params.forrester_points:
            value: complex = DFIntegrals.df_J(RegionSpec.parse("+00"), DFParams.constrained(a, b, rho), None, config)
            closed: complex = DFIdentities.forrester_closed_form(a, b, rho)
            residuals.append(abs(abs(value) / abs(closed) - 1))
        return max(residuals) < tolerance, {"residuals": residuals}

    @staticmethod
    def transformations(
        params: VerificationProfile, config: QuadratureConfig, tolerance: float
    ) -> tuple[bool, dict[str, object]]:
        """Six region ratios for F = 1 and for F = 1 + u - v/rho."""
        residuals: dict[str, float] = {}
        for a, b, rho in params.transformation_points:
            report = DFIdentities.transformation_check(a, b, rho, None, config)
            residuals[f"F=1 at {(a, b, rho)}"] = report.residual
        for a, b, rho in params.symmetric_f_points:
            weight: LaurentPoly2 = LaurentPoly2.constant(1) + DFIdentities.df_symmetric_generator(1, rho)
            report = DFIdentities.transformation_check(a, b, rho, weight, config)
            residuals[f"F=1+u-v/rho at {(a, b, rho)}"] = report.residual
        return max(residuals.values()) < tolerance, {"residuals": residuals}

    @staticmethod
    def beta_degenerations(
        params: VerificationProfile, rng: np.random.Generator, config: QuadratureConfig, tolerance: float
    ) -> tuple[bool, dict[str, object]]:
        """gamma = 0 mixed regions against the one-variable Gamma products at random exponents."""
        residuals: list[float] = []
        for sample in range(params.beta_samples):
            region: RegionSpec = RegionSpec.parse(MIXED_REGIONS[sample % len(MIXED_REGIONS)])
            # each exponent above -1 and each pair sum below -1 keeps all four shapes convergent
            a1, b1, a2, b2 = (float(x) for x in rng.uniform(-0.85, -0.55, size=4))
            value: complex = DFIntegrals.df_J(region, DFParams(a1, a2, b1, b2, 0), None, config)
            closed: complex = DFIdentities.mixed_region_closed_form(region.sign, region.i, region.j, a1, b1, a2, b2)
            residuals.append(abs(abs(value) / abs(closed) - 1))
        return max(residuals) < tolerance, {"residuals": residuals}

    @staticmethod
    def series(
        params: VerificationProfile, config: QuadratureConfig, tolerance: float
    ) -> tuple[bool, dict[str, object]]:
        """I^+_{0,0} against its truncated expansion at each sample z."""
        a, rho, zs, n_terms = params.series_point
        residuals: dict[str, float] = {
            str(z): DFIdentities.series_check(a, rho, z, n_terms, config).residual for z in zs
        }
        return max(residuals.values()) < tolerance, {"residuals": residuals}

    @staticmethod
    def contours(
        params: VerificationProfile, rng: np.random.Generator, config: QuadratureConfig, tolerance: float
    ) -> tuple[bool, dict[str, object]]:
        """The three contour relations, plus exact involution of the two-parameter matrix at random c, c'."""
        residuals: dict[str, float] = {}
        for a, rho, gamma, z in params.contour_points:
            report = DFIdentities.contour_identity_check(a, rho, gamma, z, config)
            residuals[str((a, rho, gamma, z))] = report.max_residual
        samples: list[list[int]] = rng.integers(2, 50, size=(3, 2)).tolist()
        involutory: bool = all(
            ConnectionMatrix.is_involutory(ConnectionMatrix.fourrel_matrix(sp.Rational(p, 7), sp.Rational(q, 5)))
            for p, q in samples
        )
        details: dict[str, object] = {"residuals": residuals, "random_involutions": involutory}
        return max(residuals.values()) < tolerance and involutory, details

    @staticmethod
    def structural(m: int) -> tuple[bool, dict[str, object]]:
        """Zhu dimension, blocks, socle series and the N=1 decomposition multiplicities."""
        zhu: bool = RepresentationData.zhu_dimension(m) == 6 * m + 1
        labels: list[ModuleLabel] = RepresentationData.basis_labels(m)
        blocks: dict[int, list[str]] = {}
        for label in labels:
            blocks.setdefault(RepresentationData.block_of(label), []).append(str(label))
        block_shape: bool = sorted(blocks) == list(range(1, m + 2)) and blocks[m + 1] == [f"X_{2 * m + 1}"]
        socle: bool = True
        for s in range(1, 2 * m + 1):
            projective_label: ModuleLabel = labels[2 * m + s]
            series = FusionRing.socle_series(projective_label)
            socle = socle and RepresentationData.block_of(series.top) == RepresentationData.block_of(projective_label)
            socle = socle and series.layers[1][0] == simple(s, m)
        patterns: bool = True
        for label in labels[: 2 * m + 1]:
            multiplicities: list[int] = [n for n, _ in RepresentationData.ns_decomposition(label, 4)]
            if label.index % 2 == 1:
                patterns = patterns and multiplicities == [2 * n + 1 for n in range(5)]
            else:
                patterns = patterns and multiplicities == [2 * n for n in range(1, 5)]
        details: dict[str, object] = {
            "zhu_dimension": RepresentationData.zhu_dimension(m),
            "blocks": {str(k): v for k, v in sorted(blocks.items())},
        }
        return zhu and block_shape and socle and patterns, details
