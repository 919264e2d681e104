from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction

import pandas as pd

from swm_calc.model.connection_matrix import ConnectionMatrix, ConnectionResult
from swm_calc.model.df_identities import DFIdentities
from swm_calc.model.df_integrals import DFIntegrals
from swm_calc.model.df_regions import DFParams, RegionSpec
from swm_calc.model.errors import InvalidParameterError, SwmCalcError, UnsupportedLabelError
from swm_calc.model.frobenius_series import FrobeniusSeries, FrobeniusSolution
from swm_calc.model.fuchsian_operator import FuchsianAnalysis, FuchsianOperator
from swm_calc.model.fusion_ring import FusionElement, FusionRing
from swm_calc.model.initial_params import ConnectionConfig, InitialParams, QuadratureConfig
from swm_calc.model.representation_data import ModuleLabel, RepresentationData
from swm_calc.model.verification_driver import VerificationDriver, VerificationReport
from swm_calc.schema.schema import SchemaDefinitions

logger = logging.getLogger("swm_calc")

EXIT_OK: int = 0
EXIT_FAILED: int = 1
EXIT_USAGE: int = 2

MIN_TERMS: int = 16
MIN_PRECISION: int = 53

# (passed, results) of one subcommand
Outcome = tuple[bool, object]

_J_KEYS: frozenset[str] = frozenset({"a", "b", "rho", "gamma"})
_I_KEYS: frozenset[str] = frozenset({"a", "rho", "gamma"})
_EXPLICIT_KEYS: frozenset[str] = frozenset({"a1", "a2", "b1", "b2", "c1", "c2", "gamma"})


def _positive_int(text: str) -> int:
    value: int = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument grammar shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=_positive_int, default=1, help="SW(m) parameter, m >= 1")
    common.add_argument("--precision", type=int, default=None, help="working precision in bits (>= 53)")
    common.add_argument("--terms", type=int, default=None, help="number of series terms (>= 16)")
    common.add_argument("--tol", type=float, default=None, help="acceptance tolerance")
    common.add_argument("--format", choices=("json", "md"), default="json", help="report format")
    common.add_argument("--seed", type=int, default=None, help="seed of the randomized checks")
    common.add_argument("--verbose", action="store_true", help="debug logging on standard error")

    parser = argparse.ArgumentParser(prog="swm", description="SW(m) fusion rings, Fuchsian ODE and DF integrals")
    commands = parser.add_subparsers(dest="command", required=True)

    fusion = commands.add_parser("fusion", parents=[common], help="fusion products of basis classes")
    fusion.add_argument("--table", action="store_true", help="full multiplication table")
    fusion.add_argument("--left", default=None, help="left factor, e.g. X_2")
    fusion.add_argument("--right", default=None, help="right factor, e.g. P_1")

    ring = commands.add_parser("ring", parents=[common], help="presentation of the P- or K-ring")
    ring.add_argument("--kind", choices=("P", "K"), default="P")

    weights = commands.add_parser("weights", parents=[common], help="central charge, weights and blocks")
    weights.add_argument(
        "--n-max", dest="n_max", type=_positive_int, default=3, help="N=1 Virasoro terms listed per simple module"
    )
    commands.add_parser("ode", parents=[common], help="Riemann scheme and exact Frobenius series")
    commands.add_parser("connection", parents=[common], help="numeric connection matrix against the closed form")

    df = commands.add_parser("df", parents=[common], help="a Dotsenko-Fateev integral")
    df.add_argument("--kind", choices=("J", "I"), default="J")
    df.add_argument("--region", default="+00", help="region such as +00, -(1,0) or I+01")
    df.add_argument("--params", default="", help="a=..,b=..,rho=..,gamma=.. or a1=..,a2=..,b1=..,b2=..")
    df.add_argument("--z1", type=float, default=1.0)
    df.add_argument("--z2", type=float, default=0.5)

    verify = commands.add_parser("verify", parents=[common], help="acceptance criteria applicable at m")
    verify.add_argument("--profile", choices=("quick", "full"), default="full")
    verify.add_argument("--no-df", dest="no_df", action="store_true", help="skip the integral criteria")
    return parser


def parse_params(text: str, kind: str) -> DFParams:
    """Turn the --params selector into DFParams.

    The short form (a, b, rho, gamma) gives the constrained exponents; an I-integral takes (a, rho, gamma).
    The explicit form names a1, a2, b1, b2 (and c1, c2 for I) directly.
    """
    values: dict[str, complex] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, raw = item.partition("=")
        if not sep:
            raise InvalidParameterError(f"expected key=value in --params, got {item!r}")
        try:
            values[key.strip()] = complex(raw.strip().replace(" ", ""))
        except ValueError as error:
            raise InvalidParameterError(f"cannot read {raw!r} as a number for {key!r}") from error
    keys: set[str] = set(values)
    gamma: complex = values.get("gamma", 1)
    if keys <= _EXPLICIT_KEYS and keys & {"a1", "a2", "b1", "b2"}:
        missing: set[str] = {"a1", "a2", "b1", "b2"} - keys
        if missing:
            raise InvalidParameterError(f"missing exponents {sorted(missing)} in --params")
        return DFParams(
            values["a1"],
            values["a2"],
            values["b1"],
            values["b2"],
            gamma,
            values.get("c1", 0),
            values.get("c2", 0),
        )
    if kind == "I" and keys <= _I_KEYS and {"a", "rho"} <= keys:
        return DFParams.constrained_three_point(values["a"], values["rho"], gamma)
    if kind == "J" and keys <= _J_KEYS and {"a", "b", "rho"} <= keys:
        return DFParams.constrained(values["a"], values["b"], values["rho"], gamma)
    raise InvalidParameterError(f"unrecognized parameter set {sorted(keys)} for a {kind}-integral")


def _real(value: complex) -> complex | float:
    return value.real if value.imag == 0 else value


def _validate(args: argparse.Namespace) -> None:
    if args.terms is not None and args.terms < MIN_TERMS:
        raise InvalidParameterError(f"--terms must be at least {MIN_TERMS}, got {args.terms}")
    if args.precision is not None and args.precision < MIN_PRECISION:
        raise InvalidParameterError(f"--precision must be at least {MIN_PRECISION} bits, got {args.precision}")
    if args.tol is not None and not args.tol > 0:
        raise InvalidParameterError(f"--tol must be positive, got {args.tol}")


def run_fusion(args: argparse.Namespace) -> Outcome:  # noqa: D103
    if args.table:
        table: pd.DataFrame = SchemaDefinitions.fusion_long_format(FusionRing.fusion_table(args.m))
        return True, {"basis": [str(label) for label in RepresentationData.basis_labels(args.m)], "table": table}
    if args.left is None or args.right is None:
        raise InvalidParameterError("fusion needs --table or both --left and --right")
    left: ModuleLabel = RepresentationData.parse_label(args.left, args.m)
    right: ModuleLabel = RepresentationData.parse_label(args.right, args.m)
    product: FusionElement = FusionRing.fuse_labels(left, right)
    return True, {
        "left": str(left),
        "right": str(right),
        "product": str(product),
        "multiplicities": product.as_dict(),
        "grothendieck": FusionRing.grothendieck(product).as_dict(),
    }


def run_ring(args: argparse.Namespace) -> Outcome:  # noqa: D103
    presentation: dict[str, object] = FusionRing.ring_presentation(args.m, args.kind)
    expected: int = 4 * args.m + 1 if args.kind == "P" else 2 * args.m + 1
    return presentation["rank"] == expected, presentation


def run_weights(args: argparse.Namespace) -> Outcome:  # noqa: D103
    m: int = args.m
    modules: list[dict[str, object]] = []
    for label in RepresentationData.basis_labels(m):
        entry: dict[str, object] = {"label": str(label), "block": RepresentationData.block_of(label)}
        if label.is_simple:
            entry["min_weight"] = RepresentationData.min_weight(label)
            entry["ns_decomposition"] = [
                {"multiplicity": mult, "weight": weight}
                for mult, weight in RepresentationData.ns_decomposition(label, args.n_max)
            ]
        else:
            entry["socle_series"] = FusionRing.socle_series(label).as_lists()
        modules.append(entry)
    a, rho = RepresentationData.df_exponent_pair(m)
    central_charge: Fraction = RepresentationData.central_charge(m)
    consistent: bool = (
        RepresentationData.h22_closed_form(m) == RepresentationData.conformal_weight(2, 2, 0, m)
        and abs(RepresentationData.central_charge_from_momentum(m) - float(central_charge)) < 1e-12
    )
    return consistent, {
        "central_charge": central_charge,
        "h22": RepresentationData.h22_closed_form(m),
        "lattice_momenta": RepresentationData.lattice_momenta(m),
        "df_exponents": {"a": a, "rho": rho},
        "zhu_dimension": RepresentationData.zhu_dimension(m),
        "modules": modules,
    }


def run_ode(args: argparse.Namespace) -> Outcome:  # noqa: D103
    m: int = args.m
    n_terms: int = max(MIN_TERMS, 2 * m + 8) if args.terms is None else args.terms
    op: FuchsianOperator = FuchsianAnalysis.build_operator(m)
    scheme = RepresentationData.riemann_exponents(m)
    matches: dict[str, bool] = {
        point: FuchsianAnalysis.indicial_exponents(op, point) == tuple(sorted(scheme.at(point)))
        for point in ("0", "1", "inf")
    }
    solutions: list[dict[str, object]] = []
    for point in (0, 1):
        for exponent in scheme.at(str(point)):
            solution: FrobeniusSolution = FrobeniusSeries.frobenius_series(op, point, exponent, n_terms)
            solutions.append(
                {
                    "point": point,
                    "exponent": exponent,
                    "log_residual": solution.log_residual,
                    "resonant_orders": solution.resonant_orders,
                    "coefficients": solution.coefficients[: min(n_terms, 8)],
                }
            )
    return all(matches.values()), {
        "numerators": {f"p{k}": str(op.numerator(k)) for k in range(4)},
        "riemann_scheme": scheme,
        "indicial_match": matches,
        "solutions": solutions,
    }


def run_connection(args: argparse.Namespace) -> Outcome:  # noqa: D103
    overrides: dict[str, object] = {}
    if args.terms is not None:
        overrides["n_terms"] = args.terms
    if args.precision is not None:
        overrides["precision"] = args.precision
    if args.tol is not None:
        overrides["tolerance"] = args.tol
    config: ConnectionConfig = InitialParams.connection_config(**overrides)
    result: ConnectionResult = ConnectionMatrix.connection_matrix(args.m, config)
    return result.passed(config.tolerance), {
        "numeric_matrix": result.numeric_matrix,
        "closed_form": result.closed_form_matrix,
        "cross_ratio_residual": result.cross_ratio_residual,
        "zero_pattern_ok": result.zero_pattern_ok,
        "condition_number": result.condition_number,
        "involutory": ConnectionMatrix.is_involutory(result.closed_form_matrix),
    }


def _quadrature_config(args: argparse.Namespace) -> QuadratureConfig:
    overrides: dict[str, object] = {}
    if args.precision is not None:
        overrides["precision"] = args.precision
    if args.tol is not None:
        overrides["tolerance"] = args.tol
    return InitialParams.quadrature_config(**overrides)


def _constrained_rho(params: DFParams) -> complex | None:
    """rho when params are ({a, a'}, {b, b'}, 1) for a common rho, else None."""
    if params.gamma != 1 or params.c1 != 0 or params.c2 != 0 or params.a2 == 0 or params.b2 == 0:
        return None
    rho: complex = -params.a1 / params.a2
    return rho if abs(rho + params.b1 / params.b2) < 1e-12 else None


def run_df(args: argparse.Namespace) -> Outcome:  # noqa: D103
    region: RegionSpec = RegionSpec.parse(args.region, args.kind)
    params: DFParams = parse_params(args.params, region.kind)
    config: QuadratureConfig = _quadrature_config(args)
    if region.kind == "J":
        value: complex = DFIntegrals.df_J(region, params, None, config)
    else:
        value = DFIntegrals.df_I(region, params, args.z1, args.z2, None, "0", config)
    results: dict[str, object] = {
        "region": str(region),
        "params": {name: _real(complex(getattr(params, name))) for name in ("a1", "a2", "b1", "b2", "c1", "c2")},
        "gamma": _real(complex(params.gamma)),
        "value": value,
        "modulus": abs(value),
        "singular_locus": DFIdentities.on_singular_locus(params),
    }
    passed: bool = True
    rho: complex | None = _constrained_rho(params) if region.kind == "J" and region.i == region.j == 0 else None
    if rho is not None:
        # J^+_{0,0}[1] has a closed form up to a phase; J^-_{0,0} is the same box.
        closed: complex = DFIdentities.forrester_closed_form(params.a1, params.b1, rho, config.precision)
        residual: float = abs(abs(value) - abs(closed)) / abs(closed)
        tolerance: float = args.tol or InitialParams.picking_initial_parameters().tolerances["forrester"]
        results["closed_form_modulus"] = abs(closed)
        results["closed_form_residual"] = residual
        passed = residual < tolerance
    return passed, results


def run_verify(args: argparse.Namespace) -> Outcome:  # noqa: D103
    connection: ConnectionConfig | None = None
    if args.terms is not None or args.precision is not None:
        connection = InitialParams.connection_config(
            **{
                key: value
                for key, value in (("n_terms", args.terms), ("precision", args.precision))
                if value is not None
            }
        )
    report: VerificationReport = VerificationDriver.run(
        args.m,
        profile=args.profile,
        include_df=not args.no_df,
        quadrature=_quadrature_config(args) if args.tol is not None else None,
        connection=connection,
        seed=args.seed,
    )
    return report.passed, report


COMMANDS: dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "fusion": run_fusion,
    "ring": run_ring,
    "weights": run_weights,
    "ode": run_ode,
    "connection": run_connection,
    "df": run_df,
    "verify": run_verify,
}


def _configure_logging(verbose: bool) -> None:
    if not any(getattr(handler, "_swm_cli", False) for handler in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler._swm_cli = True  # type: ignore[attr-defined]
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and print its report on standard output.

    Args:
    ----
        argv (Sequence[str] | None): Arguments without the program name; None reads sys.argv.

    Returns:
    -------
        int: 0 when everything passed, 1 when a check failed or a computation broke down, 2 on usage errors
    """
    parser: argparse.ArgumentParser = build_parser()
    (k_args, unknown_args) = parser.parse_known_args(sys.argv[1:] if argv is None else list(argv))
    if unknown_args:
        parser.error(f"unrecognized arguments: {' '.join(unknown_args)}")
    _configure_logging(k_args.verbose)

    command: dict[str, object] = {key: value for key, value in sorted(vars(k_args).items()) if key != "verbose"}
    try:
        _validate(k_args)
        passed, results = COMMANDS[k_args.command](k_args)
    except (InvalidParameterError, UnsupportedLabelError) as error:
        parser.print_usage(sys.stderr)
        print(f"swm {k_args.command}: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except SwmCalcError as error:
        logger.error("%s failed: %s: %s", k_args.command, type(error).__name__, error)
        passed, results = False, {"error": f"{type(error).__name__}: {error}"}

    document: dict[str, object] = SchemaDefinitions.report(command, results, passed)
    if k_args.format == "md":
        sys.stdout.write(SchemaDefinitions.render_markdown(document))
    else:
        sys.stdout.write(SchemaDefinitions.dumps(document))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
