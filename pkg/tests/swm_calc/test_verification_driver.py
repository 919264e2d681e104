from __future__ import annotations

import pytest
from pytest_mock import MockerFixture

from swm_calc.model.errors import ConvergenceError, InvalidParameterError
from swm_calc.model.initial_params import InitialParams
from swm_calc.model.verification_driver import FAIL, PASS, SKIP, CheckResult, VerificationDriver, _guarded


@pytest.mark.parametrize(
    "check",
    [
        VerificationDriver.fusion_oracle,
        VerificationDriver.ring_axioms,
        VerificationDriver.grothendieck_homomorphism,
        VerificationDriver.riemann_scheme,
        VerificationDriver.no_logarithms,
        VerificationDriver.structural,
    ],
)
def test_exact_checks_pass_at_m1(check) -> None:  # noqa: ANN001
    ok, details = check(1)
    assert ok, details


def test_ring_axioms_report_ranks() -> None:
    _, details = VerificationDriver.ring_axioms(2)
    assert details["p_rank"] == 9
    assert details["k_rank"] == 5


def test_symbolic_connection_check() -> None:
    ok, details = VerificationDriver.connection(2, False, InitialParams.connection_config(), 1e-6)
    assert ok
    assert details == {"involutory": True, "reduced_subspace": True}


def test_guarded_records_library_errors() -> None:
    def failing() -> tuple[bool, dict[str, object]]:
        raise ConvergenceError("endpoint exponent -1.2 <= -1")

    result: CheckResult = _guarded(7, "Forrester formula", failing)
    assert result.status == FAIL
    assert not result.passed
    assert "ConvergenceError" in str(result.details["error"])


def test_run_skips_checks_outside_their_range() -> None:
    report = VerificationDriver.run(4, profile="quick", include_df=False)
    assert [check.criterion for check in report.checks] == [1, 2, 3, 4, 5, 6, 12]
    assert {check.status for check in report.checks} == {SKIP}
    assert report.passed


def test_run_quick_profile_at_m1(mocker: MockerFixture) -> None:
    numeric = mocker.patch.object(VerificationDriver, "connection", return_value=(True, {}))
    report = VerificationDriver.run(1, profile="quick", include_df=False)
    assert numeric.call_count == 1
    assert numeric.call_args.args[1] is True
    assert all(check.status == PASS for check in report.checks)
    assert report.passed


def test_run_with_integral_checks_stubbed(mocker: MockerFixture) -> None:
    mocker.patch.object(VerificationDriver, "connection", return_value=(True, {}))
    for name in ("forrester", "transformations", "beta_degenerations", "series"):
        mocker.patch.object(VerificationDriver, name, return_value=(True, {}))
    mocker.patch.object(VerificationDriver, "contours", side_effect=ConvergenceError("outside the window"))
    report = VerificationDriver.run(1, profile="quick")
    statuses: dict[int, str] = {check.criterion: check.status for check in report.checks}
    assert sorted(statuses) == list(range(1, 13))
    assert statuses[11] == FAIL
    assert not report.passed


def test_run_rejects_bad_input() -> None:
    with pytest.raises(InvalidParameterError):
        VerificationDriver.run(0)
    with pytest.raises(InvalidParameterError):
        VerificationDriver.run(1, profile="everything")
