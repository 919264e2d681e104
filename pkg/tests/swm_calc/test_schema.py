from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pandas as pd
import sympy as sp

from swm_calc.model.df_identities import SingularLocusReport
from swm_calc.schema.schema import SchemaDefinitions


def test_numbers_are_formatted_deterministically() -> None:
    assert SchemaDefinitions.to_jsonable(Fraction(-5, 2)) == {"num": "-5", "den": "2"}
    assert SchemaDefinitions.to_jsonable(0.1 + 2j) == {"re": "0.10000000000000001", "im": "2"}
    assert SchemaDefinitions.to_jsonable(np.float64(float("inf"))) == "inf"
    assert SchemaDefinitions.to_jsonable(np.int64(3)) == 3
    assert SchemaDefinitions.to_jsonable(np.bool_(True)) is True


def test_containers_and_symbolic_values() -> None:
    value: object = {
        1: (Fraction(1, 3), None),
        "matrix": sp.Matrix([[1, sp.Rational(1, 2)], [0, sp.sqrt(2)]]),
        "expression": sp.Symbol("z") + 1,
    }
    assert SchemaDefinitions.to_jsonable(value) == {
        "1": [{"num": "1", "den": "3"}, None],
        "matrix": [["1", "1/2"], ["0", "sqrt(2)"]],
        "expression": "z + 1",
    }


def test_dataclasses_and_frames() -> None:
    report: SingularLocusReport = SingularLocusReport(True, ["H(a,b):x1"])
    assert SchemaDefinitions.to_jsonable(report) == {"on_locus": True, "violated": ["H(a,b):x1"]}
    labels: list[str] = ["X_1", "X_2"]
    square: pd.DataFrame = pd.DataFrame([["X_1", "X_2"], ["X_2", "X_1 + X_3"]], index=labels, columns=labels)
    long: pd.DataFrame = SchemaDefinitions.fusion_long_format(square)
    assert list(long.columns) == ["left", "right", "product"]
    assert SchemaDefinitions.to_jsonable(long)[3] == {"left": "X_2", "right": "X_2", "product": "X_1 + X_3"}


def test_report_layout_and_dumps() -> None:
    command: dict[str, object] = {"m": 2, "command": "weights"}
    document: dict[str, object] = SchemaDefinitions.report(command, {"c": Fraction(-81, 10)}, True)
    assert list(document) == SchemaDefinitions.report_keys()
    assert document["status"] == "pass"
    text: str = SchemaDefinitions.dumps(document)
    assert text == SchemaDefinitions.dumps(json.loads(text))
    assert text.endswith("\n")
    assert json.loads(text)["results"] == {"c": {"num": "-81", "den": "10"}}


def test_render_markdown() -> None:
    document: dict[str, object] = SchemaDefinitions.report(
        {"command": "fusion", "m": 1},
        {"product": "P_1", "value": 0.5 - 1j, "rows": [{"left": "X_2", "right": "X_3"}]},
        False,
    )
    text: str = SchemaDefinitions.render_markdown(document)
    assert text.startswith("# swm report (schema 1)")
    assert "`command=fusion` `m=1`" in text
    assert "| product | P_1 |" in text
    assert "| value | 0.5 + -1i |" in text
    assert "| left | right |" in text
    assert "**status:** fail" in text
