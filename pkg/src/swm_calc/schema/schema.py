from __future__ import annotations

import dataclasses
import json
import math
from enum import Enum
from fractions import Fraction

import mpmath
import numpy as np
import pandas as pd
import sympy as sp


class SchemaDefinitions:
    """Report layout, column dtypes and the serializers shared by every command."""

    @staticmethod
    def schema_version() -> str:  # noqa: D102
        return "1"

    @staticmethod
    def report_keys() -> list[str]:  # noqa: D102
        return ["schema_version", "command", "results", "status"]

    @staticmethod
    def fusion_table_schema() -> dict[str, object]:
        """Column dtypes of the long-format fusion table."""
        return {
            "left": str,
            "right": str,
            "product": str,
        }

    @staticmethod
    def check_table_schema() -> dict[str, object]:  # noqa: D102
        return {
            "criterion": "Int64",
            "name": str,
            "status": str,
        }

    @staticmethod
    def fusion_long_format(table: pd.DataFrame) -> pd.DataFrame:
        """Square multiplication table to one row per (left, right) pair."""
        long: pd.DataFrame = table.stack().reset_index()
        long.columns = ["left", "right", "product"]
        return long.astype(SchemaDefinitions.fusion_table_schema())

    @staticmethod
    def rational(value: Fraction) -> dict[str, str]:  # noqa: D102
        return {"num": str(value.numerator), "den": str(value.denominator)}

    @staticmethod
    def complex_number(value: complex) -> dict[str, str]:
        """{re, im} with 17 significant digits."""
        value = complex(value)
        return {"re": f"{value.real:.17g}", "im": f"{value.imag:.17g}"}

    @staticmethod
    def to_jsonable(value: object) -> object:  # noqa: PLR0911, C901
        """Recursively convert results into JSON-ready values with deterministic formatting."""
        if value is None or isinstance(value, str):
            return value
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, Enum):
            return value.value
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, Fraction):
            return SchemaDefinitions.rational(value)
        if isinstance(value, (float, np.floating, mpmath.mpf)):
            number: float = float(value)
            return number if math.isfinite(number) else str(number)
        if isinstance(value, (complex, np.complexfloating, mpmath.mpc)):
            return SchemaDefinitions.complex_number(complex(value))
        if isinstance(value, sp.Matrix):
            return [[str(entry) for entry in value.row(i)] for i in range(value.rows)]
        if isinstance(value, sp.Basic):
            return str(value)
        if isinstance(value, pd.DataFrame):
            return [SchemaDefinitions.to_jsonable(record) for record in value.to_dict(orient="records")]
        if dataclasses.is_dataclass(value) and not isinstance(value, type):
            return {
                f.name: SchemaDefinitions.to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)
            }
        if isinstance(value, dict):
            return {str(key): SchemaDefinitions.to_jsonable(item) for key, item in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [SchemaDefinitions.to_jsonable(item) for item in value]
        return str(value)

    @staticmethod
    def report(command: dict[str, object], results: object, passed: bool) -> dict[str, object]:  # noqa: D102
        return {
            "schema_version": SchemaDefinitions.schema_version(),
            "command": SchemaDefinitions.to_jsonable(command),
            "results": SchemaDefinitions.to_jsonable(results),
            "status": "pass" if passed else "fail",
        }

    @staticmethod
    def dumps(document: dict[str, object]) -> str:
        """JSON with sorted keys, so identical input gives byte-identical output."""
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def render_markdown(document: dict[str, object]) -> str:
        """Markdown rendering: a heading per top-level key, tables for lists of flat records."""
        lines: list[str] = [f"# swm report (schema {document['schema_version']})", ""]
        command: object = document.get("command", {})
        if isinstance(command, dict):
            lines.append(" ".join(f"`{key}={command[key]}`" for key in sorted(command)))
            lines.append("")
        lines.extend(SchemaDefinitions._markdown_block("results", document.get("results"), 2))
        lines.extend(["", f"**status:** {document['status']}", ""])
        return "\n".join(lines)

    @staticmethod
    def _markdown_block(title: str, value: object, depth: int) -> list[str]:
        heading: str = "#" * min(depth, 6)
        if isinstance(value, dict) and value and not SchemaDefinitions._is_scalar_leaf(value):
            lines: list[str] = [f"{heading} {title}", ""]
            scalars: dict[str, object] = {
                k: v for k, v in value.items() if SchemaDefinitions._is_scalar_leaf(v)
            }
            if scalars:
                lines.extend(["| key | value |", "| --- | --- |"])
                lines.extend(f"| {k} | {SchemaDefinitions._cell(scalars[k])} |" for k in sorted(scalars))
                lines.append("")
            for key in sorted(value):
                if key not in scalars:
                    lines.extend(SchemaDefinitions._markdown_block(str(key), value[key], depth + 1))
            return lines
        if isinstance(value, list) and value and all(isinstance(row, dict) for row in value):
            columns: list[str] = sorted({key for row in value for key in row})
            lines = [f"{heading} {title}", "", "| " + " | ".join(columns) + " |", "|" + " --- |" * len(columns)]
            lines.extend(
                "| " + " | ".join(SchemaDefinitions._cell(row.get(column, "")) for column in columns) + " |"
                for row in value
            )
            lines.append("")
            return lines
        return [f"{heading} {title}", "", SchemaDefinitions._cell(value), ""]

    @staticmethod
    def _is_scalar_leaf(value: object) -> bool:
        if isinstance(value, dict):
            return set(value) in ({"re", "im"}, {"num", "den"})
        return not isinstance(value, list)

    @staticmethod
    def _cell(value: object) -> str:
        if isinstance(value, dict) and set(value) == {"re", "im"}:
            return f"{value['re']} + {value['im']}i"
        if isinstance(value, dict) and set(value) == {"num", "den"}:
            return value["num"] if value["den"] == "1" else f"{value['num']}/{value['den']}"
        if isinstance(value, list):
            return ", ".join(SchemaDefinitions._cell(item) for item in value)
        return str(value)
