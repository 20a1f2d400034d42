"""Report records produced by theorem checks, and their JSON/CSV emission.

Serialization is deterministic: fields appear in declaration order, floats
are rendered with 15 significant digits, and no timestamp enters the
artifact (the CLI prints one alongside instead, so repeated runs stay
byte-identical).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .formulas import FormulaValue


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one theorem verification.

    verdict is "Pass", "Fail", or "Unknown: <reason>"; mode records how the
    computed value was obtained (Exhaustive enumeration, Stochastic search,
    or FormulaOnly evaluation). A Pass means the computed value matched the
    formula (exactly for integers, within 1e-8 for reals) and, where the
    check carries witnesses, the witness sets agreed up to isomorphism.
    """

    theorem_id: str
    params: dict
    formula_value: FormulaValue
    computed_value: int | float
    witnesses_expected: tuple[str, ...]
    witnesses_found: tuple[str, ...]
    verdict: str
    mode: str


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side measurement of two constructions, with the inequality
    pair the comparison was expected to exhibit. observed lists what the
    fresh builds actually satisfied; the verdict is Pass exactly when
    observed equals expected."""

    example_id: str
    params: dict
    lhs: dict
    rhs: dict
    inequalities_expected: tuple[str, ...]
    inequalities_observed: tuple[str, ...]
    verdict: str


_CHECK_FIELDS = (
    "theorem_id",
    "params",
    "formula_value",
    "computed_value",
    "witnesses_expected",
    "witnesses_found",
    "verdict",
    "mode",
)

_COMPARISON_FIELDS = (
    "example_id",
    "params",
    "lhs",
    "rhs",
    "inequalities_expected",
    "inequalities_observed",
    "verdict",
)


def _report_fields(report) -> tuple[str, ...]:
    if isinstance(report, TheoremCheck):
        return _CHECK_FIELDS
    if isinstance(report, ComparisonReport):
        return _COMPARISON_FIELDS
    raise TypeError(f"not a report: {type(report).__name__}")


def _jsonable(value):
    """Reduce a report value to plain JSON-ready data, in stable order."""
    if isinstance(value, FormulaValue):
        return {
            "value": _jsonable(value.value),
            "validity": str(value.validity),
            "polynomial": (
                None
                if value.polynomial is None
                else [_jsonable(c) for c in value.polynomial]
            ),
        }
    if isinstance(value, (TheoremCheck, ComparisonReport)):
        return {
            f: _jsonable(getattr(value, f)) for f in _report_fields(value)
        }
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    return str(value)


def _render(value, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        # 15 significant digits; integral floats keep their point-free form
        return format(value, ".15g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {_render(v, indent + 1)}"
            for k, v in value.items()
        )
        return "{\n" + rows + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        rows = ",\n".join(f"{inner}{_render(v, indent + 1)}" for v in value)
        return "[\n" + rows + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize_json(report) -> str:
    """A single report becomes a JSON object, a list of reports a JSON
    array; field order and float formatting are fixed, so equal reports
    serialize to equal bytes."""
    if isinstance(report, (list, tuple)):
        data = [_jsonable(r) for r in report]
    else:
        data = _jsonable(report)
    return _render(data, 0) + "\n"


def _csv_cell(value) -> str:
    if isinstance(value, (list, tuple)) and all(
        isinstance(v, str) for v in value
    ):
        return ";".join(value)
    if isinstance(value, float):
        return format(value, ".15g")
    if value is None or isinstance(value, (bool, int, str)):
        return str(value)
    # nested structures (params, formula_value, lhs/rhs) ride along as JSON
    return json.dumps(_jsonable(value), separators=(",", ":"))


def serialize_csv(report) -> str:
    """One header row plus one row per report; witness lists are
    semicolon-joined and nested maps are JSON-encoded in their cell."""
    reports = report if isinstance(report, (list, tuple)) else [report]
    if not reports:
        raise ValueError("nothing to serialize")
    fields = _report_fields(reports[0])
    for r in reports:
        if _report_fields(r) != fields:
            raise ValueError("mixed report kinds in one CSV")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for r in reports:
        writer.writerow([_csv_cell(getattr(r, f)) for f in fields])
    return out.getvalue()


def serialize_report(report, format: str = "json") -> str:
    if format == "json":
        return serialize_json(report)
    if format == "csv":
        return serialize_csv(report)
    raise ValueError(f"format must be json or csv, not {format!r}")


def emit_report(report, format: str = "json", path=None) -> str:
    """Serialize and, when a path is given, write the artifact there. The
    rendered text is returned either way."""
    text = serialize_report(report, format)
    if path is not None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    return text
