"""Line-delimited JSON records for reports, campaigns and benchmarks.

Exact values are rendered as strings: ``"p/q"`` (or ``"p"``) for rationals and
the residue for F_p. Floats are rendered with ``repr`` so they re-parse to the
same double.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .fields import field_from_label
from .identities import IdentityReport


@dataclass(frozen=True)
class StabilityRecord:
    """Float64 accuracy of both sides of Sylvester's identity on one node set.

    ``rel_error_*`` is ``None`` exactly when ``overflow`` is set.
    """

    n: int
    d: int
    node_spread: float
    rel_error_lhs: float | None
    rel_error_rhs: float | None
    overflow: bool = False


def _encode(fld, value):
    if isinstance(value, (tuple, list)):
        return [fld.format(v) for v in value]
    return fld.format(value)


def _decode(fld, value):
    if isinstance(value, list):
        return tuple(fld.parse(v) for v in value)
    return fld.parse(value)


def report_to_record(report: IdentityReport) -> dict:
    fld = field_from_label(report.field)
    record = {
        "record": "identity_report",
        "identity": report.identity,
        "params": report.params,
        "field": report.field,
        "lhs": _encode(fld, report.lhs),
        "rhs": _encode(fld, report.rhs),
        "pass": report.passed,
    }
    if report.relative_error is not None:
        record["relative_error"] = report.relative_error
    if report.details:
        record["details"] = {k: _encode(fld, v) for k, v in report.details.items()}
    return record


def record_to_report(record: dict) -> IdentityReport:
    fld = field_from_label(record["field"])
    return IdentityReport(
        identity=record["identity"],
        params=dict(record["params"]),
        lhs=_decode(fld, record["lhs"]),
        rhs=_decode(fld, record["rhs"]),
        passed=record["pass"],
        field=record["field"],
        relative_error=record.get("relative_error"),
        details={k: _decode(fld, v) for k, v in record.get("details", {}).items()},
    )


def stability_to_record(rec: StabilityRecord) -> dict:
    return {"record": "stability", **asdict(rec)}


def record_to_stability(record: dict) -> StabilityRecord:
    fields = {k: v for k, v in record.items() if k != "record"}
    return StabilityRecord(**fields)


def dumps(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), allow_nan=False)


def parse_line(line: str):
    """Re-parse one emitted line into its typed value (or the raw dict)."""
    record = json.loads(line)
    kind = record.get("record")
    if kind == "identity_report":
        return record_to_report(record)
    if kind == "stability":
        return record_to_stability(record)
    return record
