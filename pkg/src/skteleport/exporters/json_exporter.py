"""
Structured (JSON) exporter for SKTeleport reports.

One top-level object per report. Complex numbers and matrices are
written as [re, im] pairs (matrices row-major), every real number is
rounded to a fixed count of significant digits, and nothing time- or
host-dependent is included, so identical inputs give identical bytes.

Copyright (C) 2025 smilinTux
Licensed under AGPL-3.0.
"""

import json
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..models import (
    ChannelSpec,
    ExtractionReport,
    TeleportReport,
    VerificationSummary,
)

Payload = Union[TeleportReport, ExtractionReport, VerificationSummary]


class _Rounder:
    """Round reals to ``precision`` significant digits."""

    def __init__(self, precision: int):
        self.fmt = f".{precision}g"

    def real(self, x: Optional[float]) -> Optional[float]:
        if x is None:
            return None
        value = float(format(float(x), self.fmt))
        # -0.0 and 0.0 must serialize identically
        return value + 0.0

    def pair(self, z: complex) -> List[float]:
        z = complex(z)
        return [self.real(z.real), self.real(z.imag)]

    def vector(self, values: Any) -> List[List[float]]:
        return [self.pair(z) for z in np.asarray(values).ravel()]

    def matrix(self, values: Any) -> List[List[List[float]]]:
        return [self.vector(row) for row in np.asarray(values)]


def _channel(channel: ChannelSpec, r: _Rounder) -> Dict[str, float]:
    return {
        "alpha": r.real(channel.alpha),
        "beta": r.real(channel.beta),
        "gamma": r.real(channel.gamma),
        "delta": r.real(channel.delta),
    }


def _teleport(report: TeleportReport, r: _Rounder) -> Dict[str, Any]:
    return {
        "kind": "teleport_report",
        "channel": _channel(report.channel, r),
        "input": r.vector(report.input_amplitudes),
        "regime": report.regime.value,
        "mode": report.mode.value,
        "per_outcome": [
            {
                "i": rec.message.i,
                "j": rec.message.j,
                "probability": r.real(rec.probability),
                "success_given_outcome": r.real(rec.success_given_outcome),
                "fidelity": r.real(rec.fidelity),
                "count": rec.count,
            }
            for rec in report.per_outcome
        ],
        "total_success": r.real(report.total_success),
        "fidelity_on_success": r.real(report.fidelity_on_success),
        "trials": report.trials,
        "seed": report.seed,
        "standard_error": r.real(report.standard_error),
    }


def _extraction(report: ExtractionReport, r: _Rounder) -> Dict[str, Any]:
    det = report.determinant
    return {
        "kind": "sigma_table",
        "channel": _channel(report.channel, r),
        "regime": report.regime.value,
        "operators": [
            {
                "i": sigma.i,
                "j": sigma.j,
                "matrix": r.matrix(sigma.matrix.matrix),
                "pauli": [f.pauli_i.value, f.pauli_j.value],
                "diag": r.vector(np.diag(f.diag.matrix)),
            }
            for sigma, f in zip(report.operators, report.factorizations)
        ],
        "determinant": {
            "computed": r.pair(det.computed),
            "expected": r.real(det.expected),
            "printed": r.real(det.printed),
            "relative_error": r.real(det.relative_error),
        },
        "printed_discrepancies": [list(outcome) for outcome in report.printed_discrepancies],
    }


def _verification(summary: VerificationSummary, r: _Rounder) -> Dict[str, Any]:
    return {
        "kind": "verification",
        "channel": _channel(summary.channel, r),
        "regime": summary.regime.value,
        "seed": summary.seed,
        "all_passed": summary.all_passed,
        "checks": [
            {
                "name": c.name,
                "deviation": r.real(c.deviation),
                "tolerance": r.real(c.tolerance),
                "passed": c.passed,
                "note": c.note,
            }
            for c in summary.checks
        ],
        "notes": list(summary.notes),
    }


def to_structured(payload: Payload, precision: int = 15) -> Dict[str, Any]:
    """
    Convert a report into plain JSON-ready data.

    Args:
        payload: Teleport, extraction or verification report.
        precision: Significant digits for every real number.

    Returns:
        dict: Nested dicts, lists, numbers and strings only.

    Raises:
        TypeError: If the payload type is not a known report.
    """
    r = _Rounder(precision)
    if isinstance(payload, TeleportReport):
        return _teleport(payload, r)
    if isinstance(payload, ExtractionReport):
        return _extraction(payload, r)
    if isinstance(payload, VerificationSummary):
        return _verification(payload, r)
    raise TypeError(f"Cannot serialize {type(payload).__name__}")


def render_json(payload: Payload, precision: int = 15) -> bytes:
    """Serialize a report to UTF-8 JSON bytes, newline-terminated."""
    text = json.dumps(to_structured(payload, precision), indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")
