"""
Text exporter for SKTeleport reports.

Renders reports as rich tables into a plain string (no colour codes),
so the text output is as reproducible as the structured one.

Copyright (C) 2025 smilinTux
Licensed under AGPL-3.0.
"""

import io
from typing import Optional, Union

import numpy as np
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..models import (
    ExtractionReport,
    TeleportReport,
    VerificationSummary,
)

Payload = Union[TeleportReport, ExtractionReport, VerificationSummary]

TEXT_WIDTH = 100


def _num(x: Optional[float], digits: int = 6) -> str:
    return "-" if x is None else f"{x:.{digits}g}"


def _complex(z: complex) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-15:
        return f"{z.real:+.4f}"
    return f"{z.real:+.4f}{z.imag:+.4f}j"


def _channel_line(report: Union[TeleportReport, ExtractionReport, VerificationSummary]) -> str:
    a, b, g, d = report.channel.coefficients
    return f"α={a:.6g}  β={b:.6g}  γ={g:.6g}  δ={d:.6g}  regime: {report.regime.value}"


def _render_teleport(console: Console, report: TeleportReport) -> None:
    console.print(Panel(_channel_line(report), title=f"Teleportation ({report.mode.value})"))

    sampled = report.trials is not None
    table = Table(title="Outcomes", box=box.SIMPLE)
    table.add_column("i", justify="right")
    table.add_column("j", justify="right")
    table.add_column("probability", justify="right")
    table.add_column("p(success | i,j)", justify="right")
    table.add_column("fidelity", justify="right")
    if sampled:
        table.add_column("count", justify="right")

    for rec in report.per_outcome:
        row = [
            str(rec.message.i),
            str(rec.message.j),
            _num(rec.probability),
            _num(rec.success_given_outcome),
            _num(rec.fidelity, 12),
        ]
        if sampled:
            row.append(str(rec.count))
        table.add_row(*row)
    console.print(table)

    console.print(f"total probability:   {_num(report.total_probability, 12)}")
    console.print(f"total success:       {_num(report.total_success, 12)}")
    console.print(f"fidelity on success: {_num(report.fidelity_on_success, 12)}")
    if sampled:
        console.print(f"trials: {report.trials}  seed: {report.seed}  "
                      f"standard error: {_num(report.standard_error)}")


def _render_extraction(console: Console, report: ExtractionReport) -> None:
    console.print(Panel(_channel_line(report), title="Transformation operators"))

    for sigma, factors in zip(report.operators, report.factorizations):
        diag = ", ".join(_complex(z) for z in np.diag(factors.diag.matrix))
        table = Table(
            title=f"σ({sigma.i},{sigma.j}) = ({factors.pauli_i.value} ⊗ {factors.pauli_j.value})"
            f" · diag({diag})",
            box=box.SIMPLE,
            show_header=False,
        )
        for _ in range(4):
            table.add_column(justify="right")
        for row in sigma.matrix.matrix:
            table.add_row(*(_complex(z) for z in row))
        console.print(table)

    det = report.determinant
    console.print(
        f"det σ(1,1) = {_num(det.computed.real, 12)}  "
        f"(16αβγδ = {_num(det.expected, 12)}, quoted 2αβγδ = {_num(det.printed, 12)})"
    )
    if report.printed_discrepancies:
        outcomes = ", ".join(f"({i},{j})" for i, j in report.printed_discrepancies)
        console.print(f"published closed forms differ at: {outcomes}")


def _render_verification(console: Console, summary: VerificationSummary) -> None:
    console.print(Panel(_channel_line(summary), title="Verification"))

    table = Table(box=box.SIMPLE)
    table.add_column("check")
    table.add_column("deviation", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("result")
    table.add_column("note")
    for check in summary.checks:
        table.add_row(
            check.name,
            _num(check.deviation, 3),
            _num(check.tolerance, 3),
            "PASS" if check.passed else "FAIL",
            check.note,
        )
    console.print(table)

    for note in summary.notes:
        console.print(f"note: {note}")
    console.print("all checks passed" if summary.all_passed else
                  f"{len(summary.failed)} check(s) failed")


def render_text(payload: Payload, width: int = TEXT_WIDTH) -> str:
    """
    Render a report as plain text tables.

    Args:
        payload: Teleport, extraction or verification report.
        width: Console width in characters.

    Returns:
        str: The rendered report.

    Raises:
        TypeError: If the payload type is not a known report.
    """
    buffer = io.StringIO()
    console = Console(
        file=buffer,
        width=width,
        color_system=None,
        force_terminal=False,
        markup=False,
        emoji=False,
        highlight=False,
    )

    if isinstance(payload, TeleportReport):
        _render_teleport(console, payload)
    elif isinstance(payload, ExtractionReport):
        _render_extraction(console, payload)
    elif isinstance(payload, VerificationSummary):
        _render_verification(console, payload)
    else:
        raise TypeError(f"Cannot render {type(payload).__name__}")
    return buffer.getvalue()
