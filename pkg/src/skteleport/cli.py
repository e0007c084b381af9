"""
SKTeleport Command Line Interface.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import click
import numpy as np
from pydantic import ValidationError
from rich.console import Console

from . import __version__
from .analyzers import run_verification
from .calculators import extraction_report
from .errors import SKTeleportError
from .exporters import render_json, render_text
from .exporters.json_exporter import Payload
from .generators import run_protocol
from .models import (
    InputState,
    OutputFormat,
    ProtocolMode,
    RunConfig,
    RunMode,
)
from .settings import get_settings

err_console = Console(stderr=True)

logger = logging.getLogger(__name__)


class NumberListType(click.ParamType):
    """Four comma-separated numbers, e.g. ``0.6,0.4,0.5,0.48``."""

    name = "numbers"

    def __init__(self, parse=float, kind: str = "real"):
        self.parse = parse
        self.kind = kind

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = [p.strip() for p in str(value).split(",")]
        if len(parts) != 4:
            self.fail(
                f"expected 4 comma-separated {self.kind} numbers, got {value!r}", param, ctx
            )
        numbers = []
        for part in parts:
            try:
                if self.kind == "complex":
                    part = part.replace("i", "j")
                number = self.parse(part)
            except ValueError:
                self.fail(f"{part!r} is not a {self.kind} number", param, ctx)
            if not np.isfinite(number):
                self.fail(f"{part!r} is not finite", param, ctx)
            numbers.append(number)
        return tuple(numbers)


CHANNEL = NumberListType(float, "real")
AMPLITUDES = NumberListType(complex, "complex")


def _unit_norm(
    values: Tuple,
    normalize: bool,
    tolerance: float,
    what: str,
    param: str,
) -> Tuple:
    """Accept near-unit vectors, rescaling them; others only with --normalize."""
    total = sum(abs(v) ** 2 for v in values)
    if total == 0.0:
        raise click.BadParameter(f"{what} {values} is all zero", param_hint=param)
    if abs(total - 1.0) > tolerance and not normalize:
        raise click.BadParameter(
            f"{what} {values} has squared norm {total!r}; pass --normalize to rescale it",
            param_hint=param,
        )
    norm = math.sqrt(total)
    return tuple(v / norm for v in values)


def build_run_config(
    channel: Optional[Tuple[float, ...]] = None,
    input_amplitudes: Optional[Tuple[complex, ...]] = None,
    mode: str = RunMode.RUN_EXHAUSTIVE.value,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    output_format: str = OutputFormat.TEXT.value,
    normalize: bool = False,
    out: Optional[Path] = None,
    verbose: bool = False,
) -> RunConfig:
    """
    Turn parsed option values into a validated RunConfig.

    Raises:
        click.BadParameter: If a vector cannot be normalized or the
            combination of options is invalid.
    """
    settings = get_settings()
    tolerance = settings.output.channel_tolerance
    if channel is None:
        channel = settings.default_channel

    if any(c < 0 for c in channel):
        raise click.BadParameter(
            f"channel coefficients must be nonnegative, got {channel}", param_hint="'--channel'"
        )
    channel = _unit_norm(channel, normalize, tolerance, "channel", "'--channel'")
    if input_amplitudes is not None:
        input_amplitudes = _unit_norm(
            input_amplitudes, normalize, tolerance, "input", "'--input'"
        )

    run_mode = RunMode(mode)
    if run_mode is RunMode.RUN_SAMPLED and trials is None:
        trials = settings.sampling.default_trials

    try:
        return RunConfig(
            channel=channel,
            input=input_amplitudes,
            mode=run_mode,
            trials=trials,
            seed=settings.default_seed if seed is None else seed,
            output_format=OutputFormat(output_format),
            normalize=normalize,
            out=out,
        )
    except ValidationError as e:
        raise click.BadParameter(str(e))


def configure_logging(verbose: bool = False) -> None:
    """Send log records to stderr using the packaged logging settings."""
    settings = get_settings().logging
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.level,
        format=settings.format,
        stream=sys.stderr,
        force=True,
    )


def execute(config: RunConfig) -> Payload:
    """Run the requested mode and return its report."""
    channel = config.channel_spec()
    input_state = config.input_state()
    drawn = input_state is None
    if drawn:
        input_state = InputState.random(np.random.default_rng(config.seed))
        logger.debug("Random input from seed %d: %s", config.seed, input_state.amplitudes)

    if config.mode is RunMode.EXTRACT:
        return extraction_report(channel)
    if config.mode is RunMode.VERIFY:
        return run_verification(input_state, channel, seed=config.seed if drawn else None)
    if config.mode is RunMode.RUN_SAMPLED:
        return run_protocol(
            input_state,
            channel,
            mode=ProtocolMode.SAMPLED,
            seed=config.seed,
            trials=config.trials,
        )
    return run_protocol(input_state, channel)


def emit_report(payload: Payload, output_format: Union[OutputFormat, str]) -> bytes:
    """
    Serialize a report.

    Args:
        payload: Teleport, extraction or verification report.
        output_format: "text" for rich tables, "structured" for JSON.

    Returns:
        bytes: UTF-8 encoded report.
    """
    if OutputFormat(output_format) is OutputFormat.STRUCTURED:
        return render_json(payload, precision=get_settings().output.precision)
    return render_text(payload).encode("utf-8")


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="SKTeleport")
@click.option("--channel", "-c", type=CHANNEL, help="Channel α,β,γ,δ (default from settings)")
@click.option(
    "--input",
    "-i",
    "input_amplitudes",
    type=AMPLITUDES,
    help="Input a,b,c,d, complex allowed (default: random from --seed)",
)
@click.option(
    "--mode",
    "-m",
    type=click.Choice([m.value for m in RunMode]),
    default=RunMode.RUN_EXHAUSTIVE.value,
    show_default=True,
    help="What to run",
)
@click.option("--trials", "-t", type=click.IntRange(min=1), help="Trials for run-sampled")
@click.option("--seed", "-s", type=click.IntRange(0, 2**64 - 1), help="64-bit unsigned seed")
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Output format",
)
@click.option("--normalize", is_flag=True, help="Rescale channel and input to unit norm")
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the report here instead of stdout",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
def cli(**params):
    """
    SKTeleport - two-qubit teleportation over a four-qubit channel.

    Extracts the sixteen transformation operators, verifies their
    closed forms and factorizations, and simulates the probabilistic
    protocol with its ancilla-assisted correction.

    Examples:

        skteleport --channel 0.5,0.5,0.5,0.5 --mode run-exhaustive

        skteleport -c 0.6,0.4,0.5,0.4795831523 -m extract -f structured

        skteleport --mode run-sampled --trials 100000 --seed 42
    """
    config = build_run_config(**params)
    configure_logging(params.get("verbose", False))

    try:
        data = emit_report(execute(config), config.output_format)
        if config.out is not None:
            config.out.write_bytes(data)
            err_console.print(f"[green]✓[/green] Report written to {config.out}")
        else:
            stdout = click.get_binary_stream("stdout")
            stdout.write(data)
            stdout.flush()
    except (SKTeleportError, OSError) as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise SystemExit(1)


def parse_args(argv: Sequence[str]) -> RunConfig:
    """
    Map command-line arguments to a RunConfig without running anything.

    Raises:
        click.UsageError: On unknown flags or bad values (exit code 2).
    """
    ctx = cli.make_context("skteleport", list(argv))
    return build_run_config(**ctx.params)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
