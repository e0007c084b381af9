"""
Run configuration model for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from enum import Enum
from pathlib import Path
from typing import Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from .channel import ChannelSpec, InputState


class RunMode(str, Enum):
    """What the command line should do."""
    EXTRACT = "extract"
    VERIFY = "verify"
    RUN_EXHAUSTIVE = "run-exhaustive"
    RUN_SAMPLED = "run-sampled"


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class RunConfig(BaseModel):
    """
    One fully resolved command-line invocation.

    Attributes:
        channel: Channel coefficients, unit norm.
        input: Input amplitudes; None means "random from seed".
        mode: Requested action.
        trials: Monte-Carlo trials (run-sampled only).
        seed: 64-bit unsigned seed.
        output_format: Text or structured output.
        normalize: Whether --normalize was given.
        out: Destination file; None means stdout.
    """
    channel: Tuple[float, float, float, float]
    input: Optional[Tuple[complex, complex, complex, complex]] = None
    mode: RunMode = RunMode.RUN_EXHAUSTIVE
    trials: Optional[int] = Field(None, ge=1)
    seed: int = Field(ge=0, lt=2**64)
    output_format: OutputFormat = OutputFormat.TEXT
    normalize: bool = False
    out: Optional[Path] = None

    @field_validator("channel")
    @classmethod
    def check_channel(
        cls, v: Tuple[float, float, float, float]
    ) -> Tuple[float, float, float, float]:
        """Validate by building the channel itself."""
        ChannelSpec.from_values(v)
        return v

    @field_validator("input")
    @classmethod
    def check_input(
        cls, v: Optional[Tuple[complex, complex, complex, complex]]
    ) -> Optional[Tuple[complex, complex, complex, complex]]:
        if v is not None:
            InputState.from_values(v)
        return v

    @model_validator(mode="after")
    def check_trials(self) -> "RunConfig":
        if self.mode is RunMode.RUN_SAMPLED and self.trials is None:
            raise ValueError("run-sampled needs a trial count")
        return self

    def channel_spec(self) -> ChannelSpec:
        return ChannelSpec.from_values(self.channel)

    def input_state(self) -> Optional[InputState]:
        if self.input is None:
            return None
        return InputState.from_values(self.input)
