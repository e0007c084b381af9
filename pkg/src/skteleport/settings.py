"""
Settings loader for SKTeleport.

Reads the packaged ``data/defaults.yaml`` into validated pydantic models.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional, Tuple

import yaml
from pydantic import BaseModel, Field, field_validator

DEFAULTS_PATH = Path(__file__).parent / "data" / "defaults.yaml"


class SamplingSettings(BaseModel):
    """Monte-Carlo defaults."""
    default_trials: int = Field(100_000, ge=1)
    chunk_size: int = Field(10_000, ge=1)


class OutputSettings(BaseModel):
    """Report serialization defaults."""
    precision: int = Field(15, ge=1, le=17)
    channel_tolerance: float = Field(1e-9, gt=0)


class LoggingSettings(BaseModel):
    """Logging configuration applied by the CLI."""
    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Accept only level names the logging module knows."""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Invalid logging level: {v}")
        return level


class KitSettings(BaseModel):
    """
    Complete SKTeleport settings.

    Attributes:
        default_channel: Channel coefficients used when none is given.
        default_seed: Seed for random inputs and sampled runs.
        sampling: Monte-Carlo defaults.
        output: Serialization defaults.
        logging: Logging configuration.
    """
    default_channel: Tuple[float, float, float, float] = (0.5, 0.5, 0.5, 0.5)
    default_seed: int = Field(20080101, ge=0, lt=2**64)
    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    @classmethod
    def load(cls, filepath: Path) -> "KitSettings":
        """
        Load settings from a YAML file.

        Args:
            filepath: Path to the settings YAML file.

        Returns:
            KitSettings: Validated settings.

        Raises:
            FileNotFoundError: If the file doesn't exist.
        """
        if not filepath.exists():
            raise FileNotFoundError(f"Settings not found: {filepath}")

        with open(filepath, "r") as f:
            data = yaml.safe_load(f) or {}

        return cls.model_validate(data)


@lru_cache(maxsize=None)
def get_settings(path: Optional[Path] = None) -> KitSettings:
    """Return the packaged settings (cached)."""
    return KitSettings.load(path or DEFAULTS_PATH)
