"""
Verification summary models for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from .channel import ChannelSpec, TeleportRegime


class CheckResult(BaseModel):
    """
    A single check.

    Numerical checks carry a measured deviation and its tolerance;
    pass/fail checks leave both unset.
    """
    name: str
    passed: bool
    deviation: Optional[float] = Field(default=None, ge=0)
    tolerance: Optional[float] = Field(default=None, gt=0)
    note: str = ""

    @model_validator(mode="after")
    def check_tolerance_pair(self) -> "CheckResult":
        if (self.deviation is None) != (self.tolerance is None):
            raise ValueError("deviation and tolerance must be given together")
        return self

    @property
    def is_numeric(self) -> bool:
        return self.tolerance is not None


class VerificationSummary(BaseModel):
    """All checks run for one (input, channel) pair."""
    channel: ChannelSpec
    regime: TeleportRegime
    checks: List[CheckResult] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    seed: Optional[int] = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]
