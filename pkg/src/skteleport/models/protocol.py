"""
Protocol models for SKTeleport.

Outcome messages, correction plans and the report produced by a
teleportation run.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .channel import ChannelSpec, TeleportRegime
from .operator import PauliKind
from .state import StateVector

# Σ p(i, j) must match 1 this closely in exhaustive mode
PROBABILITY_TOLERANCE = 1e-12


class ProtocolMode(str, Enum):
    """How run_protocol explores the outcomes."""
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class OutcomeMessage(BaseModel):
    """Alice's two Bell results, sent to Bob over the classical channel."""
    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1, le=4)
    j: int = Field(ge=1, le=4)

    @property
    def index(self) -> int:
        """Flat index 0..15, (1,1) first."""
        return 4 * (self.i - 1) + (self.j - 1)

    @classmethod
    def from_index(cls, index: int) -> "OutcomeMessage":
        return cls(i=index // 4 + 1, j=index % 4 + 1)

    @classmethod
    def all(cls) -> List["OutcomeMessage"]:
        return [cls.from_index(k) for k in range(16)]

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


class RandomDraw(BaseModel):
    """Ask for a sampled measurement result from a seeded generator."""
    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, lt=2**64)


class AliceMeasurement(BaseModel):
    """
    Result of Alice's two Bell measurements.

    Attributes:
        message: Outcome (i, j).
        residual56: Unnormalized state left on (5, 6), ¼·σⁱʲ|χ⟩.
        probability: ‖residual56‖².
    """
    model_config = ConfigDict(frozen=True)

    message: OutcomeMessage
    residual56: StateVector
    probability: float = Field(ge=0)


class ZeroProbabilityOutcome(BaseModel):
    """Returned when an explicitly chosen outcome cannot occur."""
    model_config = ConfigDict(frozen=True)

    message: OutcomeMessage
    probability: float = Field(ge=0)


class CorrectionPlan(BaseModel):
    """
    Bob's two-stage correction for one outcome.

    Stage 1 undoes the Pauli pair and the sign pattern of the diagonal
    factor. Stage 2 rescales by k·|A|⁻¹ through the ancilla dilation.

    Attributes:
        message: Outcome this plan answers.
        stage1: Pauli pair (σ⁵ⁱ, σ⁶ʲ).
        signs: Signs of the diagonal factor A, undone with stage 1.
        a_coeffs: Diagonal of A₁, each in [0, 1].
        k: Scale constant, min |A|.
    """
    model_config = ConfigDict(frozen=True)

    message: OutcomeMessage
    stage1: Tuple[PauliKind, PauliKind]
    signs: Tuple[int, int, int, int] = (1, 1, 1, 1)
    a_coeffs: Tuple[float, float, float, float]
    k: float = Field(gt=0)

    @field_validator("signs")
    @classmethod
    def check_signs(cls, v: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        if any(s not in (-1, 1) for s in v):
            raise ValueError(f"Signs must be ±1, got {v}")
        return v

    @field_validator("a_coeffs")
    @classmethod
    def check_a_coeffs(
        cls, v: Tuple[float, float, float, float]
    ) -> Tuple[float, float, float, float]:
        """A₂ = diag(√(1 − aₗ²)) is only real for aₗ in [0, 1]."""
        if any(not 0.0 <= a <= 1.0 for a in v):
            raise ValueError(f"Every a_l must lie in [0, 1], got {v}")
        return v

    @property
    def is_identity_dilation(self) -> bool:
        return all(a == 1.0 for a in self.a_coeffs)


class Stage2Result(BaseModel):
    """
    Outcome of the ancilla-assisted collective unitary.

    Attributes:
        success: Ancilla read 0.
        ancilla_outcome: Measured ancilla bit.
        final56: State of (5, 6) after the measurement; normalized
            whenever the outcome had nonzero probability.
        p_success_given_outcome: Probability of reading 0, ‖A₁ψ‖².
    """
    model_config = ConfigDict(frozen=True)

    success: bool
    ancilla_outcome: int = Field(ge=0, le=1)
    final56: StateVector
    p_success_given_outcome: float = Field(ge=0, le=1 + 1e-9)


class OutcomeRecord(BaseModel):
    """One row of the outcome table."""
    message: OutcomeMessage
    probability: float = Field(ge=0, le=1 + 1e-9)
    success_given_outcome: float = Field(ge=0, le=1 + 1e-9)
    fidelity: Optional[float] = None
    count: Optional[int] = None


class TeleportReport(BaseModel):
    """
    Everything one teleportation run produced.

    Attributes:
        channel: Channel used.
        input_amplitudes: The state that was teleported, as (a, b, c, d).
        regime: Deterministic, probabilistic or impossible.
        mode: Exhaustive or sampled.
        per_outcome: 16 records, (1,1) first.
        total_success: Overall success probability (or frequency).
        fidelity_on_success: Worst fidelity over successful branches.
        trials: Number of sampled trials (sampled mode).
        seed: Master seed (sampled mode).
        standard_error: Binomial standard error of total_success (sampled mode).
    """
    channel: ChannelSpec
    input_amplitudes: Tuple[complex, complex, complex, complex]
    regime: TeleportRegime
    mode: ProtocolMode
    per_outcome: List[OutcomeRecord]
    total_success: float = Field(ge=0, le=1 + 1e-9)
    fidelity_on_success: Optional[float] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    standard_error: Optional[float] = None

    @model_validator(mode="after")
    def check_outcomes(self) -> "TeleportReport":
        if len(self.per_outcome) != 16:
            raise ValueError(f"Expected 16 outcome records, got {len(self.per_outcome)}")
        if self.mode is ProtocolMode.EXHAUSTIVE:
            total = sum(r.probability for r in self.per_outcome)
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"Outcome probabilities sum to {total!r}, not 1")
        return self

    @property
    def total_probability(self) -> float:
        return sum(r.probability for r in self.per_outcome)
