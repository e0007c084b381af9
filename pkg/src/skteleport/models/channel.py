"""
Channel and input-state models for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from enum import Enum
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .state import AMPLITUDE_TOLERANCE, Label, StateVector

# Register of the shared resource, Alice's pair first
CHANNEL_LABELS: Tuple[Label, ...] = (3, 4, 5, 6)

# Basis index (over 3,4,5,6) carrying each coefficient:
# α|0000⟩ + β|1001⟩ + γ|0110⟩ + δ|1111⟩
CHANNEL_SUPPORT = (0b0000, 0b1001, 0b0110, 0b1111)


class TeleportRegime(str, Enum):
    """What a channel allows."""
    DETERMINISTIC = "deterministic"
    PROBABILISTIC = "probabilistic"
    IMPOSSIBLE = "impossible"


class ChannelSpec(BaseModel):
    """
    Partially entangled four-qubit channel.

    Coefficients are nonnegative reals so the stage-2 dilation stays real.

    Attributes:
        alpha: Weight of |0000⟩.
        beta: Weight of |1001⟩.
        gamma: Weight of |0110⟩.
        delta: Weight of |1111⟩.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(ge=0)
    beta: float = Field(ge=0)
    gamma: float = Field(ge=0)
    delta: float = Field(ge=0)

    @model_validator(mode="after")
    def check_normalized(self) -> "ChannelSpec":
        """α² + β² + γ² + δ² must be 1."""
        total = sum(c * c for c in self.coefficients)
        if abs(total - 1.0) > AMPLITUDE_TOLERANCE:
            raise ValueError(
                f"Channel coefficients must satisfy Σc² = 1, got {total!r}"
            )
        return self

    @property
    def coefficients(self) -> Tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def as_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.float64)

    @property
    def min_coefficient(self) -> float:
        return min(self.coefficients)

    def is_equal_weight(self, tol: float = AMPLITUDE_TOLERANCE) -> bool:
        return max(self.coefficients) - self.min_coefficient <= tol

    def to_state(self) -> StateVector:
        """The channel as a state over particles 3, 4, 5, 6."""
        amps = np.zeros(16, dtype=np.complex128)
        for index, coef in zip(CHANNEL_SUPPORT, self.coefficients):
            amps[index] = coef
        return StateVector(amps=amps, labels=CHANNEL_LABELS)

    @classmethod
    def from_values(cls, values: Sequence[float], renormalize: bool = False) -> "ChannelSpec":
        """
        Build a channel from four numbers.

        Args:
            values: (α, β, γ, δ).
            renormalize: Divide by the Euclidean norm first.

        Returns:
            ChannelSpec: Validated channel.
        """
        coeffs = np.asarray(values, dtype=np.float64)
        if coeffs.shape != (4,):
            raise ValueError(f"A channel needs exactly 4 coefficients, got {coeffs.size}")
        if renormalize:
            norm = float(np.linalg.norm(coeffs))
            if norm == 0.0:
                raise ValueError("Cannot normalize an all-zero channel")
            coeffs = coeffs / norm
        alpha, beta, gamma, delta = (float(c) for c in coeffs)
        return cls(alpha=alpha, beta=beta, gamma=gamma, delta=delta)

    @classmethod
    def equal(cls) -> "ChannelSpec":
        """The maximally entangled channel α = β = γ = δ = ½."""
        return cls(alpha=0.5, beta=0.5, gamma=0.5, delta=0.5)

    @classmethod
    def random(cls, rng: np.random.Generator, floor: float = 0.0) -> "ChannelSpec":
        """
        Draw a random valid channel.

        Args:
            rng: Source of randomness.
            floor: Smallest allowed coefficient after normalization.

        Returns:
            ChannelSpec: Channel with every coefficient ≥ floor.
        """
        if not 0.0 <= floor < 0.5:
            raise ValueError(f"floor must lie in [0, 0.5), got {floor}")
        while True:
            coeffs = rng.uniform(0.0, 1.0, size=4)
            coeffs = coeffs / np.linalg.norm(coeffs)
            if coeffs.min() >= floor:
                return cls.from_values(coeffs)


class InputState(BaseModel):
    """
    Unknown two-qubit state a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩ to teleport.

    Attributes:
        a, b, c, d: Complex amplitudes with |a|² + |b|² + |c|² + |d|² = 1.
    """
    model_config = ConfigDict(frozen=True)

    a: complex
    b: complex
    c: complex
    d: complex

    @model_validator(mode="after")
    def check_normalized(self) -> "InputState":
        if not all(np.isfinite(x) for x in self.amplitudes):
            raise ValueError("Input amplitudes must be finite")
        total = sum(abs(x) ** 2 for x in self.amplitudes)
        if abs(total - 1.0) > AMPLITUDE_TOLERANCE:
            raise ValueError(f"Input state must be normalized, got Σ|x|² = {total!r}")
        return self

    @property
    def amplitudes(self) -> Tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def as_array(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=np.complex128)

    def to_state(self, labels: Tuple[Label, Label] = (1, 2)) -> StateVector:
        """The input as a two-qubit state on the given labels."""
        return StateVector(amps=self.as_array(), labels=labels)

    @classmethod
    def from_values(cls, values: Sequence[complex], renormalize: bool = False) -> "InputState":
        amps = np.asarray(values, dtype=np.complex128)
        if amps.shape != (4,):
            raise ValueError(f"An input state needs exactly 4 amplitudes, got {amps.size}")
        if renormalize:
            norm = float(np.linalg.norm(amps))
            if norm == 0.0:
                raise ValueError("Cannot normalize an all-zero input")
            amps = amps / norm
        a, b, c, d = (complex(x) for x in amps)
        return cls(a=a, b=b, c=c, d=d)

    @classmethod
    def basis(cls, bits: str) -> "InputState":
        """Computational basis input, e.g. ``InputState.basis("10")``."""
        amps = np.zeros(4, dtype=np.complex128)
        amps[int(bits, 2)] = 1.0
        return cls.from_values(amps)

    @classmethod
    def random(cls, rng: np.random.Generator) -> "InputState":
        """Draw a Haar-like random input from complex Gaussian amplitudes."""
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        return cls.from_values(amps, renormalize=True)
