"""
State-vector models for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from typing import Any, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import LabelError

# A qubit is named by a particle number (1..6) or an ancilla letter ("a", "b")
Label = Union[int, str]

# Dense registers only: six protocol qubits plus two ancillas
MAX_QUBITS = 8

# Absolute tolerance on amplitudes and norms
AMPLITUDE_TOLERANCE = 1e-12


def frozen_array(values: Any, ndim: int) -> np.ndarray:
    """Copy values into a read-only complex128 array of the given rank."""
    arr = np.array(values, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValueError(f"Expected a rank-{ndim} array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("Amplitudes must be finite (no NaN/Inf)")
    arr.flags.writeable = False
    return arr


class QubitIndex(BaseModel):
    """Position of a labelled qubit inside a register (0 = most significant)."""
    model_config = ConfigDict(frozen=True)

    label: Label
    position: int = Field(ge=0, lt=MAX_QUBITS)


class StateVector(BaseModel):
    """
    Complex amplitude vector over an ordered qubit register.

    The first label is the most significant bit of the amplitude index.
    Vectors need not be normalized; call ``normalized()`` explicitly.

    Attributes:
        amps: Read-only complex128 array of length 2**num_qubits.
        labels: Distinct qubit labels, most significant first.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    amps: np.ndarray
    labels: Tuple[Label, ...]

    @field_validator("amps", mode="before")
    @classmethod
    def coerce_amps(cls, v: Any) -> np.ndarray:
        """Store amplitudes as an immutable complex vector."""
        return frozen_array(v, ndim=1)

    @model_validator(mode="after")
    def check_register(self) -> "StateVector":
        """Length must be 2**n and labels distinct."""
        n = len(self.labels)
        if not 1 <= n <= MAX_QUBITS:
            raise ValueError(f"Register must hold 1..{MAX_QUBITS} qubits, got {n}")
        if len(set(self.labels)) != n:
            raise ValueError(f"Qubit labels must be distinct: {self.labels}")
        if self.amps.shape[0] != 2**n:
            raise ValueError(
                f"{n} qubits need {2**n} amplitudes, got {self.amps.shape[0]}"
            )
        return self

    @property
    def num_qubits(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared))

    def is_normalized(self, tol: float = AMPLITUDE_TOLERANCE) -> bool:
        """Check |Σ|amp|² − 1| ≤ tol."""
        return abs(self.norm_squared - 1.0) <= tol

    def normalized(self) -> "StateVector":
        """
        Return a unit-norm copy.

        Raises:
            ZeroDivisionError: If the vector is zero.
        """
        norm = self.norm
        if norm == 0.0:
            raise ZeroDivisionError("Cannot normalize the zero vector")
        return StateVector(amps=self.amps / norm, labels=self.labels)

    def index_of(self, label: Label) -> QubitIndex:
        """
        Locate a qubit by label.

        Raises:
            LabelError: If the label is not in this register.
        """
        try:
            position = self.labels.index(label)
        except ValueError:
            raise LabelError(f"Unknown qubit label {label!r}; register is {self.labels}")
        return QubitIndex(label=label, position=position)

    def positions(self, targets: Sequence[Label]) -> Tuple[int, ...]:
        """Positions of several labels, rejecting duplicates."""
        if len(set(targets)) != len(targets):
            raise LabelError(f"Duplicate target labels: {tuple(targets)}")
        return tuple(self.index_of(t).position for t in targets)

    def amplitude(self, bits: str) -> complex:
        """Amplitude of the computational basis state spelled by ``bits``."""
        if len(bits) != self.num_qubits or set(bits) - {"0", "1"}:
            raise ValueError(f"Bit pattern {bits!r} does not fit {self.num_qubits} qubits")
        return complex(self.amps[int(bits, 2)])

    def as_tensor(self) -> np.ndarray:
        """View the amplitudes with one axis per qubit."""
        return self.amps.reshape((2,) * self.num_qubits)

    def __repr__(self) -> str:
        return f"StateVector(labels={self.labels}, norm={self.norm:.6g})"
