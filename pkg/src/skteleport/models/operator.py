"""
Operator models for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from .state import frozen_array

# 8 qubits
MAX_OPERATOR_DIM = 256


class PauliKind(str, Enum):
    """
    Single-qubit corrections, indexed like the Bell states.

    Bell index → correction:
    - 1 (φ⁺): I
    - 2 (φ⁻): Z
    - 3 (ψ⁺): X
    - 4 (ψ⁻): Y_REAL, the real matrix [[0, -1], [1, 0]]
    """
    I = "I"  # noqa: E741
    Z = "Z"
    X = "X"
    Y_REAL = "Y_real"

    @property
    def bell_index(self) -> int:
        return _PAULI_ORDER.index(self) + 1

    @classmethod
    def from_bell_index(cls, k: int) -> "PauliKind":
        """
        Correction for Bell outcome k.

        Raises:
            IndexError: If k is not 1..4.
        """
        if k not in (1, 2, 3, 4):
            raise IndexError(f"Bell index must be 1..4, got {k}")
        return _PAULI_ORDER[k - 1]


_PAULI_ORDER = (PauliKind.I, PauliKind.Z, PauliKind.X, PauliKind.Y_REAL)


class OperatorClass(str, Enum):
    """Invertibility class of an operator."""
    UNITARY = "unitary"
    INVERTIBLE_NONUNITARY = "invertible_nonunitary"
    SINGULAR = "singular"


class Operator(BaseModel):
    """
    Dense complex square matrix on 2**k amplitudes.

    The qubits it acts on are chosen when it is applied.

    Attributes:
        matrix: Read-only complex128 matrix, dimension a power of two ≤ 256.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> np.ndarray:
        """Square, power-of-two, finite."""
        arr = frozen_array(v, ndim=2)
        rows, cols = arr.shape
        if rows != cols:
            raise ValueError(f"Operator must be square, got {arr.shape}")
        if rows < 1 or rows & (rows - 1):
            raise ValueError(f"Operator dimension must be a power of two, got {rows}")
        if rows > MAX_OPERATOR_DIM:
            raise ValueError(f"Operator dimension {rows} exceeds {MAX_OPERATOR_DIM}")
        return arr

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_qubits(self) -> int:
        return self.dim.bit_length() - 1

    def dagger(self) -> "Operator":
        return Operator(matrix=self.matrix.conj().T)

    def __matmul__(self, other: "Operator") -> "Operator":
        return Operator(matrix=self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"Operator(dim={self.dim})"
