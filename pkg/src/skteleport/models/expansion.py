"""
Bell-expansion result models for SKTeleport.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .channel import ChannelSpec, TeleportRegime
from .operator import Operator, PauliKind
from .state import StateVector


class TransformationOperator(BaseModel):
    """
    Operator σⁱʲ left on Bob's qubits (5, 6) by Bell outcome (i, j).

    Attributes:
        i: Bell outcome on pair (1, 4).
        j: Bell outcome on pair (2, 3).
        matrix: 4×4 operator; the residual is ¼·matrix·|χ⟩.
    """
    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1, le=4)
    j: int = Field(ge=1, le=4)
    matrix: Operator

    @field_validator("matrix")
    @classmethod
    def check_two_qubit(cls, v: Operator) -> Operator:
        if v.dim != 4:
            raise ValueError(f"Transformation operators are 4×4, got dim {v.dim}")
        return v

    @property
    def outcome(self) -> Tuple[int, int]:
        return (self.i, self.j)


class Factorization(BaseModel):
    """σⁱʲ = (pauli_i ⊗ pauli_j) · diag."""
    model_config = ConfigDict(frozen=True)

    pauli_i: PauliKind
    pauli_j: PauliKind
    diag: Operator


class Branch(BaseModel):
    """One system ⊗ ancilla term of the CNOT-path expansion."""
    model_config = ConfigDict(frozen=True)

    signs: Tuple[int, int, int, int]
    system_state: StateVector
    ancilla_state: StateVector


class BranchDecomposition(BaseModel):
    """
    The CNOT-path state written as four system ⊗ ancilla branches.

    Attributes:
        branches: Four branches, one per sign pattern.
        scale: Global factor multiplying the branch sum.
    """
    model_config = ConfigDict(frozen=True)

    branches: Tuple[Branch, Branch, Branch, Branch]
    scale: float


class DeterminantReport(BaseModel):
    """
    det σ¹¹ against the two candidate closed forms.

    Attributes:
        computed: LU determinant of the extracted σ¹¹.
        expected: 16αβγδ, the product of 2·diag(α, β, γ, δ).
        printed: 2αβγδ, the constant as usually quoted.
        relative_error: |computed − expected| / |expected|, or |computed|
            for a singular channel.
    """
    model_config = ConfigDict(frozen=True)

    computed: complex
    expected: float
    printed: float
    relative_error: float = Field(ge=0)

    @property
    def is_singular(self) -> bool:
        return self.expected == 0.0


class IdentityTerm(BaseModel):
    """
    One term of the two-CNOT operator identity.

    coefficient · (system Z-string on 5, 6) ⊗ (ancilla X-string on a, b)
    """
    model_config = ConfigDict(frozen=True)

    system: Tuple[PauliKind, PauliKind]
    ancilla: Tuple[PauliKind, PauliKind]
    coefficient: float


class ExtractionReport(BaseModel):
    """
    Everything the extract mode reports for one channel.

    Attributes:
        channel: Channel the operators were extracted from.
        regime: Invertibility verdict shared by all sixteen operators.
        operators: σⁱʲ, ordered (1,1) ... (4,4).
        factorizations: Pauli pair and diagonal factor for each operator.
        determinant: det σ¹¹ against its closed forms.
        printed_discrepancies: Outcomes whose published closed form
            disagrees with extraction for this channel.
    """
    channel: ChannelSpec
    regime: TeleportRegime
    operators: List[TransformationOperator]
    factorizations: List[Factorization]
    determinant: DeterminantReport
    printed_discrepancies: List[Tuple[int, int]] = Field(default_factory=list)
