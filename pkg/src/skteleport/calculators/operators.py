"""
Operator calculator for SKTeleport.

Fixed operators of the teleportation scheme (Pauli corrections, Bell
states, CNOT) and the matrix algebra used to check them: Kronecker
product, LU determinant, inverse, unitarity and diagonality tests.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

import warnings
from typing import Dict, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..errors import SingularError, SizeError
from ..models.operator import MAX_OPERATOR_DIM, Operator, OperatorClass, PauliKind
from ..models.state import Label, StateVector

# |det| at or below this is singular
SINGULAR_TOLERANCE = 1e-12

# max |op·op† − I| at or below this is unitary
UNITARY_TOLERANCE = 1e-10

# Bell-pair corrections, written exactly as tabulated (ψ⁻ → real Y)
PAULI_MATRICES: Dict[PauliKind, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    PauliKind.I: ((1, 0), (0, 1)),
    PauliKind.Z: ((1, 0), (0, -1)),
    PauliKind.X: ((0, 1), (1, 0)),
    PauliKind.Y_REAL: ((0, -1), (1, 0)),
}

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# 1 = φ⁺, 2 = φ⁻, 3 = ψ⁺, 4 = ψ⁻ over |00⟩, |01⟩, |10⟩, |11⟩
BELL_AMPLITUDES: Dict[int, Tuple[int, int, int, int]] = {
    1: (1, 0, 0, 1),
    2: (1, 0, 0, -1),
    3: (0, 1, 1, 0),
    4: (0, 1, -1, 0),
}


def pauli(kind: PauliKind) -> Operator:
    """2×2 correction matrix for ``kind``."""
    return Operator(matrix=PAULI_MATRICES[PauliKind(kind)])


def bell_state(k: int, labels: Sequence[Label] = (0, 1)) -> StateVector:
    """
    Normalized Bell state number k.

    Args:
        k: 1 = (|00⟩+|11⟩)/√2, 2 = (|00⟩−|11⟩)/√2,
           3 = (|01⟩+|10⟩)/√2, 4 = (|01⟩−|10⟩)/√2.
        labels: Labels for the two qubits.

    Raises:
        IndexError: If k is not 1..4.
    """
    if k not in BELL_AMPLITUDES:
        raise IndexError(f"Bell index must be 1..4, got {k}")
    amps = _SQRT_HALF * np.array(BELL_AMPLITUDES[k], dtype=np.complex128)
    return StateVector(amps=amps, labels=tuple(labels))


def cnot() -> Operator:
    """Controlled-NOT, control on the first qubit."""
    return Operator(
        matrix=[
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ]
    )


def identity(dim: int) -> Operator:
    return Operator(matrix=np.eye(dim))


def diagonal(values: Sequence[complex]) -> Operator:
    return Operator(matrix=np.diag(np.asarray(values, dtype=np.complex128)))


def kron(a: Operator, b: Operator) -> Operator:
    """
    Kronecker product a ⊗ b.

    Raises:
        SizeError: If the product is larger than 256×256.
    """
    dim = a.dim * b.dim
    if dim > MAX_OPERATOR_DIM:
        raise SizeError(f"kron result dim {dim} exceeds {MAX_OPERATOR_DIM}")
    return Operator(matrix=np.kron(a.matrix, b.matrix))


def _lu(op: Operator) -> Tuple[np.ndarray, np.ndarray]:
    # An exactly singular matrix is a legitimate input here
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        return scipy.linalg.lu_factor(op.matrix, check_finite=False)


def determinant(op: Operator) -> complex:
    """
    Determinant via LU factorization with partial pivoting.

    Args:
        op: Square operator.

    Returns:
        complex: det(op).
    """
    lu, piv = _lu(op)
    swaps = int(np.count_nonzero(piv != np.arange(piv.shape[0])))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


def inverse(op: Operator) -> Operator:
    """
    Matrix inverse, reusing the LU factors.

    Raises:
        SingularError: If |det(op)| ≤ 1e-12.
    """
    det = determinant(op)
    if abs(det) <= SINGULAR_TOLERANCE:
        raise SingularError(f"Operator is singular (|det| = {abs(det):.3g})")
    inv = scipy.linalg.lu_solve(_lu(op), np.eye(op.dim, dtype=np.complex128))
    return Operator(matrix=inv)


def unitarity_deviation(op: Operator) -> float:
    """max |op·op† − I|."""
    gram = op.matrix @ op.matrix.conj().T
    return float(np.max(np.abs(gram - np.eye(op.dim))))


def is_unitary(op: Operator, tol: float = UNITARY_TOLERANCE) -> bool:
    return unitarity_deviation(op) <= tol


def classify(op: Operator) -> OperatorClass:
    """
    Sort an operator into unitary / invertible_nonunitary / singular.

    Singular when |det| ≤ 1e-12, unitary when ‖op·op† − I‖max ≤ 1e-10.
    """
    if abs(determinant(op)) <= SINGULAR_TOLERANCE:
        return OperatorClass.SINGULAR
    if is_unitary(op):
        return OperatorClass.UNITARY
    return OperatorClass.INVERTIBLE_NONUNITARY


def off_diagonal_mass(op: Operator) -> float:
    """Frobenius norm of everything off the main diagonal."""
    off = op.matrix - np.diag(np.diag(op.matrix))
    return float(np.linalg.norm(off))


def is_monomial(op: Operator, tol: float = SINGULAR_TOLERANCE) -> bool:
    """Exactly one entry above ``tol`` in every row and every column."""
    nonzero = np.abs(op.matrix) > tol
    return bool(np.all(nonzero.sum(axis=0) == 1) and np.all(nonzero.sum(axis=1) == 1))


def max_entry_difference(a: Operator, b: Operator) -> float:
    """Largest entrywise difference of two same-size operators."""
    if a.dim != b.dim:
        raise SizeError(f"Cannot compare dim {a.dim} with dim {b.dim}")
    return float(np.max(np.abs(a.matrix - b.matrix)))
