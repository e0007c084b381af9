"""
State-vector calculator for SKTeleport.

Construction, tensor products, operator application on arbitrary qubit
subsets, partial projection and fidelity for dense registers of up to
8 qubits. Every function is pure; inputs are never modified.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import LabelError, NormalizationError, ShapeError, SizeError
from ..models.operator import Operator
from ..models.state import (
    AMPLITUDE_TOLERANCE,
    MAX_QUBITS,
    Label,
    StateVector,
)


def ket(amplitudes: Sequence[complex], labels: Sequence[Label]) -> StateVector:
    """Build a state from raw amplitudes."""
    return StateVector(amps=amplitudes, labels=tuple(labels))


def basis_state(
    num_qubits: int,
    bit_pattern: str,
    labels: Optional[Sequence[Label]] = None,
) -> StateVector:
    """
    Computational basis vector |bit_pattern⟩.

    The first character is the most significant bit, so ``"01"`` on two
    qubits is index 1 and ``"10"`` is index 2.

    Args:
        num_qubits: Register size, 1..8.
        bit_pattern: String of '0'/'1' of length num_qubits.
        labels: Qubit labels, default 0..num_qubits-1.

    Returns:
        StateVector: Unit amplitude at int(bit_pattern, 2).

    Raises:
        SizeError: If the size is out of range or the pattern length differs.
    """
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise SizeError(f"Register size must be 1..{MAX_QUBITS}, got {num_qubits}")
    if len(bit_pattern) != num_qubits:
        raise SizeError(
            f"Bit pattern {bit_pattern!r} has {len(bit_pattern)} bits, expected {num_qubits}"
        )
    if set(bit_pattern) - {"0", "1"}:
        raise ValueError(f"Bit pattern must contain only 0/1, got {bit_pattern!r}")

    if labels is None:
        labels = tuple(range(num_qubits))
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    amps[int(bit_pattern, 2)] = 1.0
    return StateVector(amps=amps, labels=tuple(labels))


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """
    Kronecker product a ⊗ b; a's labels come first.

    Raises:
        LabelError: If the registers share a label.
        SizeError: If the result would exceed 8 qubits.
    """
    shared = set(a.labels) & set(b.labels)
    if shared:
        raise LabelError(f"Registers overlap on labels {sorted(map(str, shared))}")
    if a.num_qubits + b.num_qubits > MAX_QUBITS:
        raise SizeError(
            f"Tensor product would hold {a.num_qubits + b.num_qubits} qubits "
            f"(max {MAX_QUBITS})"
        )
    return StateVector(amps=np.kron(a.amps, b.amps), labels=a.labels + b.labels)


def apply(state: StateVector, op: Operator, targets: Sequence[Label]) -> StateVector:
    """
    Apply ``op`` to the qubits named by ``targets``, identity elsewhere.

    The first target is the most significant qubit of ``op``'s index.

    Args:
        state: Register to act on.
        op: Operator of dimension 2**len(targets).
        targets: Labels in the order the operator expects them.

    Returns:
        StateVector: New state with the same labels.

    Raises:
        ShapeError: If op's dimension does not match the targets.
        LabelError: If a target is unknown or repeated.
    """
    positions = state.positions(targets)
    k = len(positions)
    if k == 0 or op.dim != 2**k:
        raise ShapeError(f"Operator of dim {op.dim} cannot act on {k} target qubit(s)")

    gate = op.matrix.reshape((2,) * (2 * k))
    # Contract the operator's input axes with the target axes; the
    # output axes land in front and are moved back into place.
    out = np.tensordot(gate, state.as_tensor(), axes=(list(range(k, 2 * k)), list(positions)))
    out = np.moveaxis(out, list(range(k)), list(positions))
    return StateVector(amps=out.reshape(-1), labels=state.labels)


def project(
    state: StateVector,
    pattern: StateVector,
    targets: Sequence[Label],
) -> Tuple[StateVector, float]:
    """
    Partial inner product ⟨pattern|state⟩ over ``targets``.

    Args:
        state: Register to project.
        pattern: Normalized state on exactly len(targets) qubits.
        targets: Labels matched to pattern's qubits, in order.

    Returns:
        Tuple of (residual, probability): the unnormalized state on the
        remaining labels (original order) and its squared norm.

    Raises:
        NormalizationError: If pattern is not normalized.
        ShapeError: If pattern size differs from the targets or nothing remains.
        LabelError: If a target is unknown or repeated.
    """
    positions = state.positions(targets)
    k = len(positions)
    if pattern.num_qubits != k:
        raise ShapeError(
            f"Pattern spans {pattern.num_qubits} qubit(s) but {k} target(s) given"
        )
    if k >= state.num_qubits:
        raise ShapeError("Projection must leave at least one qubit")
    if not pattern.is_normalized():
        raise NormalizationError(
            f"Projection pattern must be normalized (norm² = {pattern.norm_squared!r})"
        )

    bra = pattern.as_tensor().conj()
    residual = np.tensordot(bra, state.as_tensor(), axes=(list(range(k)), list(positions)))
    remaining = tuple(label for label in state.labels if label not in targets)
    result = StateVector(amps=residual.reshape(-1), labels=remaining)
    return result, result.norm_squared


def inner(x: StateVector, y: StateVector) -> complex:
    """⟨x|y⟩ for states over the same ordered labels."""
    if x.labels != y.labels:
        raise LabelError(f"Label mismatch: {x.labels} vs {y.labels}")
    return complex(np.vdot(x.amps, y.amps))


def fidelity(x: StateVector, y: StateVector) -> float:
    """
    Overlap |⟨x|y⟩|² of two normalized states.

    Raises:
        LabelError: If the registers differ.
        NormalizationError: If either state is not normalized.
    """
    for name, s in (("x", x), ("y", y)):
        if not s.is_normalized():
            raise NormalizationError(
                f"fidelity needs normalized states; {name} has norm² {s.norm_squared!r}"
            )
    return abs(inner(x, y)) ** 2


def reorder(state: StateVector, labels: Sequence[Label]) -> StateVector:
    """
    Permute qubits so the register reads in ``labels`` order.

    Raises:
        LabelError: If ``labels`` is not a permutation of the register.
    """
    labels = tuple(labels)
    if len(labels) != state.num_qubits:
        raise LabelError(f"{labels} is not a permutation of {state.labels}")
    axes = state.positions(labels)
    permuted = np.transpose(state.as_tensor(), axes)
    return StateVector(amps=permuted.reshape(-1), labels=labels)


def max_abs_difference(x: StateVector, y: StateVector) -> float:
    """Largest amplitude difference between two states on the same labels."""
    if x.labels != y.labels:
        raise LabelError(f"Label mismatch: {x.labels} vs {y.labels}")
    return float(np.max(np.abs(x.amps - y.amps)))


def is_close(x: StateVector, y: StateVector, tol: float = AMPLITUDE_TOLERANCE) -> bool:
    return x.labels == y.labels and max_abs_difference(x, y) <= tol
