"""
Two-ancilla CNOT path for SKTeleport.

The alternative correction route: Bob copies qubits 5 and 6 onto two
ancillas a, b with CNOTs and the register splits into four
system ⊗ ancilla branches that differ only by Z-type sign patterns.
This module rebuilds both sides of that expansion independently and
reports how far apart they are.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

import logging
from typing import Callable, List, Tuple

import numpy as np

from ..calculators import (
    apply,
    basis_state,
    bell_residual,
    cnot,
    ket,
    kron,
    max_abs_difference,
    pauli,
    sigma_extract,
    tensor,
)
from ..models import (
    Branch,
    BranchDecomposition,
    ChannelSpec,
    IdentityTerm,
    InputState,
    Operator,
    PauliKind,
    StateVector,
)

logger = logging.getLogger(__name__)

SYSTEM_LABELS = (5, 6)
ANCILLA_LABELS = ("a", "b")

# Sign pattern over |00⟩, |01⟩, |10⟩, |11⟩ shared by each branch's
# system and ancilla factors
BRANCH_SIGNS: Tuple[Tuple[int, int, int, int], ...] = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, 1, -1, -1),
    (1, -1, -1, 1),
)

# The Z-strings on (5, 6) whose eigenvalues are those sign patterns
_Z_STRINGS = (
    (PauliKind.I, PauliKind.I),
    (PauliKind.I, PauliKind.Z),
    (PauliKind.Z, PauliKind.I),
    (PauliKind.Z, PauliKind.Z),
)

# Ancilla strings that map |00⟩_ab onto |00⟩, |01⟩, |10⟩, |11⟩
_X_STRINGS = (
    (PauliKind.I, PauliKind.I),
    (PauliKind.I, PauliKind.X),
    (PauliKind.X, PauliKind.I),
    (PauliKind.X, PauliKind.X),
)

# Σ over the four branches counts every |x⟩|x⟩ term four times, and the
# (1,1) residual is ½ Σ c_x χ_x |x⟩|x⟩, so the branch sum carries ⅛.
BRANCH_SCALE = 0.125

# Commonly quoted prefactor of the branch sum; off by a factor 2
QUOTED_BRANCH_SCALE = 0.25

# σ¹¹ = 2·diag(α, β, γ, δ), so the right side carries ½ against σ¹¹
IDENTITY_SCALE = 0.5

# Prefactor quoted against diag(α, β, γ, δ), without σ¹¹'s factor 2
QUOTED_IDENTITY_SCALE = 0.25


def _register(residual56: StateVector) -> StateVector:
    return tensor(residual56, basis_state(2, "00", ANCILLA_LABELS))


def _copy_to_ancillas(state: StateVector) -> StateVector:
    gate = cnot()
    return apply(apply(state, gate, [5, "a"]), gate, [6, "b"])


def cnot_expand(input_state: InputState, channel: ChannelSpec) -> StateVector:
    """
    (CN)₅ₐ(CN)₆ᵦ applied to the (1,1) residual ⊗ |00⟩_ab.

    Returns:
        StateVector: Unnormalized state over (5, 6, a, b) with the
        norm of the (1,1) residual.
    """
    residual = bell_residual(input_state, channel, 1, 1)
    return _copy_to_ancillas(_register(residual))


def branch_decomposition(
    input_state: InputState,
    channel: ChannelSpec,
    scale: float = BRANCH_SCALE,
) -> BranchDecomposition:
    """Build the four signed system ⊗ ancilla branches directly."""
    chi = input_state.as_array()
    coeffs = channel.as_array()
    branches = []
    for signs in BRANCH_SIGNS:
        s = np.asarray(signs)
        branches.append(
            Branch(
                signs=signs,
                system_state=ket(s * chi, SYSTEM_LABELS),
                ancilla_state=ket(s * coeffs, ANCILLA_LABELS),
            )
        )
    return BranchDecomposition(branches=tuple(branches), scale=scale)


def branch_sum(decomposition: BranchDecomposition) -> StateVector:
    """scale · Σ system ⊗ ancilla over the branches."""
    total = np.zeros(16, dtype=np.complex128)
    for branch in decomposition.branches:
        total += tensor(branch.system_state, branch.ancilla_state).amps
    return ket(decomposition.scale * total, SYSTEM_LABELS + ANCILLA_LABELS)


def verify_branch_expansion(
    input_state: InputState,
    channel: ChannelSpec,
    scale: float = BRANCH_SCALE,
) -> float:
    """Max amplitude gap between the CNOT output and the branch sum at ``scale``."""
    lhs = cnot_expand(input_state, channel)
    rhs = branch_sum(branch_decomposition(input_state, channel, scale))
    gap = max_abs_difference(lhs, rhs)
    logger.debug("Branch expansion gap %.3g", gap)
    return gap


def cnot_identity_terms(channel: ChannelSpec) -> List[List[IdentityTerm]]:
    """
    Right-hand side of the two-CNOT identity: four Z-string groups on
    (5, 6), each with four signed ancilla terms.
    """
    coeffs = channel.coefficients
    return [
        [
            IdentityTerm(system=z_string, ancilla=x_string, coefficient=sign * c)
            for x_string, sign, c in zip(_X_STRINGS, signs, coeffs)
        ]
        for z_string, signs in zip(_Z_STRINGS, BRANCH_SIGNS)
    ]


def _pair(kinds: Tuple[PauliKind, PauliKind]) -> Operator:
    return kron(pauli(kinds[0]), pauli(kinds[1]))


def _sector_columns(action: Callable[[StateVector], StateVector]) -> np.ndarray:
    """16×4 block of an operator on (5, 6, a, b) acting on the |00⟩_ab sector."""
    columns = []
    for x in range(4):
        column = _register(basis_state(2, format(x, "02b"), SYSTEM_LABELS))
        columns.append(action(column).amps)
    return np.column_stack(columns)


def verify_cnot_identity(channel: ChannelSpec, scale: float = IDENTITY_SCALE) -> float:
    """
    Compare both sides of the two-CNOT identity on the |00⟩_ab sector.

    The left side is (CN)₅ₐ(CN)₆ᵦ · σ¹¹ with σ¹¹ taken from extraction;
    the right side is ``scale`` · Σ over the sixteen terms of
    ``cnot_identity_terms``.

    Returns:
        float: Largest entrywise difference of the two 16×4 blocks.
    """
    sigma11 = sigma_extract(channel, 1, 1).matrix
    lhs = _sector_columns(lambda s: _copy_to_ancillas(apply(s, sigma11, list(SYSTEM_LABELS))))

    terms = [term for group in cnot_identity_terms(channel) for term in group]

    def rhs_action(state: StateVector) -> StateVector:
        total = np.zeros(16, dtype=np.complex128)
        for term in terms:
            moved = apply(state, _pair(term.system), list(SYSTEM_LABELS))
            moved = apply(moved, _pair(term.ancilla), list(ANCILLA_LABELS))
            total += term.coefficient * moved.amps
        return ket(scale * total, state.labels)

    rhs = _sector_columns(rhs_action)
    return float(np.max(np.abs(lhs - rhs)))
