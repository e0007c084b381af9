"""
SKTeleport calculators.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from .statevec import (
    apply,
    basis_state,
    fidelity,
    inner,
    is_close,
    ket,
    max_abs_difference,
    project,
    reorder,
    tensor,
)

from .operators import (
    bell_state,
    classify,
    cnot,
    determinant,
    diagonal,
    identity,
    inverse,
    is_monomial,
    is_unitary,
    kron,
    max_entry_difference,
    off_diagonal_mass,
    pauli,
    unitarity_deviation,
    SINGULAR_TOLERANCE,
    UNITARY_TOLERANCE,
)

from .expansion import (
    bell_residual,
    closed_form,
    closed_form_deviation,
    completeness_check,
    determinant_report,
    extraction_report,
    factorize,
    invertibility_check,
    pauli_pair,
    printed_discrepancies,
    regime_of,
    sigma_extract,
    sigma_table,
    PRINTED_SIGMA_VARIANTS,
    RESIDUAL_SCALE,
    SIGMA_TEMPLATES,
)

__all__ = [
    # State vectors
    "apply",
    "basis_state",
    "fidelity",
    "inner",
    "is_close",
    "ket",
    "max_abs_difference",
    "project",
    "reorder",
    "tensor",
    # Operators
    "bell_state",
    "classify",
    "cnot",
    "determinant",
    "diagonal",
    "identity",
    "inverse",
    "is_monomial",
    "is_unitary",
    "kron",
    "max_entry_difference",
    "off_diagonal_mass",
    "pauli",
    "unitarity_deviation",
    "SINGULAR_TOLERANCE",
    "UNITARY_TOLERANCE",
    # Bell expansion
    "bell_residual",
    "closed_form",
    "closed_form_deviation",
    "completeness_check",
    "determinant_report",
    "extraction_report",
    "factorize",
    "invertibility_check",
    "pauli_pair",
    "printed_discrepancies",
    "regime_of",
    "sigma_extract",
    "sigma_table",
    "PRINTED_SIGMA_VARIANTS",
    "RESIDUAL_SCALE",
    "SIGMA_TEMPLATES",
]
