"""
SKTeleport analyzers.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from .refpath import (
    branch_decomposition,
    branch_sum,
    cnot_expand,
    cnot_identity_terms,
    verify_branch_expansion,
    verify_cnot_identity,
    BRANCH_SCALE,
    BRANCH_SIGNS,
    IDENTITY_SCALE,
    QUOTED_BRANCH_SCALE,
    QUOTED_IDENTITY_SCALE,
)
from .verification import run_verification, CHECK_TOLERANCES

__all__ = [
    "branch_decomposition",
    "branch_sum",
    "cnot_expand",
    "cnot_identity_terms",
    "verify_branch_expansion",
    "verify_cnot_identity",
    "BRANCH_SCALE",
    "BRANCH_SIGNS",
    "IDENTITY_SCALE",
    "QUOTED_BRANCH_SCALE",
    "QUOTED_IDENTITY_SCALE",
    "run_verification",
    "CHECK_TOLERANCES",
]
