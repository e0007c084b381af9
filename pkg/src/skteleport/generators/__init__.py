"""
SKTeleport generators.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from .protocol import (
    alice_measure,
    bob_stage1,
    bob_stage2,
    build_u2,
    outcome_distribution,
    plan_correction,
    prepare_joint,
    run_protocol,
    stage1_operator,
    ANCILLA,
)

__all__ = [
    "alice_measure",
    "bob_stage1",
    "bob_stage2",
    "build_u2",
    "outcome_distribution",
    "plan_correction",
    "prepare_joint",
    "run_protocol",
    "stage1_operator",
    "ANCILLA",
]
