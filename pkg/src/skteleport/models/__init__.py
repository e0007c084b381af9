"""
SKTeleport data models.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

from .state import (
    AMPLITUDE_TOLERANCE,
    MAX_QUBITS,
    Label,
    QubitIndex,
    StateVector,
)
from .operator import Operator, OperatorClass, PauliKind
from .channel import ChannelSpec, InputState, TeleportRegime
from .expansion import (
    Branch,
    BranchDecomposition,
    DeterminantReport,
    ExtractionReport,
    Factorization,
    IdentityTerm,
    TransformationOperator,
)
from .protocol import (
    AliceMeasurement,
    CorrectionPlan,
    OutcomeMessage,
    OutcomeRecord,
    ProtocolMode,
    RandomDraw,
    Stage2Result,
    TeleportReport,
    ZeroProbabilityOutcome,
)
from .verification import CheckResult, VerificationSummary
from .run_config import OutputFormat, RunConfig, RunMode

__all__ = [
    # State vectors
    "AMPLITUDE_TOLERANCE",
    "MAX_QUBITS",
    "Label",
    "QubitIndex",
    "StateVector",
    # Operators
    "Operator",
    "OperatorClass",
    "PauliKind",
    # Channel
    "ChannelSpec",
    "InputState",
    "TeleportRegime",
    # Expansion
    "Branch",
    "BranchDecomposition",
    "DeterminantReport",
    "ExtractionReport",
    "Factorization",
    "IdentityTerm",
    "TransformationOperator",
    # Protocol
    "AliceMeasurement",
    "CorrectionPlan",
    "OutcomeMessage",
    "OutcomeRecord",
    "ProtocolMode",
    "RandomDraw",
    "Stage2Result",
    "TeleportReport",
    "ZeroProbabilityOutcome",
    # Verification
    "CheckResult",
    "VerificationSummary",
    # Run configuration
    "OutputFormat",
    "RunConfig",
    "RunMode",
]
