"""
SKTeleport - Two-Qubit Teleportation Toolkit

"Every Bell outcome leaves an operator behind"

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

__version__ = "1.0.0"
__author__ = "smilinTux"
__license__ = "AGPL-3.0"

from .errors import SKTeleportError
from .models import (
    ChannelSpec,
    InputState,
    ProtocolMode,
    StateVector,
    TeleportReport,
)

from .calculators import sigma_table, invertibility_check
from .generators import run_protocol
from .analyzers import run_verification

__all__ = [
    "__version__",
    "__author__",
    "__license__",
    "SKTeleportError",
    # Models
    "ChannelSpec",
    "InputState",
    "ProtocolMode",
    "StateVector",
    "TeleportReport",
    # Calculators
    "sigma_table",
    "invertibility_check",
    # Generators
    "run_protocol",
    # Analyzers
    "run_verification",
]
