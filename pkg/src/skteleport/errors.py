"""
Exception hierarchy for SKTeleport.

Every failure the toolkit raises on purpose derives from SKTeleportError,
so the CLI can turn them into a clean exit code. Most also derive from
ValueError so callers that only know the standard library still work.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""


class SKTeleportError(Exception):
    """Base class for all SKTeleport errors."""


class SizeError(SKTeleportError, ValueError):
    """Register or operator size outside the supported range."""


class LabelError(SKTeleportError, ValueError):
    """Unknown, duplicate or overlapping qubit label."""


class ShapeError(SKTeleportError, ValueError):
    """Operator or pattern dimension does not match its targets."""


class NormalizationError(SKTeleportError, ValueError):
    """A normalized state was required but not supplied."""


class SingularError(SKTeleportError, ArithmeticError):
    """Operator is singular within tolerance and cannot be inverted."""


class FactorizationError(SKTeleportError, ArithmeticError):
    """A transformation operator did not split into Pauli pair × diagonal."""
