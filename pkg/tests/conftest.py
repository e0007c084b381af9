"""
Shared fixtures for SKTeleport tests.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧
"""

import math

import numpy as np
import pytest

from skteleport.models import ChannelSpec, InputState


@pytest.fixture
def generic_channel():
    """Unequal channel with min coefficient 0.4 and γ ≠ δ."""
    return ChannelSpec(alpha=0.6, beta=0.4, gamma=0.5, delta=math.sqrt(0.23))


@pytest.fixture
def equal_channel():
    return ChannelSpec.equal()


@pytest.fixture
def singular_channel():
    """α = δ = 0, so every transformation operator is singular."""
    return ChannelSpec(alpha=0.0, beta=0.6, gamma=0.8, delta=0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20080101)


@pytest.fixture
def sample_input():
    return InputState.from_values([0.5, 0.5j, -0.5, 0.5])
