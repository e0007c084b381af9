"""
Tests for SKTeleport data models.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧
"""

import numpy as np
import pytest
from pydantic import ValidationError

from skteleport.models import (
    ChannelSpec,
    CheckResult,
    CorrectionPlan,
    InputState,
    Operator,
    OperatorClass,
    OutcomeMessage,
    PauliKind,
    RunConfig,
    RunMode,
    StateVector,
    TransformationOperator,
)
from skteleport.models.channel import CHANNEL_LABELS, CHANNEL_SUPPORT
from skteleport.errors import LabelError


class TestStateVector:
    """Tests for the StateVector model."""

    def test_amplitudes_are_read_only(self):
        """Stored amplitudes cannot be modified in place."""
        state = StateVector(amps=[1, 0], labels=(0,))
        with pytest.raises(ValueError):
            state.amps[0] = 0.0

    def test_length_must_match_labels(self):
        """Amplitude count must be 2 to the label count."""
        with pytest.raises(ValidationError):
            StateVector(amps=[1, 0, 0], labels=(0, 1))

    def test_labels_must_be_distinct(self):
        """Repeated labels are rejected."""
        with pytest.raises(ValidationError):
            StateVector(amps=[1, 0, 0, 0], labels=(5, 5))

    def test_rejects_nan(self):
        """NaN amplitudes are rejected."""
        with pytest.raises(ValidationError):
            StateVector(amps=[np.nan, 0], labels=(0,))

    def test_rejects_more_than_eight_qubits(self):
        """Nine qubits exceed the register limit."""
        with pytest.raises(ValidationError):
            StateVector(amps=np.zeros(512), labels=tuple(range(9)))

    def test_normalized(self):
        """normalized() returns a new unit vector."""
        state = StateVector(amps=[3, 4], labels=("a",))
        unit = state.normalized()
        assert unit.is_normalized()
        assert unit.amps[1] == pytest.approx(0.8)
        assert not state.is_normalized()

    def test_normalize_zero_vector(self):
        """A zero vector cannot be normalized."""
        with pytest.raises(ZeroDivisionError):
            StateVector(amps=[0, 0], labels=(0,)).normalized()

    def test_amplitude_lookup_is_msb_first(self):
        """Bit patterns read the first label as most significant."""
        amps = np.zeros(4)
        amps[1] = 1.0
        state = StateVector(amps=amps, labels=(5, 6))
        assert state.amplitude("01") == 1.0
        assert state.amplitude("10") == 0.0

    def test_unknown_label(self):
        """Looking up a missing label raises LabelError."""
        state = StateVector(amps=[1, 0], labels=(0,))
        with pytest.raises(LabelError):
            state.index_of(7)


class TestOperator:
    """Tests for the Operator model."""

    def test_must_be_square(self):
        """Operators are square."""
        with pytest.raises(ValidationError):
            Operator(matrix=np.zeros((2, 4)))

    def test_must_be_power_of_two(self):
        """Operator dimension is a power of two."""
        with pytest.raises(ValidationError):
            Operator(matrix=np.eye(3))

    def test_dagger_and_matmul(self):
        """dagger() conjugate-transposes and @ multiplies."""
        op = Operator(matrix=[[0, 1j], [1, 0]])
        assert np.allclose(op.dagger().matrix, [[0, 1], [-1j, 0]])
        assert (op @ op.dagger()).dim == 2

    def test_num_qubits(self):
        assert Operator(matrix=np.eye(16)).num_qubits == 4


class TestPauliKind:
    """Tests for PauliKind ordering."""

    def test_bell_index_round_trip(self):
        """Bell index and Pauli kind map both ways."""
        for k in range(1, 5):
            assert PauliKind.from_bell_index(k).bell_index == k

    def test_table_order(self):
        """Bell indices 1..4 map to I, Z, X, Y_real."""
        assert [PauliKind.from_bell_index(k) for k in range(1, 5)] == [
            PauliKind.I,
            PauliKind.Z,
            PauliKind.X,
            PauliKind.Y_REAL,
        ]

    def test_bad_index(self):
        with pytest.raises(IndexError):
            PauliKind.from_bell_index(5)


class TestChannelSpec:
    """Tests for channel validation."""

    def test_equal_channel(self):
        """The equal channel has every coefficient 1/2."""
        channel = ChannelSpec.equal()
        assert channel.is_equal_weight()
        assert channel.min_coefficient == 0.5

    def test_rejects_unnormalized(self):
        """A non-unit norm is rejected."""
        with pytest.raises(ValidationError):
            ChannelSpec(alpha=0.5, beta=0.5, gamma=0.5, delta=0.6)

    def test_rejects_negative(self):
        """Negative coefficients are rejected."""
        with pytest.raises(ValidationError):
            ChannelSpec(alpha=-0.5, beta=0.5, gamma=0.5, delta=0.5)

    def test_renormalize(self):
        """from_values can rescale to unit norm."""
        channel = ChannelSpec.from_values([1, 1, 1, 1], renormalize=True)
        assert channel == ChannelSpec.equal()

    def test_wrong_length(self):
        """A channel has four coefficients."""
        with pytest.raises(ValueError):
            ChannelSpec.from_values([1, 0, 0])

    def test_to_state_support(self, generic_channel):
        """The channel state lives on the four listed basis indices."""
        state = generic_channel.to_state()
        assert state.labels == CHANNEL_LABELS
        assert state.is_normalized()
        for index, coef in zip(CHANNEL_SUPPORT, generic_channel.coefficients):
            assert state.amps[index] == pytest.approx(coef)
        assert state.amplitude("1001") == pytest.approx(generic_channel.beta)

    def test_random_respects_floor(self, rng):
        """Random channels keep every coefficient above the floor."""
        for _ in range(20):
            channel = ChannelSpec.random(rng, floor=0.05)
            assert channel.min_coefficient >= 0.05

    def test_frozen(self, generic_channel):
        """Channels are immutable."""
        with pytest.raises(ValidationError):
            generic_channel.alpha = 0.1


class TestInputState:
    """Tests for the teleported input."""

    def test_basis(self):
        """basis() sets a single amplitude."""
        state = InputState.basis("10")
        assert state.amplitudes == (0, 0, 1, 0)

    def test_rejects_unnormalized(self):
        """A non-unit norm is rejected."""
        with pytest.raises(ValidationError):
            InputState(a=1, b=1, c=0, d=0)

    def test_random_is_normalized(self, rng):
        """Random inputs have unit norm."""
        for _ in range(10):
            assert InputState.random(rng).to_state().is_normalized()

    def test_to_state_labels(self, sample_input):
        """The input can be placed on any two labels."""
        assert sample_input.to_state((5, 6)).labels == (5, 6)


class TestOutcomeMessage:
    """Tests for OutcomeMessage indexing."""

    def test_all_is_row_major(self):
        """Outcomes run (1,1), (1,2), ... (4,4)."""
        messages = OutcomeMessage.all()
        assert len(messages) == 16
        assert (messages[0].i, messages[0].j) == (1, 1)
        assert (messages[1].i, messages[1].j) == (1, 2)
        assert (messages[15].i, messages[15].j) == (4, 4)

    def test_index(self):
        """index is the row-major position."""
        for k, message in enumerate(OutcomeMessage.all()):
            assert message.index == k

    def test_str(self):
        """Outcomes print as (i,j)."""
        assert str(OutcomeMessage(i=3, j=2)) == "(3,2)"

    def test_bounds(self):
        """Indices run from 1 to 4."""
        with pytest.raises(ValidationError):
            OutcomeMessage(i=0, j=1)


class TestTransformationOperator:
    """Tests for σ operator validation."""

    def test_must_be_four_by_four(self):
        """σ operators are 4×4."""
        with pytest.raises(ValidationError):
            TransformationOperator(i=1, j=1, matrix=Operator(matrix=np.eye(2)))


class TestCorrectionPlan:
    """Tests for correction plan validation."""

    def _plan(self, **kwargs):
        fields = dict(
            message=OutcomeMessage(i=1, j=1),
            stage1=(PauliKind.I, PauliKind.I),
            a_coeffs=(1.0, 0.5, 0.5, 0.5),
            k=1.0,
        )
        fields.update(kwargs)
        return CorrectionPlan(**fields)

    def test_valid(self):
        """Default signs are all +1."""
        assert self._plan().signs == (1, 1, 1, 1)

    def test_a_coeff_above_one(self):
        """a above 1 is rejected."""
        with pytest.raises(ValidationError):
            self._plan(a_coeffs=(1.2, 0.5, 0.5, 0.5))

    def test_a_coeff_negative(self):
        with pytest.raises(ValidationError):
            self._plan(a_coeffs=(-0.1, 0.5, 0.5, 0.5))

    def test_signs(self):
        """Signs must be ±1."""
        with pytest.raises(ValidationError):
            self._plan(signs=(1, 0, 1, 1))

    def test_identity_dilation(self):
        """All a = 1 is the identity dilation."""
        assert self._plan(a_coeffs=(1.0, 1.0, 1.0, 1.0)).is_identity_dilation


class TestRunConfig:
    """Tests for RunConfig."""

    def test_sampled_needs_trials(self):
        """Sampled mode requires a trial count."""
        with pytest.raises(ValidationError):
            RunConfig(channel=(0.5, 0.5, 0.5, 0.5), mode=RunMode.RUN_SAMPLED, seed=1)

    def test_seed_range(self):
        """Seeds must fit in 64 bits."""
        with pytest.raises(ValidationError):
            RunConfig(channel=(0.5, 0.5, 0.5, 0.5), seed=2**64)

    def test_channel_spec(self):
        """channel_spec() builds the ChannelSpec; no input means None."""
        config = RunConfig(channel=(0.5, 0.5, 0.5, 0.5), seed=0)
        assert config.channel_spec() == ChannelSpec.equal()
        assert config.input_state() is None

    def test_rejects_bad_input(self):
        """A non-unit input is rejected."""
        with pytest.raises(ValidationError):
            RunConfig(channel=(0.5, 0.5, 0.5, 0.5), input=(1, 1, 0, 0), seed=0)


class TestOperatorClass:
    """Tests for OperatorClass."""

    def test_values(self):
        """Classification values are stable strings."""
        assert {c.value for c in OperatorClass} == {
            "unitary",
            "invertible_nonunitary",
            "singular",
        }


class TestCheckResult:
    """Tests for numeric and pass/fail check results."""

    def test_numeric(self):
        """Deviation plus tolerance makes a numeric check."""
        check = CheckResult(name="det", passed=True, deviation=1e-14, tolerance=1e-10)
        assert check.is_numeric

    def test_verdict(self):
        """A verdict carries neither deviation nor tolerance."""
        check = CheckResult(name="classification", passed=True, note="unitary")
        assert not check.is_numeric
        assert check.deviation is None

    def test_deviation_needs_tolerance(self):
        """Deviation and tolerance come as a pair."""
        with pytest.raises(ValidationError):
            CheckResult(name="det", passed=True, deviation=0.1)
        with pytest.raises(ValidationError):
            CheckResult(name="det", passed=True, tolerance=0.1)
