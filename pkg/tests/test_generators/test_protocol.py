"""
Tests for the teleportation protocol generator.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from skteleport.calculators import (
    apply,
    fidelity,
    invertibility_check,
    is_unitary,
    off_diagonal_mass,
    sigma_extract,
)
from skteleport.errors import NormalizationError, SingularError
from skteleport.generators import (
    alice_measure,
    bob_stage1,
    bob_stage2,
    build_u2,
    outcome_distribution,
    plan_correction,
    prepare_joint,
    run_protocol,
    stage1_operator,
)
from skteleport.models import (
    AliceMeasurement,
    ChannelSpec,
    InputState,
    OutcomeMessage,
    PauliKind,
    ProtocolMode,
    RandomDraw,
    TeleportRegime,
    ZeroProbabilityOutcome,
)


def tiny_delta_channel(delta):
    """α = β = γ with δ as given, normalized."""
    a = math.sqrt((1 - delta**2) / 3)
    return ChannelSpec(alpha=a, beta=a, gamma=a, delta=delta)


class TestAliceMeasure:
    """Tests for Alice's Bell measurements."""

    def test_joint_labels(self, sample_input, generic_channel):
        """The joint state runs over particles 1..6 and is normalized."""
        joint = prepare_joint(sample_input, generic_channel)
        assert joint.labels == (1, 2, 3, 4, 5, 6)
        assert joint.is_normalized()

    def test_distribution_sums_to_one(self, sample_input, generic_channel):
        """Sixteen outcome probabilities summing to one."""
        probs = outcome_distribution(prepare_joint(sample_input, generic_channel))
        assert probs.shape == (16,)
        assert probs.sum() == pytest.approx(1.0, abs=1e-12)

    def test_equal_channel_is_uniform(self, sample_input, equal_channel):
        """Equal weights make every outcome equally likely."""
        probs = outcome_distribution(prepare_joint(sample_input, equal_channel))
        assert np.allclose(probs, 1 / 16)

    def test_explicit_outcome(self, sample_input, generic_channel):
        """A chosen outcome leaves its unnormalized residual on (5, 6)."""
        joint = prepare_joint(sample_input, generic_channel)
        measured = alice_measure(joint, OutcomeMessage(i=2, j=3))
        assert isinstance(measured, AliceMeasurement)
        assert measured.residual56.labels == (5, 6)
        assert measured.probability == pytest.approx(measured.residual56.norm_squared)

    def test_zero_probability(self, singular_channel):
        """Choosing an impossible outcome returns a value, not an error."""
        joint = prepare_joint(InputState.basis("00"), singular_channel)
        measured = alice_measure(joint, OutcomeMessage(i=1, j=1))
        assert isinstance(measured, ZeroProbabilityOutcome)
        assert measured.probability == pytest.approx(0.0)

    def test_random_draw_is_reproducible(self, sample_input, generic_channel):
        """The same seed draws the same outcome."""
        joint = prepare_joint(sample_input, generic_channel)
        first = alice_measure(joint, RandomDraw(seed=11))
        second = alice_measure(joint, RandomDraw(seed=11))
        assert first.message == second.message

    def test_generator_choice(self, sample_input, generic_channel, rng):
        """A numpy Generator is accepted as the source of randomness."""
        joint = prepare_joint(sample_input, generic_channel)
        assert isinstance(alice_measure(joint, rng), AliceMeasurement)


class TestPlanCorrection:
    """Tests for Bob's correction plan."""

    def test_reference_channel(self, generic_channel):
        """k = 0.8 and a = k/|d| on the (1,1) outcome."""
        plan = plan_correction(OutcomeMessage(i=1, j=1), generic_channel)
        assert plan.k == pytest.approx(0.8)
        assert plan.stage1 == (PauliKind.I, PauliKind.I)
        assert plan.signs == (1, 1, 1, 1)
        expected = (2 / 3, 1.0, 0.8, 0.8 / (2 * math.sqrt(0.23)))
        assert plan.a_coeffs == pytest.approx(expected)

    def test_max_a_is_one(self, rng):
        """The smallest diagonal entry always gets a = 1."""
        for _ in range(10):
            channel = ChannelSpec.random(rng, floor=0.05)
            for message in OutcomeMessage.all():
                plan = plan_correction(message, channel)
                assert max(plan.a_coeffs) == pytest.approx(1.0)
                assert plan.k == pytest.approx(2 * channel.min_coefficient)

    def test_singular(self, singular_channel):
        with pytest.raises(SingularError):
            plan_correction(OutcomeMessage(i=1, j=1), singular_channel)

    def test_agrees_with_regime_above_threshold(self):
        """A channel classified probabilistic always gets a plan."""
        channel = tiny_delta_channel(4e-13)
        assert invertibility_check(channel) is TeleportRegime.PROBABILISTIC
        for message in OutcomeMessage.all():
            plan = plan_correction(message, channel)
            assert plan.k == pytest.approx(8e-13)

    def test_agrees_with_regime_below_threshold(self):
        """A channel classified impossible never gets a plan."""
        channel = tiny_delta_channel(1e-14)
        assert invertibility_check(channel) is TeleportRegime.IMPOSSIBLE
        with pytest.raises(SingularError):
            plan_correction(OutcomeMessage(i=1, j=1), channel)

    def test_stage1_leaves_diagonal(self, generic_channel):
        """Stage 1 turns every σ into a positive diagonal."""
        for message in OutcomeMessage.all():
            sigma = sigma_extract(generic_channel, message.i, message.j)
            plan = plan_correction(message, generic_channel, sigma)
            product = stage1_operator(plan) @ sigma.matrix
            assert off_diagonal_mass(product) <= 1e-12
            assert np.all(np.diag(product.matrix).real > 0)


class TestBuildU2:
    """Tests for the collective unitary."""

    def test_unitary_for_plans(self, generic_channel):
        """U₂ is an 8×8 unitary for every outcome's plan."""
        for message in OutcomeMessage.all():
            u2 = build_u2(plan_correction(message, generic_channel))
            assert u2.dim == 8
            assert is_unitary(u2, 1e-12)

    def test_all_ones(self):
        """a = 1 everywhere gives diag(I, -I)."""
        u2 = build_u2((1.0, 1.0, 1.0, 1.0))
        assert np.allclose(u2.matrix, np.diag([1, 1, 1, 1, -1, -1, -1, -1]))

    def test_all_zeros(self):
        """a = 0 everywhere swaps the ancilla blocks."""
        u2 = build_u2((0.0, 0.0, 0.0, 0.0))
        swap = np.block([[np.zeros((4, 4)), np.eye(4)], [np.eye(4), np.zeros((4, 4))]])
        assert np.allclose(u2.matrix, swap)

    def test_near_zero_coefficients(self):
        assert is_unitary(build_u2((1.0, 1e-9, 0.5, 1e-15)), 1e-12)

    def test_rejects_out_of_range(self):
        """Coefficients outside [0, 1] fail validation."""
        with pytest.raises(ValidationError):
            build_u2((1.2, 0.5, 0.5, 0.5))
        with pytest.raises(ValidationError):
            build_u2((-0.1, 0.5, 0.5, 0.5))


class TestBobStages:
    """Tests for the two correction stages."""

    def _stage1(self, input_state, channel, message):
        joint = prepare_joint(input_state, channel)
        measured = alice_measure(joint, message)
        plan = plan_correction(message, channel)
        return bob_stage1(measured.residual56, plan).normalized(), plan

    def test_success_restores_input(self, sample_input, generic_channel):
        """Ancilla 0 leaves the input on (5, 6) for every outcome."""
        target = sample_input.to_state((5, 6))
        for message in OutcomeMessage.all():
            state56, plan = self._stage1(sample_input, generic_channel, message)
            result = bob_stage2(state56, plan, ancilla_outcome=0)
            assert result.success
            assert fidelity(result.final56, target) == pytest.approx(1.0, abs=1e-9)
            assert 0.0 < result.p_success_given_outcome <= 1.0

    def test_failure_branch(self, sample_input, generic_channel):
        """Ancilla 1 is reported as failure with a normalized state."""
        state56, plan = self._stage1(sample_input, generic_channel, OutcomeMessage(i=3, j=4))
        result = bob_stage2(state56, plan, ancilla_outcome=1)
        assert not result.success
        assert result.ancilla_outcome == 1
        assert result.final56.is_normalized()

    def test_numpy_integer_outcome(self, sample_input, generic_channel):
        state56, plan = self._stage1(sample_input, generic_channel, OutcomeMessage(i=1, j=1))
        assert bob_stage2(state56, plan, ancilla_outcome=np.int64(0)).success

    def test_sampled_ancilla(self, sample_input, generic_channel):
        """A seeded draw picks the same ancilla outcome twice."""
        state56, plan = self._stage1(sample_input, generic_channel, OutcomeMessage(i=1, j=2))
        first = bob_stage2(state56, plan, RandomDraw(seed=3))
        second = bob_stage2(state56, plan, RandomDraw(seed=3))
        assert first.ancilla_outcome == second.ancilla_outcome

    def test_tiny_success_branch_is_normalized(self, sample_input):
        """Success branches far below 1e-12 still come back normalized."""
        channel = tiny_delta_channel(4e-13)
        state56, plan = self._stage1(sample_input, channel, OutcomeMessage(i=1, j=1))
        result = bob_stage2(state56, plan, ancilla_outcome=0)
        assert result.p_success_given_outcome < 1e-12
        assert result.final56.is_normalized()

    def test_requires_normalized(self, sample_input, generic_channel):
        """Stage 2 refuses the raw residual."""
        joint = prepare_joint(sample_input, generic_channel)
        measured = alice_measure(joint, OutcomeMessage(i=1, j=1))
        plan = plan_correction(OutcomeMessage(i=1, j=1), generic_channel)
        with pytest.raises(NormalizationError):
            bob_stage2(measured.residual56, plan)

    def test_bad_ancilla_outcome(self, sample_input, generic_channel):
        state56, plan = self._stage1(sample_input, generic_channel, OutcomeMessage(i=1, j=1))
        with pytest.raises(ValueError):
            bob_stage2(state56, plan, ancilla_outcome=2)

    def test_equal_channel_always_succeeds(self, sample_input, equal_channel):
        """Equal weights need no probabilistic rescaling."""
        for message in OutcomeMessage.all():
            state56, plan = self._stage1(sample_input, equal_channel, message)
            result = bob_stage2(state56, plan)
            assert result.p_success_given_outcome == pytest.approx(1.0)

    def test_stage1_matches_operator(self, sample_input, generic_channel):
        """bob_stage1 is apply() with the stage-1 operator."""
        message = OutcomeMessage(i=4, j=2)
        joint = prepare_joint(sample_input, generic_channel)
        measured = alice_measure(joint, message)
        plan = plan_correction(message, generic_channel)
        direct = apply(measured.residual56, stage1_operator(plan), [5, 6])
        assert np.allclose(bob_stage1(measured.residual56, plan).amps, direct.amps)


class TestRunProtocolExhaustive:
    """Tests for exact success accounting."""

    def test_equal_channel_is_deterministic(self, sample_input, equal_channel):
        """Every outcome has probability 1/16 and always succeeds."""
        report = run_protocol(sample_input, equal_channel)
        assert report.regime is TeleportRegime.DETERMINISTIC
        assert report.total_success == pytest.approx(1.0, abs=1e-12)
        for record in report.per_outcome:
            assert record.probability == pytest.approx(1 / 16, abs=1e-12)
            assert record.success_given_outcome == pytest.approx(1.0, abs=1e-12)
        assert report.fidelity_on_success == pytest.approx(1.0, abs=1e-9)

    def test_reference_channel(self, sample_input, generic_channel):
        """Total success is 4·0.4² = 0.64."""
        report = run_protocol(sample_input, generic_channel)
        assert report.regime is TeleportRegime.PROBABILISTIC
        assert report.total_success == pytest.approx(0.64, abs=1e-12)
        assert report.fidelity_on_success == pytest.approx(1.0, abs=1e-9)
        assert report.total_probability == pytest.approx(1.0, abs=1e-12)
        assert report.trials is None

    @pytest.mark.slow
    def test_four_min_squared(self, rng):
        """Total success equals 4·min² on a hundred random channels."""
        for _ in range(100):
            channel = ChannelSpec.random(rng, floor=0.05)
            report = run_protocol(InputState.random(rng), channel)
            expected = 4 * channel.min_coefficient**2
            assert report.total_success == pytest.approx(expected, abs=1e-9)
            assert report.fidelity_on_success >= 1 - 1e-9

    def test_independent_of_input(self, generic_channel, rng):
        """The success probability does not depend on the input."""
        totals = [
            run_protocol(InputState.random(rng), generic_channel).total_success
            for _ in range(10)
        ]
        assert max(totals) - min(totals) <= 1e-12

    def test_singular_channel(self, sample_input, singular_channel):
        """Singular channels report impossible instead of raising."""
        report = run_protocol(sample_input, singular_channel)
        assert report.regime is TeleportRegime.IMPOSSIBLE
        assert report.total_success == 0.0
        assert report.fidelity_on_success is None
        assert report.total_probability == pytest.approx(1.0, abs=1e-12)

    def test_tiny_coefficient_completes(self):
        """A coefficient just above the singularity threshold still runs."""
        delta = 4e-13
        report = run_protocol(InputState.basis("00"), tiny_delta_channel(delta))
        assert report.regime is TeleportRegime.PROBABILISTIC
        assert report.total_success == pytest.approx(4 * delta**2, rel=1e-6)
        assert report.fidelity_on_success >= 1 - 1e-9

    def test_coefficient_below_threshold_is_impossible(self):
        """Below the threshold the same channel family reports impossible."""
        report = run_protocol(InputState.basis("00"), tiny_delta_channel(1e-14))
        assert report.regime is TeleportRegime.IMPOSSIBLE
        assert report.total_success == 0.0


class TestRunProtocolSampled:
    """Tests for seeded Monte-Carlo runs."""

    @pytest.mark.slow
    def test_close_to_exact(self, sample_input, generic_channel):
        """1e5 trials land within three binomial standard deviations of 0.64."""
        trials = 100_000
        report = run_protocol(
            sample_input, generic_channel, mode=ProtocolMode.SAMPLED, seed=42, trials=trials
        )
        assert report.trials == trials
        assert report.seed == 42
        bound = 3 * math.sqrt(0.64 * (1 - 0.64) / trials)
        assert abs(report.total_success - 0.64) <= bound
        assert sum(r.count for r in report.per_outcome) == trials

    def test_reproducible(self, sample_input, generic_channel):
        """The same seed gives an identical report."""
        runs = [
            run_protocol(
                sample_input, generic_channel, mode=ProtocolMode.SAMPLED, seed=9, trials=5000
            )
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_seed_changes_result(self, sample_input, generic_channel):
        """Different seeds give different outcome counts."""
        counts = [
            [
                r.count
                for r in run_protocol(
                    sample_input, generic_channel, mode=ProtocolMode.SAMPLED, seed=s, trials=5000
                ).per_outcome
            ]
            for s in (1, 2)
        ]
        assert counts[0] != counts[1]

    def test_partial_chunk(self, sample_input, equal_channel):
        """A trial count that is not a multiple of the chunk size is honoured."""
        report = run_protocol(
            sample_input, equal_channel, mode=ProtocolMode.SAMPLED, seed=1, trials=12_345
        )
        assert sum(r.count for r in report.per_outcome) == 12_345
        assert report.total_success == 1.0
        assert report.standard_error == 0.0

    def test_rejects_zero_trials(self, sample_input, generic_channel):
        with pytest.raises(ValueError):
            run_protocol(sample_input, generic_channel, mode=ProtocolMode.SAMPLED, trials=0)
