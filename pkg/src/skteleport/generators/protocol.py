"""
Teleportation protocol generator for SKTeleport.

Orchestrates the calculators into the full two-qubit teleportation:
joint-state preparation, Alice's two Bell measurements, Bob's Pauli
correction and the ancilla-assisted collective unitary, with success
accounting over every outcome or over seeded Monte-Carlo trials.

Copyright (C) 2025 smilinTux
SK = staycuriousANDkeepsmilin 🐧

This file is part of SKTeleport.
Licensed under AGPL-3.0. See LICENSE for details.
"""

import logging
from typing import Annotated, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import Field, TypeAdapter

from ..calculators import (
    apply,
    basis_state,
    bell_state,
    classify,
    diagonal,
    factorize,
    fidelity,
    inverse,
    is_unitary,
    pauli_pair,
    project,
    regime_of,
    sigma_extract,
    sigma_table,
    tensor,
)
from ..errors import NormalizationError, SingularError, SKTeleportError
from ..models import (
    AliceMeasurement,
    ChannelSpec,
    CorrectionPlan,
    InputState,
    Operator,
    OperatorClass,
    OutcomeMessage,
    OutcomeRecord,
    ProtocolMode,
    RandomDraw,
    Stage2Result,
    StateVector,
    TeleportRegime,
    TeleportReport,
    TransformationOperator,
    ZeroProbabilityOutcome,
)
from ..models.operator import PauliKind
from ..models.protocol import PROBABILITY_TOLERANCE
from ..settings import get_settings

logger = logging.getLogger(__name__)

ANCILLA = "a"

# Stricter than the general unitarity threshold
U2_TOLERANCE = 1e-12

Choice = Union[OutcomeMessage, RandomDraw, np.random.Generator]
AncillaChoice = Union[int, RandomDraw, np.random.Generator]

_UNIT = Annotated[float, Field(ge=0.0, le=1.0)]
_A_COEFFS = TypeAdapter(Tuple[_UNIT, _UNIT, _UNIT, _UNIT])


def _rng(choice: Union[RandomDraw, np.random.Generator]) -> np.random.Generator:
    if isinstance(choice, np.random.Generator):
        return choice
    return np.random.default_rng(choice.seed)


def prepare_joint(input_state: InputState, channel: ChannelSpec) -> StateVector:
    """|χ⟩₁₂ ⊗ |φ⟩₃₄₅₆ over labels (1, 2, 3, 4, 5, 6)."""
    return tensor(input_state.to_state((1, 2)), channel.to_state())


def _measure(joint: StateVector, message: OutcomeMessage) -> Tuple[StateVector, float]:
    after_14, _ = project(joint, bell_state(message.i, (1, 4)), [1, 4])
    return project(after_14, bell_state(message.j, (2, 3)), [2, 3])


def outcome_distribution(joint: StateVector) -> np.ndarray:
    """Born probabilities of the sixteen outcomes, (1,1) first."""
    return np.array([_measure(joint, m)[1] for m in OutcomeMessage.all()])


def alice_measure(
    joint: StateVector,
    choice: Choice,
) -> Union[AliceMeasurement, ZeroProbabilityOutcome]:
    """
    Alice's Bell measurements on (1, 4) and (2, 3).

    Args:
        joint: Six-qubit state from prepare_joint.
        choice: An explicit outcome, or a RandomDraw / Generator to sample
            one from the exact sixteen-way distribution.

    Returns:
        AliceMeasurement with the unnormalized (5, 6) residual, or
        ZeroProbabilityOutcome when an explicit outcome cannot occur.
    """
    if isinstance(choice, OutcomeMessage):
        message = choice
    else:
        probs = outcome_distribution(joint)
        message = OutcomeMessage.from_index(int(_rng(choice).choice(16, p=probs / probs.sum())))

    residual, probability = _measure(joint, message)
    if probability <= PROBABILITY_TOLERANCE:
        logger.debug("Outcome %s has probability %.3g", message, probability)
        return ZeroProbabilityOutcome(message=message, probability=probability)
    return AliceMeasurement(message=message, residual56=residual, probability=probability)


def plan_correction(
    message: OutcomeMessage,
    channel: ChannelSpec,
    sigma: Optional[TransformationOperator] = None,
) -> CorrectionPlan:
    """
    Build Bob's two-stage correction for one outcome.

    With d the diagonal of A = (P_i ⊗ P_j)⁻¹ σⁱʲ, k = min |d_l| and
    a_l = k / |d_l|, so the largest a_l is exactly 1.

    Args:
        message: Alice's outcome.
        channel: Shared resource.
        sigma: Pre-extracted σⁱʲ, extracted on demand when omitted.

    Returns:
        CorrectionPlan: Pauli pair, sign fix, A₁ diagonal and k.

    Raises:
        SingularError: If σⁱʲ is singular, by the same |det| test the
            regime classification uses.
    """
    if sigma is None:
        sigma = sigma_extract(channel, message.i, message.j)
    if classify(sigma.matrix) is OperatorClass.SINGULAR:
        raise SingularError(f"Outcome {message} has a singular transformation operator")
    factors = factorize(sigma)
    d = np.diag(factors.diag.matrix)
    magnitudes = np.abs(d)

    k = float(magnitudes.min())
    signs = tuple(1 if x.real >= 0 else -1 for x in d)
    a_coeffs = tuple(min(1.0, k / float(m)) for m in magnitudes)
    return CorrectionPlan(
        message=message,
        stage1=(factors.pauli_i, factors.pauli_j),
        signs=signs,
        a_coeffs=a_coeffs,
        k=k,
    )


def stage1_operator(plan: CorrectionPlan) -> Operator:
    """S · (P_i ⊗ P_j)⁻¹, which leaves |A|·|χ⟩ on (5, 6)."""
    first, second = plan.stage1
    correction = inverse(pauli_pair(PauliKind(first).bell_index, PauliKind(second).bell_index))
    return diagonal(plan.signs) @ correction


def bob_stage1(residual56: StateVector, plan: CorrectionPlan) -> StateVector:
    """Apply the stage-1 Pauli correction to qubits 5 and 6."""
    return apply(residual56, stage1_operator(plan), [5, 6])


def build_u2(plan: Union[CorrectionPlan, Sequence[float]]) -> Operator:
    """
    Collective unitary [[A₁, A₂], [A₂, −A₁]] on (ancilla, 5, 6).

    The ancilla is the block index, so the operator is applied with
    targets (a, 5, 6) while the register keeps the ancilla last.

    Args:
        plan: A correction plan, or four a_l values in [0, 1].

    Returns:
        Operator: 8×8 unitary.

    Raises:
        pydantic.ValidationError: If any a_l is outside [0, 1].
        SKTeleportError: If the result is not unitary to 1e-12.
    """
    a = plan.a_coeffs if isinstance(plan, CorrectionPlan) else _A_COEFFS.validate_python(plan)
    a = np.asarray(a, dtype=np.float64)
    a1 = np.diag(a)
    a2 = np.diag(np.sqrt(np.clip(1.0 - a**2, 0.0, None)))
    u2 = Operator(matrix=np.block([[a1, a2], [a2, -a1]]))
    if not is_unitary(u2, U2_TOLERANCE):
        raise SKTeleportError(f"Collective unitary for a = {tuple(a)} is not unitary")
    return u2


def bob_stage2(
    state56: StateVector,
    plan: CorrectionPlan,
    ancilla_outcome: AncillaChoice = 0,
) -> Stage2Result:
    """
    Adjoin |0⟩_a, apply U₂ and read the ancilla.

    Args:
        state56: Normalized stage-1 output on (5, 6).
        plan: Correction plan for the outcome.
        ancilla_outcome: 0 or 1 to force a branch, or a RandomDraw /
            Generator to sample it.

    Returns:
        Stage2Result: Success flag, post-measurement (5, 6) state and
        P(ancilla = 0) = ‖A₁ψ‖².

    Raises:
        NormalizationError: If state56 is not normalized.
    """
    if not state56.is_normalized():
        raise NormalizationError(f"Stage 2 needs a normalized state (norm² {state56.norm_squared!r})")

    register = tensor(state56, basis_state(1, "0", [ANCILLA]))
    evolved = apply(register, build_u2(plan), [ANCILLA, 5, 6])
    success_state, p_success = project(evolved, basis_state(1, "0", [ANCILLA]), [ANCILLA])
    p_success = min(p_success, 1.0)

    if isinstance(ancilla_outcome, (int, np.integer)):
        outcome = int(ancilla_outcome)
    else:
        outcome = 0 if _rng(ancilla_outcome).random() < p_success else 1
    if outcome not in (0, 1):
        raise ValueError(f"Ancilla outcome must be 0 or 1, got {outcome}")

    if outcome == 0:
        final, probability = success_state, p_success
    else:
        final, probability = project(evolved, basis_state(1, "1", [ANCILLA]), [ANCILLA])
    if probability > 0.0:
        final = final.normalized()

    return Stage2Result(
        success=outcome == 0,
        ancilla_outcome=outcome,
        final56=final,
        p_success_given_outcome=p_success,
    )


def _branches(
    input_state: InputState,
    channel: ChannelSpec,
    table: List[TransformationOperator],
    regime: TeleportRegime,
) -> Tuple[np.ndarray, np.ndarray, List[Optional[float]]]:
    """Exact (probability, p_success, fidelity) for each of the 16 outcomes."""
    joint = prepare_joint(input_state, channel)
    target = input_state.to_state((5, 6))
    probs = np.zeros(16)
    p_success = np.zeros(16)
    fidelities: List[Optional[float]] = [None] * 16

    for message, sigma in zip(OutcomeMessage.all(), table):
        measured = alice_measure(joint, message)
        probs[message.index] = measured.probability
        if regime is TeleportRegime.IMPOSSIBLE or isinstance(measured, ZeroProbabilityOutcome):
            continue
        plan = plan_correction(message, channel, sigma)
        corrected = bob_stage1(measured.residual56, plan).normalized()
        result = bob_stage2(corrected, plan, ancilla_outcome=0)
        p_success[message.index] = result.p_success_given_outcome
        fidelities[message.index] = fidelity(result.final56, target)
        logger.debug(
            "Outcome %s: p=%.6g p_success=%.6g", message, measured.probability, p_success[message.index]
        )
    return probs, p_success, fidelities


def _min_fidelity(fidelities: Sequence[Optional[float]]) -> Optional[float]:
    present = [f for f in fidelities if f is not None]
    return min(present) if present else None


def run_protocol(
    input_state: InputState,
    channel: ChannelSpec,
    mode: ProtocolMode = ProtocolMode.EXHAUSTIVE,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> TeleportReport:
    """
    Teleport ``input_state`` through ``channel``.

    Exhaustive mode enumerates all sixteen outcomes with their exact
    probabilities. Sampled mode draws trials in chunks, each chunk from
    its own generator spawned off the master seed.

    Args:
        input_state: Two-qubit state to send.
        channel: Shared resource.
        mode: Exhaustive or sampled.
        seed: Master seed (sampled mode; default from settings).
        trials: Number of trials (sampled mode; default from settings).

    Returns:
        TeleportReport: Per-outcome table and totals. Singular channels
        give regime "impossible" and total_success 0.
    """
    table = sigma_table(channel)
    regime = regime_of(table)
    probs, p_success, fidelities = _branches(input_state, channel, table, regime)

    if mode is ProtocolMode.EXHAUSTIVE:
        records = [
            OutcomeRecord(
                message=m,
                probability=float(probs[m.index]),
                success_given_outcome=float(p_success[m.index]),
                fidelity=fidelities[m.index],
            )
            for m in OutcomeMessage.all()
        ]
        return TeleportReport(
            channel=channel,
            input_amplitudes=input_state.amplitudes,
            regime=regime,
            mode=mode,
            per_outcome=records,
            total_success=min(1.0, float(np.dot(probs, p_success))),
            fidelity_on_success=_min_fidelity(fidelities),
        )

    settings = get_settings()
    seed = settings.default_seed if seed is None else seed
    trials = settings.sampling.default_trials if trials is None else trials
    if trials < 1:
        raise ValueError(f"trials must be ≥ 1, got {trials}")
    chunk = settings.sampling.chunk_size
    sizes = [chunk] * (trials // chunk) + ([trials % chunk] if trials % chunk else [])

    counts = np.zeros(16, dtype=np.int64)
    wins = np.zeros(16, dtype=np.int64)
    distribution = probs / probs.sum()
    for size, child in zip(sizes, np.random.SeedSequence(seed).spawn(len(sizes))):
        rng = np.random.default_rng(child)
        outcomes = rng.choice(16, size=size, p=distribution)
        succeeded = rng.random(size) < p_success[outcomes]
        counts += np.bincount(outcomes, minlength=16)
        wins += np.bincount(outcomes[succeeded], minlength=16)
    logger.debug("Sampled %d trials in %d chunks (seed %d)", trials, len(sizes), seed)

    records = [
        OutcomeRecord(
            message=m,
            probability=counts[m.index] / trials,
            success_given_outcome=wins[m.index] / counts[m.index] if counts[m.index] else 0.0,
            fidelity=fidelities[m.index] if wins[m.index] else None,
            count=int(counts[m.index]),
        )
        for m in OutcomeMessage.all()
    ]
    total = float(wins.sum()) / trials
    return TeleportReport(
        channel=channel,
        input_amplitudes=input_state.amplitudes,
        regime=regime,
        mode=mode,
        per_outcome=records,
        total_success=total,
        fidelity_on_success=_min_fidelity([r.fidelity for r in records]),
        trials=trials,
        seed=seed,
        standard_error=float(np.sqrt(total * (1.0 - total) / trials)),
    )
