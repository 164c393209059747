"""
Two-stage projective measurement simulation.

Projectors are computed exactly and converted to floats only here. Only the 'yes'
outcome is followed in the experiments; `measure_complement` gives the 'no' branch.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from constants.tolerances import TOLERANCES
from desargues.engine import DesarguesConfig, derive_config, experiment_projectors
from lattices.subspace_lattice import Projector
from numeric.float_matrix import FloatMatrix
from utils.exceptions import InputError, ShapeMismatchError, ZeroProbabilityOutcome
from utils.logger import logger

ProjectorLike = Union[Projector, FloatMatrix]


class StateVector:
    """Normalized pure state of C^d."""

    __slots__ = ("ambient_dim", "amplitudes")

    def __init__(self, amplitudes: Sequence[complex]):
        array = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(array)):
            raise InputError("State amplitudes must be finite")
        norm = float(np.linalg.norm(array))
        if abs(norm - 1.0) > TOLERANCES.STATE_NORM:
            raise InputError(f"State is not normalized (norm {norm:.12f})")
        array.setflags(write=False)
        object.__setattr__(self, "ambient_dim", array.shape[0])
        object.__setattr__(self, "amplitudes", array)

    def __setattr__(self, key, value):
        raise AttributeError("StateVector is immutable")

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex]) -> "StateVector":
        """
        Build a state from possibly rounded amplitudes.

        Inputs whose norm is within 1e-3 of 1 are renormalized; anything further off is
        rejected rather than silently rescaled.

        Args:
            amplitudes: Complex amplitudes

        Returns:
            StateVector
        """
        array = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        if array.size == 0 or not np.all(np.isfinite(array)):
            raise InputError("State amplitudes must be a non-empty list of finite numbers")
        norm = float(np.linalg.norm(array))
        if abs(norm - 1.0) >= TOLERANCES.STATE_RENORMALIZE:
            logger.error(f"Rejecting state with norm {norm:.6f}")
            raise InputError(f"State norm {norm:.6f} is too far from 1 to renormalize")
        return cls(array / norm)

    def __len__(self) -> int:
        return self.ambient_dim

    def __repr__(self) -> str:
        return f"StateVector(d={self.ambient_dim})"


@dataclass(frozen=True)
class MeasurementStep:
    """One 'yes' outcome: its probability and the collapsed state."""
    projector_label: str
    probability: float
    post_state: StateVector


@dataclass(frozen=True)
class ExperimentPair:
    """Transcript of the two sequential-measurement experiments."""
    exp1: Tuple[MeasurementStep, MeasurementStep]
    exp2: Tuple[MeasurementStep, MeasurementStep]
    unchanged1: bool
    unchanged2: bool

    @property
    def p1(self) -> float:
        return self.exp1[0].probability

    @property
    def q1(self) -> float:
        return self.exp1[1].probability

    @property
    def p2(self) -> float:
        return self.exp2[0].probability

    @property
    def q2(self) -> float:
        return self.exp2[1].probability


def _float_matrix(p: ProjectorLike) -> FloatMatrix:
    return p.to_float() if isinstance(p, Projector) else p


def measure(s: StateVector, p: ProjectorLike, label: str = "P", stage: str = "measurement") -> MeasurementStep:
    """
    Projective measurement, 'yes' branch.

    Args:
        s: Input state
        p: Projector (exact, converted here) or its float matrix
        label: Name of the projector for the transcript
        stage: Name used in error messages

    Returns:
        MeasurementStep with probability <s|P|s> and post state P|s>/sqrt(p)

    Raises:
        ZeroProbabilityOutcome: If the probability is below 1e-12
    """
    m = _float_matrix(p)
    if m.shape != (s.ambient_dim, s.ambient_dim):
        raise ShapeMismatchError(f"Projector {m.shape} for a state of dimension {s.ambient_dim}")
    projected = m.apply(s.amplitudes)
    expectation = complex(np.vdot(s.amplitudes, projected))
    if abs(expectation.imag) >= TOLERANCES.PROBABILITY_IMAG:
        raise InputError(f"{label} is not Hermitian: <s|P|s> has imaginary part {expectation.imag:.3e}")
    probability = expectation.real
    if probability < TOLERANCES.ZERO_PROBABILITY:
        logger.error(f"{stage}: zero-probability outcome for {label}")
        raise ZeroProbabilityOutcome(stage, probability, label)
    if probability > 1.0 + TOLERANCES.PROBABILITY_OVERSHOOT:
        raise InputError(f"{label} gives probability {probability:.15f} > 1; not a projector")
    post = projected / np.sqrt(probability)
    post = post / np.linalg.norm(post)
    logger.debug(f"{stage}: {label} yes with probability {probability:.6f}")
    return MeasurementStep(label, probability, StateVector(post))


def measure_complement(s: StateVector, p: ProjectorLike, label: str = "P", stage: str = "measurement") -> MeasurementStep:
    """The 'no' outcome: measurement with 1 - P."""
    m = _float_matrix(p)
    complement = FloatMatrix(np.eye(m.rows, dtype=np.complex128) - m.array)
    return measure(s, complement, f"1-{label}", stage)


def ray_equal(a: StateVector, b: StateVector, tolerance: float = TOLERANCES.RAY_FIDELITY) -> bool:
    """Same physical state: |<a|b>|^2 >= 1 - tolerance (global phase ignored)."""
    if a.ambient_dim != b.ambient_dim:
        raise ShapeMismatchError(f"States of dimension {a.ambient_dim} and {b.ambient_dim}")
    return fidelity(a, b) >= 1.0 - tolerance


def fidelity(a: StateVector, b: StateVector) -> float:
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def run_sequence(s: StateVector, first: ProjectorLike, second: ProjectorLike,
                 labels: Tuple[str, str] = ("first", "second")) -> Tuple[MeasurementStep, MeasurementStep]:
    """
    Measure `first`, then `second` on the collapsed state.

    Raises:
        ZeroProbabilityOutcome: Labeled "stage 1" or "stage 2"
    """
    step1 = measure(s, first, labels[0], stage="stage 1")
    step2 = measure(step1.post_state, second, labels[1], stage="stage 2")
    return step1, step2


def run_experiment_pair(c: DesarguesConfig, s: StateVector) -> ExperimentPair:
    """
    Run both experiments on the same input state.

    EXP1 measures Pi(H1 ^ H2) then Pi(H3); EXP2 measures Pi(frak h3) then
    Pi(frak h1 v frak h2).

    Args:
        c: Valid non-degenerate configuration
        s: Input state of matching dimension

    Returns:
        ExperimentPair
    """
    if s.ambient_dim != c.ambient_dim:
        raise ShapeMismatchError(f"State of dimension {s.ambient_dim} for a configuration in C^{c.ambient_dim}")
    proj = experiment_projectors(derive_config(c))
    exp1 = run_sequence(s, proj["Pi(H1^H2)"], proj["Pi(H3)"], ("Pi(H1^H2)", "Pi(H3)"))
    exp2 = run_sequence(s, proj["Pi(h3)"], proj["Pi(h1vh2)"], ("Pi(h3)", "Pi(h1vh2)"))
    pair = ExperimentPair(
        exp1=exp1,
        exp2=exp2,
        unchanged1=ray_equal(exp1[0].post_state, exp1[1].post_state),
        unchanged2=ray_equal(exp2[0].post_state, exp2[1].post_state),
    )
    logger.info(f"Experiments: p1={pair.p1:.4f} q1={pair.q1:.4f} p2={pair.p2:.4f} q2={pair.q2:.4f}")
    return pair


def eigenstate_check(step: MeasurementStep, p: ProjectorLike) -> bool:
    """The collapsed state is a +1 eigenstate of P: ||P s - s|| < 1e-8."""
    m = _float_matrix(p)
    post = step.post_state.amplitudes
    return float(np.linalg.norm(m.apply(post) - post)) < TOLERANCES.EIGENSTATE


def random_state(rng: np.random.Generator, d: int) -> StateVector:
    """Haar-like random state from complex Gaussian amplitudes."""
    raw = rng.normal(size=d) + 1j * rng.normal(size=d)
    return StateVector(raw / np.linalg.norm(raw))


def combined_collapse(s: StateVector, first: ProjectorLike, second: ProjectorLike) -> Optional[StateVector]:
    """(1/sqrt(pq)) second.first|s> as a state, or None if it vanishes."""
    vec = _float_matrix(second).apply(_float_matrix(first).apply(s.amplitudes))
    norm = float(np.linalg.norm(vec))
    if norm < TOLERANCES.ZERO_PROBABILITY:
        return None
    return StateVector(vec / norm)
