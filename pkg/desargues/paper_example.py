"""
The worked H(5) example as a self-checking pipeline.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from constants.paper_example import PAPER_EXAMPLE, PaperExample
from constants.tolerances import TOLERANCES
from desargues.engine import (
    DesarguesConfig,
    collinear,
    concurrent,
    derive_config,
    desargues_check,
    experiment_projectors,
    membership_coefficients,
    validate_config,
)
from desargues.measurement import (
    ExperimentPair,
    StateVector,
    eigenstate_check,
    fidelity,
    run_experiment_pair,
)
from lattices.subspace_lattice import Projector, projector_from_basis, proportional
from numeric.exact_matrix import rank, to_float, vector_matrix
from numeric.float_matrix import float_rank
from numeric.gaussian import GaussianRational
from utils.exceptions import DesarguesError, ZeroProbabilityOutcome
from utils.logger import logger


@dataclass
class CheckLine:
    """One comparison against an embedded expected value."""
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PaperExampleResult:
    checks: List[CheckLine] = field(default_factory=list)
    projectors: Dict[str, Projector] = field(default_factory=dict)
    pair: Optional[ExperimentPair] = None

    @property
    def all_passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckLine(name, bool(passed), detail))
        logger.debug(f"{'PASS' if passed else 'FAIL'} {name} {detail}")


def _vectors(raw: Sequence[Sequence[str]]) -> List[List[GaussianRational]]:
    return [[GaussianRational.coerce(x) for x in v] for v in raw]


def _max_deviation(actual: np.ndarray, expected) -> float:
    # componentwise: tables round real and imaginary parts separately
    diff = actual - np.array(expected, dtype=np.complex128)
    return float(max(np.max(np.abs(diff.real)), np.max(np.abs(diff.imag))))


def run_paper_example(example: Optional[PaperExample] = None) -> PaperExampleResult:
    """
    Recompute every quantity of the worked example and compare with the embedded values.

    Args:
        example: Data to use; defaults to the embedded example

    Returns:
        PaperExampleResult with one CheckLine per comparison
    """
    ex = example or PAPER_EXAMPLE
    result = PaperExampleResult()
    d = ex.D
    tri, tri_p = _vectors(ex.TRIANGLE), _vectors(ex.TRIANGLE_PRIME)

    r1, r2 = rank(vector_matrix(tri, d)), rank(vector_matrix(tri_p, d))
    result.add("rank(h1,h2,h3) = 3", r1 == 3, f"rank={r1}")
    result.add("rank(h'1,h'2,h'3) = 3", r2 == 3, f"rank={r2}")
    float_r1 = float_rank(to_float(vector_matrix(tri, d)))
    result.add("float rank(h1,h2,h3) = 3", float_r1 == 3, f"rank={float_r1}")

    config = DesarguesConfig.from_vectors(d, tri, tri_p)
    validation = validate_config(config)
    result.add("coplanar triangles", validation.ok, validation.message or "")
    if not validation.ok:
        return result

    try:
        derived = derive_config(config)
    except DesarguesError as e:
        logger.error(f"Worked example failed to derive: {e}")
        result.add("non-degenerate configuration", False, str(e))
        return result

    is_concurrent, center = concurrent(derived)
    center_ok = is_concurrent and proportional(center.ray(), _vectors([ex.CENTER])[0])
    result.add("cross lines meet at w", center_ok, f"center={center.ray() if center is not None else None}")

    for k, (point, expected) in enumerate(zip(derived.cross_points, _vectors(ex.CROSS_POINTS)), start=1):
        result.add(f"frak h{k} ray", proportional(point.ray(), expected), f"ray={point.ray()}")

    rays = vector_matrix([p.ray() for p in derived.cross_points], d)
    rank_frak = rank(rays)
    result.add("rank(frak h1, frak h2, frak h3) = 2", rank_frak == 2, f"rank={rank_frak}")
    result.add("cross points collinear", collinear(derived)[0])

    w = _vectors([ex.CENTER])[0]
    for i, expected in enumerate(ex.CROSS_LINE_COEFFICIENTS):
        coeffs = membership_coefficients(tri[i], tri_p[i], w)
        wanted = tuple(GaussianRational.coerce(x) for x in expected)
        result.add(f"w = a{i + 1} h{i + 1} + b{i + 1} h'{i + 1}", coeffs == wanted, f"(a, b)={coeffs}")

    proj = experiment_projectors(derived)
    result.projectors = proj
    tables = (
        ("Pi(H3)", ex.PI_H3),
        ("Pi(H1^H2)", ex.PI_H1_MEET_H2),
        ("Pi(h3)", ex.PI_FRAK_H3),
        ("Pi(h1vh2)", ex.PI_FRAK_H1_JOIN_H2),
    )
    for label, table in tables:
        gap = _max_deviation(proj[label].to_float().array, table)
        result.add(f"{label} table", gap <= TOLERANCES.PROJECTOR_TABLE, f"max deviation {gap:.2e}")
        result.add(f"{label} exact projector laws", proj[label].is_valid())

    explicit = projector_from_basis(_vectors(ex.H3_BASIS), d)
    result.add("Pi(H3) independent of basis", explicit.matrix == proj["Pi(H3)"].matrix)

    report = desargues_check(config)
    result.add("absorption Pi(H3) Pi(H1^H2) = Pi(H1^H2)", report.absorption_lhs)
    result.add("absorption Pi(h1vh2) Pi(h3) = Pi(h3)", report.absorption_rhs)

    state = StateVector.from_amplitudes(ex.STATE)
    try:
        pair = run_experiment_pair(config, state)
        result.pair = pair
    except ZeroProbabilityOutcome as e:
        result.add("experiments complete", False, str(e))
        return result
    result.add("p1", abs(pair.p1 - ex.P1) <= TOLERANCES.PAPER_DECIMAL, f"p1={pair.p1:.4f}")
    result.add("p2", abs(pair.p2 - ex.P2) <= TOLERANCES.PAPER_DECIMAL, f"p2={pair.p2:.4f}")
    result.add("q1", abs(pair.q1 - ex.Q1) <= TOLERANCES.RAY_FIDELITY, f"q1={pair.q1:.12f}")
    result.add("q2", abs(pair.q2 - ex.Q2) <= TOLERANCES.RAY_FIDELITY, f"q2={pair.q2:.12f}")
    result.add("|s1> = |s2>", pair.unchanged1)
    result.add("|t1> = |t2>", pair.unchanged2)

    s_expected = StateVector.from_amplitudes(ex.S_COLLAPSED)
    t_expected = StateVector.from_amplitudes(ex.T_COLLAPSED)
    fs = fidelity(pair.exp1[1].post_state, s_expected)
    ft = fidelity(pair.exp2[1].post_state, t_expected)
    result.add("|s2> ray", fs >= 1 - TOLERANCES.COLLAPSED_FIDELITY, f"fidelity={fs:.9f}")
    result.add("|t2> ray", ft >= 1 - TOLERANCES.COLLAPSED_FIDELITY, f"fidelity={ft:.9f}")
    result.add("|s1> eigenstate of Pi(H3)", eigenstate_check(pair.exp1[0], proj["Pi(H3)"]))
    result.add("|t1> eigenstate of Pi(h1vh2)", eigenstate_check(pair.exp2[0], proj["Pi(h1vh2)"]))

    logger.info(f"Worked example: {sum(c.passed for c in result.checks)}/{len(result.checks)} checks passed")
    return result
