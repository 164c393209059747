"""
JSON codecs for configurations, states and reports.

Decoders raise InputError (or ShapeMismatchError) on malformed documents. Encoders return
plain dicts; `dumps` renders them deterministically.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from constants.tolerances import TOLERANCES
from desargues.engine import ConfigReport, DesarguesConfig, points_as_vectors
from desargues.measurement import ExperimentPair, MeasurementStep, StateVector
from lattices.boolean_lattice import BooleanDesarguesInput, GroundSet, Subset
from lattices.boolean_scan import ScanReport
from lattices.subspace_lattice import Projector
from numeric.exact_matrix import ExactMatrix
from numeric.gaussian import GaussianRational
from utils.exceptions import InputError, ShapeMismatchError
from utils.logger import logger

FLOAT_DIGITS = 4


def load_json(path: Union[str, Path]) -> Any:
    """
    Read and parse a JSON file.

    Raises:
        InputError: If the file is missing or is not valid JSON
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        logger.error(f"Input file not found: {path}")
        raise InputError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        logger.error(f"Malformed JSON in {path}: {e}")
        raise InputError(f"Malformed JSON in {path}: {e.msg} (line {e.lineno})") from e


def dumps(document: Any, pretty: bool = False) -> str:
    """Deterministic JSON: sorted keys, fixed separators."""
    if pretty:
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _require(data: Any, keys: Sequence[str], what: str) -> Dict[str, Any]:
    if not isinstance(data, dict):
        raise InputError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InputError(f"{what} is missing keys: {missing}")
    return data


def _round(x: float) -> float:
    return round(float(x), FLOAT_DIGITS) + 0.0


# --- Boolean lattice -------------------------------------------------------------------

def sort_labels(labels: Sequence[str]) -> List[str]:
    """Numeric order when every label is an integer, lexicographic otherwise."""
    labels = [str(label) for label in labels]
    try:
        return sorted(labels, key=int)
    except ValueError:
        return sorted(labels)


def boolean_input_from_json(data: Any) -> BooleanDesarguesInput:
    """
    Decode {"ground": [...], "A": [[...] x3], "Aprime": [[...] x3]}.

    Labels are mapped to bit indices in sorted order.

    Returns:
        Validated BooleanDesarguesInput
    """
    data = _require(data, ("ground", "A", "Aprime"), "Boolean configuration")
    raw_ground = data["ground"]
    if not isinstance(raw_ground, list) or not raw_ground:
        raise InputError("'ground' must be a non-empty list of labels")
    ground = GroundSet(len(raw_ground), tuple(sort_labels(raw_ground)))

    def triple(key: str):
        value = data[key]
        if not isinstance(value, list) or len(value) != 3:
            raise ShapeMismatchError(f"'{key}' must be a list of 3 subsets")
        if not all(isinstance(s, list) for s in value):
            raise InputError(f"Every subset of '{key}' must be a list of labels")
        return tuple(ground.subset_from_labels(s) for s in value)

    result = BooleanDesarguesInput(triple("A"), triple("Aprime"), ground)
    result.validate()
    return result


def subset_to_json(s: Subset) -> List[str]:
    return s.labels()


def boolean_input_to_json(data: BooleanDesarguesInput) -> Dict[str, Any]:
    return {
        "ground": list(data.ground.labels),
        "A": [subset_to_json(s) for s in data.a],
        "Aprime": [subset_to_json(s) for s in data.a_prime],
    }


def scan_report_to_json(report: ScanReport) -> Dict[str, Any]:
    converse = report.converse_counterexample
    first = report.first_violation
    return {
        "n": report.ground.size,
        "total": report.total,
        "antecedent_true": report.antecedent_true,
        "consequent_true": report.consequent_true,
        "violations": report.violations,
        "converse_counterexample": boolean_input_to_json(report.as_input(converse)) if converse else None,
        "first_violation": boolean_input_to_json(report.as_input(first)) if first else None,
    }


# --- Exact vectors and matrices ---------------------------------------------------------

def scalar_to_json(x: GaussianRational) -> Dict[str, str]:
    return x.to_json()


def vector_to_json(v: Sequence[GaussianRational]) -> List[Dict[str, str]]:
    return [scalar_to_json(x) for x in v]


def vector_from_json(data: Any, d: int) -> List[GaussianRational]:
    if not isinstance(data, list):
        raise InputError(f"Vector must be a list, got {type(data).__name__}")
    if len(data) != d:
        raise ShapeMismatchError(f"Vector of length {len(data)} in ambient dimension {d}")
    return [GaussianRational.from_json(x) for x in data]


def _dimension(data: Dict[str, Any]) -> int:
    d = data["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InputError(f"'d' must be a positive integer, got {d!r}")
    return d


def matrix_to_json(m: ExactMatrix) -> List[List[Dict[str, str]]]:
    return [vector_to_json(row) for row in m.to_rows()]


def float_matrix_to_json(array: np.ndarray) -> List[List[List[float]]]:
    return [[[_round(z.real), _round(z.imag)] for z in row] for row in array]


def projector_to_json(p: Projector) -> Dict[str, Any]:
    """Exact entries plus a float rendering rounded to four decimals."""
    return {
        "d": p.ambient_dim,
        "rank": p.source_dim,
        "exact": matrix_to_json(p.matrix),
        "float": float_matrix_to_json(p.to_float().array),
    }


# --- Desargues configurations ----------------------------------------------------------

def config_from_json(data: Any) -> DesarguesConfig:
    """
    Decode {"d": d, "triangle": [v1, v2, v3], "triangle_prime": [...]}.

    The plane H0 is always inferred from the triangle.
    """
    data = _require(data, ("d", "triangle", "triangle_prime"), "Desargues configuration")
    if "plane" in data:
        raise InputError("The plane is inferred from the triangle and must not be supplied")
    d = _dimension(data)
    triangles = []
    for key in ("triangle", "triangle_prime"):
        value = data[key]
        if not isinstance(value, list) or len(value) != 3:
            raise ShapeMismatchError(f"'{key}' must be a list of 3 vectors")
        triangles.append([vector_from_json(v, d) for v in value])
    for key, vectors in zip(("triangle", "triangle_prime"), triangles):
        if any(all(x.is_zero() for x in v) for v in vectors):
            raise InputError(f"'{key}' contains a zero vector, which spans no point")
    return DesarguesConfig.from_vectors(d, triangles[0], triangles[1])


def config_to_json(c: DesarguesConfig) -> Dict[str, Any]:
    return {
        "d": c.ambient_dim,
        "triangle": [vector_to_json(v) for v in points_as_vectors(c.triangle)],
        "triangle_prime": [vector_to_json(v) for v in points_as_vectors(c.triangle_prime)],
    }


def config_report_to_json(report: ConfigReport) -> Dict[str, Any]:
    """ConfigReport with the center ray and the axis basis as exact normalized vectors."""
    return {
        "concurrent": report.concurrent,
        "collinear": report.collinear,
        "equivalence_ok": report.equivalence_ok,
        "absorption_lhs": report.absorption_lhs,
        "absorption_rhs": report.absorption_rhs,
        "commutes_lhs": report.commutes_lhs,
        "commutes_rhs": report.commutes_rhs,
        "dual_concurrent": report.dual_concurrent,
        "center": vector_to_json(report.center.ray()) if report.center is not None else None,
        "axis": [vector_to_json(v) for v in report.axis.vectors()] if report.axis is not None else None,
    }


# --- States and experiments ------------------------------------------------------------

def state_from_json(data: Any) -> StateVector:
    """
    Decode {"d": d, "amplitudes": [[re, im], ...]}; a bare number is a real amplitude.
    """
    data = _require(data, ("d", "amplitudes"), "State")
    d = _dimension(data)
    raw = data["amplitudes"]
    if not isinstance(raw, list) or len(raw) != d:
        raise ShapeMismatchError(f"'amplitudes' must list {d} entries")
    amplitudes = []
    for a in raw:
        if isinstance(a, list) and len(a) == 2 and all(_is_number(x) for x in a):
            amplitudes.append(complex(a[0], a[1]))
        elif _is_number(a):
            amplitudes.append(complex(a))
        else:
            raise InputError(f"Amplitude must be [re, im] or a number, got {a!r}")
    return StateVector.from_amplitudes(amplitudes)


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _rounded_state(s: StateVector) -> List[List[float]]:
    return [[_round(z.real), _round(z.imag)] for z in s.amplitudes]


def _step_to_json(step: MeasurementStep) -> Dict[str, Any]:
    return {
        "projector": step.projector_label,
        "probability": _round(step.probability),
        "probability_full": float(step.probability),
        "post_state": _rounded_state(step.post_state),
    }


def experiment_pair_to_json(pair: ExperimentPair) -> Dict[str, Any]:
    """Probabilities rounded to four decimals plus full-precision fields."""
    return {
        "p1": _round(pair.p1),
        "q1": _round(pair.q1),
        "p2": _round(pair.p2),
        "q2": _round(pair.q2),
        "p1_full": float(pair.p1),
        "q1_full": float(pair.q1),
        "p2_full": float(pair.p2),
        "q2_full": float(pair.q2),
        "unchanged1": pair.unchanged1,
        "unchanged2": pair.unchanged2,
        "exp1": [_step_to_json(s) for s in pair.exp1],
        "exp2": [_step_to_json(s) for s in pair.exp2],
    }


def tolerances_to_json() -> Dict[str, float]:
    return TOLERANCES.as_dict()
