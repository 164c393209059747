"""
Seeded generators of Desargues configurations.

Randomness comes from numpy's PCG64 bit generator (`numpy.random.default_rng(seed)`).
Coordinates are Gaussian integers whose components are drawn uniformly from [-5, 5];
zero vectors are rejected. A configuration is built inside a random plane H0 = range(E)
for a random d x 3 matrix E of full rank, by choosing 3-vectors of plane coordinates and
mapping them through E.
"""
from typing import Callable, List, Optional

import numpy as np

from config.config import Config
from desargues.engine import DesarguesConfig, concurrent, derive_config, validate_config
from numeric.exact_matrix import ExactMatrix, rank, vector_matrix
from numeric.gaussian import GaussianRational
from utils.exceptions import DegenerateConfigError, GeneratorExhaustedError, PreconditionError
from utils.logger import logger

COORD_LOW = -5
COORD_HIGH = 5

Vec = List[GaussianRational]


def _gaussian_int(rng: np.random.Generator) -> GaussianRational:
    re, im = rng.integers(COORD_LOW, COORD_HIGH + 1, size=2)
    return GaussianRational(int(re), int(im))


def _vector(rng: np.random.Generator, n: int) -> Vec:
    while True:
        v = [_gaussian_int(rng) for _ in range(n)]
        if any(not x.is_zero() for x in v):
            return v


def _plane_basis(rng: np.random.Generator, d: int) -> ExactMatrix:
    while True:
        e = vector_matrix([_vector(rng, d) for _ in range(3)], d)
        if rank(e) == 3:
            return e


def _embed(e: ExactMatrix, coords: Vec) -> Vec:
    return [x for x in (e @ ExactMatrix.from_columns([coords], 3)).column(0)]


def _combine(a: GaussianRational, u: Vec, b: GaussianRational, v: Vec) -> Vec:
    return [a * x + b * y for x, y in zip(u, v)]


def _independent(*coords: Vec) -> bool:
    return rank(vector_matrix(coords, 3)) == len(coords)


def _build(e: ExactMatrix, d: int, triangle: List[Vec], triangle_prime: List[Vec]) -> Optional[DesarguesConfig]:
    """Embed plane coordinates, keep the configuration only if it is valid and non-degenerate."""
    config = DesarguesConfig.from_vectors(
        d,
        [_embed(e, c) for c in triangle],
        [_embed(e, c) for c in triangle_prime],
    )
    if not validate_config(config):
        return None
    try:
        derive_config(config)
    except DegenerateConfigError as err:
        logger.debug(f"Resampling degenerate configuration: {err}")
        return None
    return config


def _with_attempts(kind: str, seed: int, d: int, attempt: Callable[[np.random.Generator], Optional[DesarguesConfig]]) -> DesarguesConfig:
    if d < 3:
        raise PreconditionError(f"Generators need ambient dimension >= 3, got {d}")
    rng = np.random.default_rng(seed)
    for n in range(Config.GENERATOR_MAX_ATTEMPTS):
        config = attempt(rng)
        if config is not None:
            logger.debug(f"{kind} generator: seed={seed} d={d} accepted after {n + 1} attempt(s)")
            return config
    logger.error(f"{kind} generator exhausted {Config.GENERATOR_MAX_ATTEMPTS} attempts (seed={seed}, d={d})")
    raise GeneratorExhaustedError(f"{kind} generator failed for seed={seed}, d={d}")


def generate_desarguesian(seed: int, d: int) -> DesarguesConfig:
    """
    Configuration whose cross lines are concurrent by construction.

    A center w is drawn in H0, three distinct lines through w inside H0, and on each line
    two distinct points h_i != h'_i, both different from w.

    Args:
        seed: PRNG seed
        d: Ambient dimension, at least 3

    Returns:
        DesarguesConfig
    """
    def attempt(rng: np.random.Generator) -> Optional[DesarguesConfig]:
        e = _plane_basis(rng, d)
        w = _vector(rng, 3)
        directions = [_vector(rng, 3) for _ in range(3)]
        if not all(_independent(w, u) for u in directions):
            return None
        if not all(_independent(w, directions[i], directions[j]) for i, j in ((0, 1), (0, 2), (1, 2))):
            return None
        triangle, triangle_prime = [], []
        for u in directions:
            a, b = _gaussian_int(rng), _gaussian_int(rng)
            a2, b2 = _gaussian_int(rng), _gaussian_int(rng)
            if b.is_zero() or b2.is_zero() or (a * b2 - a2 * b).is_zero():
                return None
            triangle.append(_combine(a, w, b, u))
            triangle_prime.append(_combine(a2, w, b2, u))
        config = _build(e, d, triangle, triangle_prime)
        if config is None or not concurrent(derive_config(config))[0]:
            return None
        return config

    return _with_attempts("desarguesian", seed, d, attempt)


def generate_generic(seed: int, d: int) -> DesarguesConfig:
    """
    Two random triangles in a common random plane, with no concurrency imposed.

    Args:
        seed: PRNG seed
        d: Ambient dimension, at least 3

    Returns:
        DesarguesConfig
    """
    def attempt(rng: np.random.Generator) -> Optional[DesarguesConfig]:
        e = _plane_basis(rng, d)
        triangle = [_vector(rng, 3) for _ in range(3)]
        triangle_prime = [_vector(rng, 3) for _ in range(3)]
        return _build(e, d, triangle, triangle_prime)

    return _with_attempts("generic", seed, d, attempt)


def generate(kind: str, seed: int, d: int) -> DesarguesConfig:
    """Dispatch on kind: "desarguesian" or "generic"."""
    if kind == "desarguesian":
        return generate_desarguesian(seed, d)
    if kind == "generic":
        return generate_generic(seed, d)
    raise PreconditionError(f"Unknown generator kind: {kind}")
