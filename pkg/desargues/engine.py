"""
Quantum Desargues configurations: two coplanar triangles of points in L(d), their sides,
cross lines and cross points, and the concurrency / collinearity equivalence.

Indices follow the usual convention: H_ij = h_i v h_j, frak h_k = H_ij ^ H'_ij with
{i, j, k} = {1, 2, 3}, and cross lines calH_i = h_i v h'_i. Dict keys are 1-based.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from lattices.subspace_lattice import (
    Projector,
    Subspace,
    absorbs,
    commutes,
    from_vectors,
    join,
    meet,
    projector,
    relative_orthocomplement,
)
from numeric.exact_matrix import solve_exact, vector_matrix
from numeric.gaussian import GaussianRational, ScalarLike
from utils.exceptions import DegenerateConfigError, InvalidConfigError, PreconditionError
from utils.logger import logger

PAIRS: Tuple[Tuple[int, int, int], ...] = ((2, 3, 1), (1, 3, 2), (1, 2, 3))  # (i, j, k)


@dataclass(frozen=True)
class PointTriple:
    """Three points (one-dimensional subspaces) of a common ambient space."""
    points: Tuple[Subspace, Subspace, Subspace]

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[ScalarLike]], d: int) -> "PointTriple":
        return cls(tuple(from_vectors([v], d) for v in vectors))

    def __getitem__(self, i: int) -> Subspace:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def check(self, name: str = "triangle") -> None:
        """
        Raise InvalidConfigError unless this is a triple of pairwise distinct points.
        """
        if len(self.points) != 3:
            raise InvalidConfigError(f"{name}-size", f"expected 3 points, got {len(self.points)}")
        if len({p.ambient_dim for p in self.points}) != 1:
            raise InvalidConfigError(f"{name}-ambient", "points live in different ambient spaces")
        for n, p in enumerate(self.points, start=1):
            if p.dim != 1:
                raise InvalidConfigError(f"{name}-point-dimension", f"point {n} has dimension {p.dim}")
        if len(set(self.points)) != 3:
            raise InvalidConfigError(f"{name}-distinct", "points are not pairwise distinct")


@dataclass(frozen=True)
class DesarguesConfig:
    """Two triangles h and h' in a common plane H0 (the plane is inferred from h)."""
    triangle: PointTriple
    triangle_prime: PointTriple
    plane: Subspace

    @classmethod
    def build(cls, triangle: PointTriple, triangle_prime: PointTriple) -> "DesarguesConfig":
        plane = join(join(triangle[0], triangle[1]), triangle[2])
        return cls(triangle, triangle_prime, plane)

    @classmethod
    def from_vectors(cls, d: int, triangle: Sequence[Sequence[ScalarLike]],
                     triangle_prime: Sequence[Sequence[ScalarLike]]) -> "DesarguesConfig":
        return cls.build(PointTriple.from_vectors(triangle, d), PointTriple.from_vectors(triangle_prime, d))

    @property
    def ambient_dim(self) -> int:
        return self.plane.ambient_dim


@dataclass(frozen=True)
class DerivedConfig:
    """Sides, cross points, cross lines and dual lines of a valid configuration."""
    config: DesarguesConfig
    sides: Dict[Tuple[int, int], Subspace] = field(hash=False)
    sides_prime: Dict[Tuple[int, int], Subspace] = field(hash=False)
    cross_points: Tuple[Subspace, Subspace, Subspace]
    cross_lines: Tuple[Subspace, Subspace, Subspace]
    dual_lines: Tuple[Subspace, Subspace, Subspace]
    dual_lines_prime: Tuple[Subspace, Subspace, Subspace]


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of validate_config; falsy when an invariant is violated."""
    ok: bool
    invariant: Optional[str] = None
    message: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConfigReport:
    """Verdicts of the Desargues check on one configuration."""
    concurrent: bool
    collinear: bool
    equivalence_ok: bool
    absorption_lhs: bool
    absorption_rhs: bool
    commutes_lhs: bool
    commutes_rhs: bool
    dual_concurrent: bool
    center: Optional[Subspace] = None
    axis: Optional[Subspace] = None


def is_point_triangle(t: PointTriple) -> bool:
    """
    The points form a triangle when their join has dimension 3.

    Args:
        t: Triple of distinct points

    Returns:
        bool: False means the three spanning vectors are linearly dependent
    """
    t.check()
    return join(join(t[0], t[1]), t[2]).dim == 3


def is_line_triangle(l1: Subspace, l2: Subspace, l3: Subspace) -> bool:
    """
    Three distinct lines form a triangle when they share no common point.

    Raises:
        PreconditionError: If a line is not two-dimensional or two lines coincide
    """
    lines = (l1, l2, l3)
    if any(line.dim != 2 for line in lines):
        raise PreconditionError(f"is_line_triangle needs lines, got dimensions {[l.dim for l in lines]}")
    if len(set(lines)) != 3:
        raise PreconditionError("is_line_triangle needs three distinct lines")
    return meet(meet(l1, l2), l3).dim == 0


def validate_config(c: DesarguesConfig) -> ValidationResult:
    """
    Check every invariant of a configuration and report the first violation.

    Args:
        c: Configuration

    Returns:
        ValidationResult
    """
    try:
        if c.ambient_dim < 3:
            raise InvalidConfigError("ambient", f"ambient dimension {c.ambient_dim} < 3")
        c.triangle.check("triangle")
        c.triangle_prime.check("triangle-prime")
        dims = {p.ambient_dim for p in c.triangle} | {p.ambient_dim for p in c.triangle_prime}
        if dims != {c.ambient_dim}:
            raise InvalidConfigError("ambient", f"points in ambient dimensions {sorted(dims)}")
        if not is_point_triangle(c.triangle):
            raise InvalidConfigError("triangle", "points h1, h2, h3 are linearly dependent")
        if not is_point_triangle(c.triangle_prime):
            raise InvalidConfigError("triangle-prime", "points h'1, h'2, h'3 are linearly dependent")
        plane = join(join(c.triangle[0], c.triangle[1]), c.triangle[2])
        plane_prime = join(join(c.triangle_prime[0], c.triangle_prime[1]), c.triangle_prime[2])
        if plane != c.plane or plane.dim != 3:
            raise InvalidConfigError("plane", "H0 is not the three-dimensional join of the first triangle")
        if plane_prime != plane:
            raise InvalidConfigError("coplanar", "the two triangles span different planes")
    except InvalidConfigError as e:
        logger.debug(f"Configuration rejected: {e}")
        return ValidationResult(False, e.invariant, str(e))
    return ValidationResult(True)


def derive_config(c: DesarguesConfig) -> DerivedConfig:
    """
    Compute sides, cross points and cross lines of a valid configuration.

    Args:
        c: Configuration satisfying validate_config

    Returns:
        DerivedConfig

    Raises:
        InvalidConfigError: If validation fails
        DegenerateConfigError: If h_i = h'_i or a side is shared (H_ij = H'_ij)
    """
    result = validate_config(c)
    if not result:
        raise InvalidConfigError(result.invariant, result.message)
    h, hp = c.triangle, c.triangle_prime

    cross_lines = []
    for i in range(3):
        line = join(h[i], hp[i])
        if line.dim < 2:
            raise DegenerateConfigError(i + 1, f"h{i + 1} = h'{i + 1}, cross line collapses to a point")
        cross_lines.append(line)

    sides = {(i, j): join(h[i - 1], h[j - 1]) for i, j, _ in PAIRS}
    sides_prime = {(i, j): join(hp[i - 1], hp[j - 1]) for i, j, _ in PAIRS}
    points = {}
    for i, j, k in PAIRS:
        point = meet(sides[(i, j)], sides_prime[(i, j)])
        if point.dim != 1:
            raise DegenerateConfigError(k, f"sides H{i}{j} and H'{i}{j} coincide")
        points[k] = point

    dual = tuple(relative_orthocomplement(p, c.plane) for p in h)
    dual_prime = tuple(relative_orthocomplement(p, c.plane) for p in hp)
    return DerivedConfig(
        config=c,
        sides=sides,
        sides_prime=sides_prime,
        cross_points=(points[1], points[2], points[3]),
        cross_lines=tuple(cross_lines),
        dual_lines=dual,
        dual_lines_prime=dual_prime,
    )


def concurrent(d: DerivedConfig) -> Tuple[bool, Optional[Subspace]]:
    """
    Cross lines meet in one point.

    Returns:
        (flag, center) where center is the common point when flag is true
    """
    l1, l2, l3 = d.cross_lines
    common = meet(meet(l1, l2), l3)
    if common.dim == 1:
        return True, common
    return False, None


def collinear(d: DerivedConfig) -> Tuple[bool, Optional[Subspace]]:
    """
    Cross points lie on one line.

    Returns:
        (flag, axis) where axis is the common line when flag is true
    """
    p1, p2, p3 = d.cross_points
    span = join(join(p1, p2), p3)
    if span.dim == 2:
        return True, span
    return False, None


def dual_concurrency(d: DerivedConfig) -> bool:
    """
    Concurrency read through relative orthocomplements in H0: the cross lines share a
    point exactly when their orthocomplements (points of H0) are linearly dependent.
    """
    plane = d.config.plane
    duals = [relative_orthocomplement(line, plane) for line in d.cross_lines]
    return join(join(duals[0], duals[1]), duals[2]).dim == 2


def experiment_projectors(d: DerivedConfig) -> Dict[str, Projector]:
    """The four projectors of the two sequential-measurement experiments."""
    l1, l2, l3 = d.cross_lines
    p1, p2, p3 = d.cross_points
    return {
        "Pi(H1^H2)": projector(meet(l1, l2)),
        "Pi(H3)": projector(l3),
        "Pi(h3)": projector(p3),
        "Pi(h1vh2)": projector(join(p1, p2)),
    }


def desargues_check(c: DesarguesConfig) -> ConfigReport:
    """
    Full verdict on a configuration.

    Args:
        c: Valid, non-degenerate configuration

    Returns:
        ConfigReport whose equivalence_ok states concurrent == collinear
    """
    derived = derive_config(c)
    is_concurrent, center = concurrent(derived)
    is_collinear, axis = collinear(derived)
    proj = experiment_projectors(derived)
    report = ConfigReport(
        concurrent=is_concurrent,
        collinear=is_collinear,
        equivalence_ok=is_concurrent == is_collinear,
        absorption_lhs=absorbs(proj["Pi(H3)"], proj["Pi(H1^H2)"]),
        absorption_rhs=absorbs(proj["Pi(h1vh2)"], proj["Pi(h3)"]),
        commutes_lhs=commutes(proj["Pi(H3)"], proj["Pi(H1^H2)"]),
        commutes_rhs=commutes(proj["Pi(h1vh2)"], proj["Pi(h3)"]),
        dual_concurrent=dual_concurrency(derived),
        center=center,
        axis=axis,
    )
    logger.debug(f"Desargues check: concurrent={is_concurrent} collinear={is_collinear}")
    if not report.equivalence_ok:
        logger.error("Concurrency and collinearity disagree on a non-degenerate configuration")
    return report


def membership_coefficients(p: Sequence[ScalarLike], q: Sequence[ScalarLike],
                            target: Sequence[ScalarLike]) -> Optional[Tuple[GaussianRational, GaussianRational]]:
    """
    Exact (a, b) with a.p + b.q = target, or None if target is not on the line p v q.

    Args:
        p: First spanning vector
        q: Second spanning vector, independent of p
        target: Vector to express
    """
    m = vector_matrix([p, q], len(p))
    solution = solve_exact(m, list(target))
    if solution is None:
        return None
    return solution[0], solution[1]


def permute(c: DesarguesConfig, permutation: Sequence[int]) -> DesarguesConfig:
    """
    Relabel indices consistently in both triangles.

    Args:
        c: Configuration
        permutation: New order of the 0-based indices, e.g. (2, 0, 1)
    """
    if sorted(permutation) != [0, 1, 2]:
        raise PreconditionError(f"Not a permutation of (0, 1, 2): {permutation}")
    triangle = PointTriple(tuple(c.triangle[i] for i in permutation))
    triangle_prime = PointTriple(tuple(c.triangle_prime[i] for i in permutation))
    return DesarguesConfig(triangle, triangle_prime, c.plane)


def points_as_vectors(t: PointTriple) -> List[Tuple[GaussianRational, ...]]:
    return [p.ray() for p in t]
