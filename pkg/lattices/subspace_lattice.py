"""
The modular orthocomplemented lattice L(d) of subspaces of C^d.

A Subspace keeps its basis in reduced column echelon form, so two subspaces are equal
exactly when their bases are equal entry by entry.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from lattices.base_lattice import BaseLattice
from numeric.exact_matrix import (
    ExactMatrix,
    invert_gram,
    null_space,
    rcef,
    solve_exact,
    to_float,
    vector_matrix,
)
from numeric.float_matrix import FloatMatrix
from numeric.gaussian import GaussianRational, ScalarLike
from utils.exceptions import PreconditionError, ShapeMismatchError
from utils.logger import logger

Vector = Tuple[GaussianRational, ...]


class Subspace:
    """Element of L(d): a canonically represented linear subspace of C^d."""

    __slots__ = ("ambient_dim", "basis", "dim")

    def __init__(self, ambient_dim: int, basis: ExactMatrix, canonical: bool = False):
        if basis.rows != ambient_dim:
            raise ShapeMismatchError(
                f"Basis with {basis.rows} rows in ambient dimension {ambient_dim}"
            )
        if not canonical:
            basis, _ = rcef(basis)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "dim", basis.cols)

    def __setattr__(self, key, value):
        raise AttributeError("Subspace is immutable")

    def __reduce__(self):
        return (Subspace, (self.ambient_dim, self.basis, True))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __or__(self, other: "Subspace") -> "Subspace":
        return join(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return meet(self, other)

    def __invert__(self) -> "Subspace":
        return orthocomplement(self)

    def __le__(self, other: "Subspace") -> bool:
        return leq(self, other)

    def vectors(self) -> List[Vector]:
        return self.basis.columns()

    def contains(self, vector: Sequence[ScalarLike]) -> bool:
        """Membership of a single vector."""
        if len(vector) != self.ambient_dim:
            raise ShapeMismatchError(f"Vector of length {len(vector)} in ambient dimension {self.ambient_dim}")
        return solve_exact(self.basis, list(vector)) is not None

    def ray(self) -> Vector:
        """
        The spanning vector of a point, normalized so its first nonzero entry is 1.

        Raises:
            PreconditionError: If the subspace is not one-dimensional
        """
        if self.dim != 1:
            raise PreconditionError(f"ray() needs a point, got dimension {self.dim}")
        return self.basis.column(0)

    def __repr__(self) -> str:
        return f"Subspace(d={self.ambient_dim}, dim={self.dim})"


@dataclass(frozen=True)
class Projector:
    """Orthogonal projector Pi(H) as an exact d x d matrix."""
    ambient_dim: int
    matrix: ExactMatrix
    source_dim: int

    def to_float(self) -> FloatMatrix:
        return to_float(self.matrix)

    def __matmul__(self, other: "Projector") -> ExactMatrix:
        return self.matrix @ other.matrix

    def is_valid(self) -> bool:
        """Idempotent, Hermitian, and trace equal to the source dimension, all exactly."""
        m = self.matrix
        return m @ m == m and m.is_hermitian() and m.trace() == self.source_dim


def _require_same_ambient(*spaces: Subspace) -> None:
    dims = {s.ambient_dim for s in spaces}
    if len(dims) != 1:
        raise ShapeMismatchError(f"Ambient dimension mismatch: {sorted(dims)}")


def from_vectors(vectors: Sequence[Sequence[ScalarLike]], d: int) -> Subspace:
    """
    Canonical span of a (possibly empty or dependent) list of d-vectors.

    Args:
        vectors: Vectors of length d
        d: Ambient dimension

    Returns:
        Subspace of dimension rank(vectors)
    """
    return Subspace(d, vector_matrix(vectors, d))


def zero_space(d: int) -> Subspace:
    """The least element O."""
    return Subspace(d, ExactMatrix.zeros(d, 0), canonical=True)


def full_space(d: int) -> Subspace:
    """The greatest element I."""
    return Subspace(d, ExactMatrix.identity(d), canonical=True)


def join(h1: Subspace, h2: Subspace) -> Subspace:
    """span(H1 u H2): canonical span of the concatenated bases."""
    _require_same_ambient(h1, h2)
    return Subspace(h1.ambient_dim, h1.basis.hstack(h2.basis))


def meet_nullspace(h1: Subspace, h2: Subspace) -> Subspace:
    """
    H1 n H2 from the solutions of B1.x = B2.y.

    Args:
        h1: First subspace with basis B1
        h2: Second subspace with basis B2

    Returns:
        Intersection, spanned by B1.x over the null space of [B1 | -B2]
    """
    _require_same_ambient(h1, h2)
    d = h1.ambient_dim
    stacked = h1.basis.hstack(h2.basis.scale(-1))
    kernel = null_space(stacked)
    top = ExactMatrix(h1.dim, kernel.cols, [kernel.row(i) for i in range(h1.dim)])
    return Subspace(d, h1.basis @ top)


def meet_demorgan(h1: Subspace, h2: Subspace) -> Subspace:
    """H1 n H2 as (H1^perp v H2^perp)^perp."""
    _require_same_ambient(h1, h2)
    return orthocomplement(join(orthocomplement(h1), orthocomplement(h2)))


def meet(h1: Subspace, h2: Subspace, method: str = "nullspace") -> Subspace:
    """
    Intersection of two subspaces.

    Args:
        h1: First subspace
        h2: Second subspace
        method: "nullspace" (stacked system) or "demorgan" (through orthocomplements)

    Returns:
        Subspace
    """
    if method == "nullspace":
        return meet_nullspace(h1, h2)
    if method == "demorgan":
        return meet_demorgan(h1, h2)
    raise ValueError(f"Unknown meet method: {method}")


def leq(h1: Subspace, h2: Subspace) -> bool:
    """H1 is a subspace of H2."""
    _require_same_ambient(h1, h2)
    if h1.dim > h2.dim:
        return False
    return join(h1, h2) == h2


def orthocomplement(h: Subspace) -> Subspace:
    """Null space of adjoint(basis): every vector orthogonal to H."""
    return Subspace(h.ambient_dim, null_space(h.basis.adjoint()))


def relative_orthocomplement(h: Subspace, h0: Subspace) -> Subspace:
    """
    Orthocomplement of H inside H0.

    Args:
        h: Subspace below h0
        h0: Enclosing subspace

    Returns:
        R = H^perp ^ H0, with H ^ R = O and H v R = H0

    Raises:
        PreconditionError: If h is not below h0
    """
    if not leq(h, h0):
        logger.error(f"relative_orthocomplement: {h} is not below {h0}")
        raise PreconditionError("relative_orthocomplement requires leq(H, H0)")
    return meet(orthocomplement(h), h0)


@lru_cache(maxsize=4096)
def projector(h: Subspace) -> Projector:
    """
    Pi = A (A^dagger A)^-1 A^dagger from the canonical basis A; O maps to the zero matrix.

    Args:
        h: Subspace

    Returns:
        Projector with exact entries
    """
    d = h.ambient_dim
    if h.dim == 0:
        return Projector(d, ExactMatrix.zeros(d, d), 0)
    a = h.basis
    a_dag = a.adjoint()
    gram_inverse = invert_gram(a_dag @ a)
    return Projector(d, a @ gram_inverse @ a_dag, h.dim)


def projector_from_basis(vectors: Sequence[Sequence[ScalarLike]], d: int) -> Projector:
    """
    The projector formula applied to a caller-chosen independent basis (not canonicalized).

    Raises:
        SingularMatrixError: If the vectors are dependent
    """
    a = vector_matrix(vectors, d)
    a_dag = a.adjoint()
    return Projector(d, a @ invert_gram(a_dag @ a) @ a_dag, a.cols)


def dim_formula_check(h1: Subspace, h2: Subspace) -> bool:
    """dim(H1 v H2) + dim(H1 ^ H2) = dim(H1) + dim(H2)."""
    return join(h1, h2).dim + meet(h1, h2).dim == h1.dim + h2.dim


def commutator(p: Projector, q: Projector) -> ExactMatrix:
    """[P, Q] = PQ - QP."""
    return p @ q - q @ p


def commutes(p: Projector, q: Projector) -> bool:
    return commutator(p, q).is_zero()


def absorbs(p: Projector, q: Projector) -> bool:
    """P Q = Q, i.e. range(Q) lies in range(P)."""
    return p @ q == q.matrix


class SubspaceLattice(BaseLattice[Subspace]):
    """L(d) with orthocomplement as its complement."""

    def __init__(self, d: int):
        if d < 1:
            raise PreconditionError(f"Ambient dimension must be positive, got {d}")
        self.d = d

    def bottom(self) -> Subspace:
        return zero_space(self.d)

    def top(self) -> Subspace:
        return full_space(self.d)

    def join(self, a: Subspace, b: Subspace) -> Subspace:
        return join(a, b)

    def meet(self, a: Subspace, b: Subspace) -> Subspace:
        return meet(a, b)

    def leq(self, a: Subspace, b: Subspace) -> bool:
        return leq(a, b)

    def complement(self, a: Subspace) -> Subspace:
        return orthocomplement(a)


def modularity_check(h1: Subspace, h2: Subspace, h3: Subspace) -> bool:
    """Modular law for H1 below H3; raises PreconditionError otherwise."""
    _require_same_ambient(h1, h2, h3)
    return SubspaceLattice(h1.ambient_dim).modularity_check(h1, h2, h3)


def distributivity_counterexample(d: int = 3) -> Tuple[Subspace, Subspace, Subspace]:
    """
    Three distinct points of one line: x = span(e1), y = span(e2), z = span(e1 + e2).

    x ^ (y v z) = x while (x ^ y) v (x ^ z) = O.
    """
    if d < 2:
        raise PreconditionError("Non-distributivity needs ambient dimension at least 2")
    e = [[1 if i == j else 0 for i in range(d)] for j in range(2)]
    x = from_vectors([e[0]], d)
    y = from_vectors([e[1]], d)
    z = from_vectors([[a + b for a, b in zip(e[0], e[1])]], d)
    return x, y, z


def remark_counterexample(d: int = 3) -> Tuple[Projector, Projector]:
    """
    Two commuting projectors without absorption: Pi(span e1) and Pi(span e2).
    """
    if d < 2:
        raise PreconditionError("Counterexample needs ambient dimension at least 2")
    e1 = [1 if i == 0 else 0 for i in range(d)]
    e2 = [1 if i == 1 else 0 for i in range(d)]
    return projector(from_vectors([e1], d)), projector(from_vectors([e2], d))


def proportional(u: Sequence[ScalarLike], v: Sequence[ScalarLike]) -> bool:
    """Nonzero vectors u and v span the same ray."""
    u = [GaussianRational.coerce(x) for x in u]
    v = [GaussianRational.coerce(x) for x in v]
    if len(u) != len(v) or all(x.is_zero() for x in u) or all(x.is_zero() for x in v):
        return False
    return from_vectors([u, v], len(u)).dim == 1

