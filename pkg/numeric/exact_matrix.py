"""
Dense matrices over Gaussian rationals with exact elimination primitives.

Every lattice predicate (rank, subspace equality, dimension) is decided here, without
tolerances.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from numeric.gaussian import GaussianRational, ONE, ZERO, ScalarLike
from utils.exceptions import NonFiniteError, ShapeMismatchError, SingularMatrixError
from utils.logger import logger

Row = Tuple[GaussianRational, ...]


class ExactMatrix:
    """Immutable dense matrix with GaussianRational entries, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[ScalarLike]]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeMismatchError(
                f"Expected {rows}x{cols} entries, got {len(data)} rows"
            )
        self.rows = rows
        self.cols = cols
        self._data: Tuple[Row, ...] = tuple(
            tuple(GaussianRational.coerce(x) for x in r) for r in data
        )

    # construction

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None) -> "ExactMatrix":
        """
        Build a matrix from a list of rows.

        Args:
            data: Row-major nested sequence
            cols: Column count, required only when there are no rows

        Returns:
            ExactMatrix
        """
        n_cols = len(data[0]) if data else (cols or 0)
        return cls(len(data), n_cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int) -> "ExactMatrix":
        """
        Build a rows x len(columns) matrix whose j-th column is columns[j].

        Args:
            columns: Column vectors, each of length rows
            rows: Ambient row count (needed when columns is empty)

        Returns:
            ExactMatrix
        """
        for c in columns:
            if len(c) != rows:
                raise ShapeMismatchError(f"Column of length {len(c)} in a {rows}-row matrix")
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    # access

    def __getitem__(self, index: Tuple[int, int]) -> GaussianRational:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> Row:
        return self._data[i]

    def column(self, j: int) -> Row:
        return tuple(r[j] for r in self._data)

    def columns(self) -> List[Row]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> List[List[GaussianRational]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(repr(x) for x in r) for r in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    # arithmetic

    def adjoint(self) -> "ExactMatrix":
        return adjoint(self)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)
        ])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(self.rows, self.cols, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)
        ])

    def scale(self, factor: ScalarLike) -> "ExactMatrix":
        factor = GaussianRational.coerce(factor)
        return ExactMatrix(self.rows, self.cols, [[factor * x for x in r] for r in self._data])

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ShapeMismatchError(f"Cannot stack {self.shape} beside {other.shape}")
        return ExactMatrix(self.rows, self.cols + other.cols, [
            list(ra) + list(rb) for ra, rb in zip(self._data, other._data)
        ])

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ShapeMismatchError(f"Trace of non-square {self.shape} matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self._data[i][i]
        return total

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self._data for x in r)

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == adjoint(self)

    def _require_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Shape mismatch: {self.shape} vs {other.shape}")


def adjoint(m: ExactMatrix) -> ExactMatrix:
    """
    Conjugate transpose.

    Args:
        m: Matrix

    Returns:
        ExactMatrix whose (i, j) entry is conjugate(m(j, i))
    """
    return ExactMatrix(m.cols, m.rows, [
        [m[j, i].conjugate() for j in range(m.rows)] for i in range(m.cols)
    ])


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """
    Exact matrix product.

    Args:
        a: Left factor
        b: Right factor

    Returns:
        ExactMatrix a.b

    Raises:
        ShapeMismatchError: If a.cols != b.rows
    """
    if a.cols != b.rows:
        raise ShapeMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    b_cols = b.columns()
    data = []
    for i in range(a.rows):
        row = a.row(i)
        out = []
        for col in b_cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            out.append(acc)
        data.append(out)
    return ExactMatrix(a.rows, b.cols, data)


def _rref_rows(rows: List[List[GaussianRational]], n_cols: int) -> Tuple[List[List[GaussianRational]], List[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination, in place on a list of rows.

    Returns:
        (nonzero rows, pivot column of each row)
    """
    pivots: List[int] = []
    r = 0
    n_rows = len(rows)
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i == r or rows[i][c].is_zero():
                continue
            f = rows[i][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rcef(m: ExactMatrix) -> Tuple[ExactMatrix, int]:
    """
    Reduced column echelon form of the column space of m.

    Column operations on m are row operations on its (plain) transpose, so the canonical
    basis is the transposed reduced row echelon form of m^T. Each basis column has a
    leading 1 in its pivot row, zeros in the pivot rows of the other columns, and pivot
    rows increase from left to right. Zero columns are dropped.

    Ordering: column j pivots strictly above column j + 1, so the first column carries
    the topmost pivot. The mirrored convention with descending pivots is not used.
    Either convention is canonical for the span; only this one is ever produced.

    Args:
        m: Matrix whose column span is canonicalized

    Returns:
        (canonical basis matrix with m.rows rows, rank)
    """
    rows = [list(m.column(j)) for j in range(m.cols)]
    reduced, pivots = _rref_rows(rows, m.rows)
    rank = len(pivots)
    canonical = ExactMatrix.from_columns(reduced, m.rows)
    logger.debug(f"rcef: {m.rows}x{m.cols} -> rank {rank}, pivot rows {pivots}")
    return canonical, rank


def rank(m: ExactMatrix) -> int:
    """Exact rank."""
    return rcef(m)[1]


def null_space(m: ExactMatrix) -> ExactMatrix:
    """
    Basis of {x : m.x = 0}.

    Args:
        m: Matrix

    Returns:
        ExactMatrix of shape (m.cols, m.cols - rank(m)) with m.result = 0 exactly
    """
    reduced, pivots = _rref_rows(m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(x)
    return ExactMatrix.from_columns(basis, m.cols)


def solve_exact(m: ExactMatrix, b: Sequence[ScalarLike]) -> Optional[List[GaussianRational]]:
    """
    One exact solution of m.x = b, with free variables set to zero.

    Args:
        m: Coefficient matrix
        b: Right-hand side of length m.rows

    Returns:
        Solution vector, or None when the system is inconsistent
    """
    if len(b) != m.rows:
        raise ShapeMismatchError(f"Right-hand side of length {len(b)} for {m.rows} equations")
    augmented = [list(r) + [GaussianRational.coerce(v)] for r, v in zip(m.to_rows(), b)]
    reduced, pivots = _rref_rows(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[m.cols]
    return x


def invert_gram(g: ExactMatrix) -> ExactMatrix:
    """
    Exact inverse of a Gram matrix A^dagger A of a full-column-rank A.

    Args:
        g: Square Hermitian positive definite matrix

    Returns:
        ExactMatrix with g.result = I

    Raises:
        SingularMatrixError: If g is singular, meaning the caller's basis was not independent
    """
    if g.rows != g.cols:
        raise ShapeMismatchError(f"Gram matrix must be square, got {g.shape}")
    n = g.rows
    augmented = [list(g.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    reduced, pivots = _rref_rows(augmented, n)
    if pivots != list(range(n)):
        logger.error(f"Gram matrix of size {n} is singular (rank {len(pivots)})")
        raise SingularMatrixError(
            f"Gram matrix has rank {len(pivots)} < {n}; basis columns were not independent"
        )
    return ExactMatrix(n, n, [row[n:] for row in reduced])


def to_float(m: ExactMatrix) -> "FloatMatrix":
    """
    Convert to the float mirror, rounding each rational component to the nearest double.

    Args:
        m: Exact matrix

    Returns:
        FloatMatrix

    Raises:
        NonFiniteError: If a component overflows
    """
    from numeric.float_matrix import FloatMatrix

    data = np.zeros((m.rows, m.cols), dtype=np.complex128)
    try:
        for i in range(m.rows):
            for j in range(m.cols):
                x = m[i, j]
                data[i, j] = complex(float(x.re), float(x.im))
    except OverflowError as e:
        logger.error(f"Entry of {m.rows}x{m.cols} matrix overflows a double")
        raise NonFiniteError(str(e)) from e
    return FloatMatrix(data)


def vector_matrix(vectors: Iterable[Sequence[ScalarLike]], d: int) -> ExactMatrix:
    """Columns-from-vectors helper that validates each vector has length d."""
    vectors = [list(v) for v in vectors]
    for v in vectors:
        if len(v) != d:
            raise ShapeMismatchError(f"Vector of length {len(v)} in ambient dimension {d}")
    return ExactMatrix.from_columns(vectors, d)
