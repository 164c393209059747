"""
Floating-point mirror of ExactMatrix, used for display and measurement simulation.
"""
from typing import Sequence

import numpy as np
import scipy.linalg

from constants.tolerances import TOLERANCES
from utils.exceptions import NonFiniteError, ShapeMismatchError


class FloatMatrix:
    """Immutable complex128 matrix with finite entries."""

    __slots__ = ("_data",)

    def __init__(self, data):
        array = np.array(data, dtype=np.complex128)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        if array.ndim != 2:
            raise ShapeMismatchError(f"FloatMatrix needs a 2-d array, got {array.ndim}-d")
        if not np.all(np.isfinite(array)):
            raise NonFiniteError("FloatMatrix entries must be finite")
        array.setflags(write=False)
        self._data = array

    @property
    def array(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    def __getitem__(self, index):
        return self._data[index]

    def adjoint(self) -> "FloatMatrix":
        return FloatMatrix(self._data.conj().T)

    def __matmul__(self, other: "FloatMatrix") -> "FloatMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        return FloatMatrix(self._data @ other.array)

    def apply(self, vector: Sequence[complex]) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.complex128)
        if vector.shape != (self.cols,):
            raise ShapeMismatchError(f"Vector of shape {vector.shape} for {self.shape} matrix")
        return self._data @ vector

    def rank(self, rel_threshold: float = TOLERANCES.FLOAT_RANK) -> int:
        return float_rank(self, rel_threshold)

    def rounded(self, decimals: int = 4) -> np.ndarray:
        """Entries rounded as the worked-example tables print them."""
        return np.round(self._data, decimals)

    def allclose(self, other, atol: float) -> bool:
        other = other.array if isinstance(other, FloatMatrix) else np.asarray(other, dtype=np.complex128)
        if other.shape != self.shape:
            return False
        diff = self._data - other
        return bool(np.all(np.abs(diff.real) <= atol) and np.all(np.abs(diff.imag) <= atol))

    def __repr__(self) -> str:
        return f"FloatMatrix({self.rows}x{self.cols})"


def float_rank(m: FloatMatrix, rel_threshold: float = TOLERANCES.FLOAT_RANK) -> int:
    """
    Numerical rank by column-pivoted QR.

    A diagonal entry of R counts when its magnitude exceeds rel_threshold times the
    largest column norm of m.

    Args:
        m: Float matrix
        rel_threshold: Relative pivot threshold

    Returns:
        Rank estimate
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    largest = float(np.max(np.linalg.norm(m.array, axis=0)))
    if largest == 0.0:
        return 0
    r = scipy.linalg.qr(m.array, mode="r", pivoting=True)[0]
    diagonal = np.abs(np.diag(r))
    return int(np.sum(diagonal > rel_threshold * largest))
