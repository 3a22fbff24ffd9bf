from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .PrimeField import PrimeField

# inner products are accumulated in chunks so int64 never overflows
_INT64_LIMIT = 2 ** 63 - 1


def mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of two residue arrays reduced mod p

    Args:
      a: np.ndarray: Left factor, entries in [0, p)
      b: np.ndarray: Right factor, entries in [0, p)
      p: int: The modulus

    Returns:
      np.ndarray: The reduced int64 product
    """
    inner = a.shape[1]
    chunk = max(1, _INT64_LIMIT // max(1, (p - 1) ** 2))
    if inner <= chunk:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, inner, chunk):
        stop = min(inner, start + chunk)
        out = (out + (a[:, start:stop] @ b[start:stop, :]) % p) % p
    return out


class Mat:
    """An immutable dense matrix over a prime field

    Attributes:
      field: PrimeField: The field the entries live in
      array: np.ndarray: A read-only int64 array of residues in [0, p)
    """
    __slots__ = ("field", "array")

    def __init__(self: Mat, field: PrimeField, array: np.ndarray | Sequence):
        a = np.array(array, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"matrix data must be two dimensional, got {a.ndim} dimensions")
        a %= field.p
        a.flags.writeable = False
        self.field = field
        self.array = a

    @classmethod
    def from_rows(
            cls,
            field: PrimeField,
            rows: Sequence[Sequence[int]],
            cols: int | None = None
    ) -> Mat:
        """Build a matrix from a list of rows

        Args:
          field: PrimeField: The field
          rows: Sequence[Sequence[int]]: The rows
          cols: int | None: (Default value = None)
            The column count, needed when there are no rows

        Returns:
          Mat: The matrix
        """
        if len(rows) == 0:
            return cls.zeros(field, 0, cols or 0)
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValueError(f"ragged rows of lengths {sorted(widths)}")
        if cols is not None and widths != {cols}:
            raise ValueError(f"expected {cols} columns, got {widths.pop()}")
        return cls(field, np.array([[int(x) for x in row] for row in rows], dtype=np.int64))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> Mat:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> Mat:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def scalar(cls, field: PrimeField, n: int, value: int) -> Mat:
        return cls(field, np.eye(n, dtype=np.int64) * (int(value) % field.p))

    @classmethod
    def column_vector(cls, field: PrimeField, values: Iterable[int]) -> Mat:
        values = [int(x) for x in values]
        return cls(field, np.array(values, dtype=np.int64).reshape(len(values), 1))

    @property
    def p(self: Mat) -> int:
        return self.field.p

    @property
    def rows(self: Mat) -> int:
        return self.array.shape[0]

    @property
    def cols(self: Mat) -> int:
        return self.array.shape[1]

    @property
    def shape(self: Mat) -> tuple[int, int]:
        return self.array.shape

    @property
    def entries(self: Mat) -> tuple[int, ...]:
        """The entries in row-major order"""
        return tuple(int(x) for x in self.array.ravel())

    @property
    def T(self: Mat) -> Mat:
        return Mat(self.field, self.array.T)

    def _check_field(self: Mat, other: Mat) -> None:
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} and {other.field}")

    def __matmul__(self: Mat, other: Mat) -> Mat:
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Mat(self.field, mulmod(self.array, other.array, self.p))

    def __add__(self: Mat, other: Mat) -> Mat:
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return Mat(self.field, self.array + other.array)

    def __sub__(self: Mat, other: Mat) -> Mat:
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"cannot subtract {other.shape} from {self.shape}")
        return Mat(self.field, self.array - other.array)

    def __neg__(self: Mat) -> Mat:
        return Mat(self.field, -self.array)

    def __mul__(self: Mat, scalar: int) -> Mat:
        return Mat(self.field, self.array * (int(scalar) % self.p))

    __rmul__ = __mul__

    def __eq__(self: Mat, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.array_equal(self.array, other.array)))

    def __hash__(self: Mat) -> int:
        return hash((self.field.p, self.shape, self.array.tobytes()))

    def __repr__(self: Mat) -> str:
        return f"Mat({self.field}, {self.to_list()!r}, shape={self.shape})"

    def is_zero(self: Mat) -> bool:
        return not self.array.any()

    def is_square(self: Mat) -> bool:
        return self.rows == self.cols

    def to_list(self: Mat) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.array]

    def column(self: Mat, j: int) -> Mat:
        return Mat(self.field, self.array[:, j:j + 1])

    def take_columns(self: Mat, indices: Sequence[int]) -> Mat:
        return Mat(self.field, self.array[:, list(indices)].reshape(self.rows, len(indices)))

    def take_rows(self: Mat, indices: Sequence[int]) -> Mat:
        return Mat(self.field, self.array[list(indices), :].reshape(len(indices), self.cols))

    def block(self: Mat, row_slice: slice, col_slice: slice) -> Mat:
        return Mat(self.field, self.array[row_slice, col_slice])

    def power(self: Mat, k: int) -> Mat:
        if not self.is_square():
            raise ValueError(f"only square matrices have powers, got {self.shape}")
        result = Mat.identity(self.field, self.rows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def hstack(field: PrimeField, mats: Sequence[Mat], rows: int | None = None) -> Mat:
    """Concatenate matrices side by side; rows is needed when mats is empty"""
    if not mats:
        return Mat.zeros(field, rows or 0, 0)
    return Mat(field, np.hstack([m.array for m in mats]))


def vstack(field: PrimeField, mats: Sequence[Mat], cols: int | None = None) -> Mat:
    """Stack matrices vertically; cols is needed when mats is empty"""
    if not mats:
        return Mat.zeros(field, 0, cols or 0)
    return Mat(field, np.vstack([m.array for m in mats]))


def block_diag(field: PrimeField, mats: Sequence[Mat]) -> Mat:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        out[r:r + m.rows, c:c + m.cols] = m.array
        r += m.rows
        c += m.cols
    return Mat(field, out)
