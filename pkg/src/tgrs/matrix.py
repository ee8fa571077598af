"""Dense matrices over a finite field.

An :class:`FMatrix` wraps a 2-D int64 array of element codes together with its
:class:`~tgrs.field.FieldSpec`. Entries are codes rather than
:class:`~tgrs.field.FieldElement` objects; ``M[i, j]`` and ``M.element(i, j)``
convert on demand.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, FieldMismatch
from .field import FieldElement, FieldSpec


class FMatrix:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside the code range of {field!r}")
        self.field = field
        self.data = arr

    # construction --------------------------------------------------------

    @classmethod
    def from_elements(cls, field: FieldSpec, rows: Sequence[Sequence]) -> FMatrix:
        """Build from nested sequences of codes, element strings or FieldElements."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls(field, np.zeros((0, 0), dtype=np.int64))
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(field, [[field.code(x) for x in r] for r in rows])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> FMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FMatrix:
        return cls(field, np.eye(n, dtype=np.int64))

    # basic protocol ------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx):
        return self.data[idx]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, int(self.data[i, j]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FMatrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FMatrix({self.field!r}, {self.rows}x{self.cols})"

    def to_strings(self) -> list[list[str]]:
        fmt = self.field.format
        return [[fmt(x) for x in row] for row in self.data.tolist()]

    def __str__(self) -> str:
        cells = self.to_strings()
        if not cells:
            return "[]"
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def to_json(self) -> list[list[str]]:
        return self.to_strings()

    @classmethod
    def from_json(cls, field: FieldSpec, rows: list[list[str]]) -> FMatrix:
        return cls.from_elements(field, rows)

    def copy(self) -> FMatrix:
        return FMatrix(self.field, self.data.copy())

    def _same_field(self, other: FMatrix) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # algebra -------------------------------------------------------------

    @property
    def T(self) -> FMatrix:
        return FMatrix(self.field, self.data.T.copy())

    def __matmul__(self, other: FMatrix) -> FMatrix:
        return matmul(self, other)

    def __add__(self, other: FMatrix) -> FMatrix:
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return FMatrix(self.field, self.field.add(self.data, other.data))

    def __sub__(self, other: FMatrix) -> FMatrix:
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return FMatrix(self.field, self.field.sub(self.data, other.data))

    def scale_columns(self, d) -> FMatrix:
        d = np.asarray(d, dtype=np.int64)
        if d.shape != (self.cols,):
            raise DimensionMismatch(f"need {self.cols} column scalars, got {d.shape}")
        return FMatrix(self.field, self.field.mul(self.data, d[None, :]))

    def columns(self, idx) -> FMatrix:
        return FMatrix(self.field, self.data[:, list(idx)])

    def hstack(self, other: FMatrix) -> FMatrix:
        self._same_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch(f"{self.rows} vs {other.rows} rows")
        return FMatrix(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: FMatrix) -> FMatrix:
        self._same_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"{self.cols} vs {other.cols} columns")
        return FMatrix(self.field, np.vstack([self.data, other.data]))

    def rref(self) -> tuple[FMatrix, list[int], int]:
        return rref(self)

    @property
    def rank(self) -> int:
        return rref(self)[2]

    def null_space(self) -> list[np.ndarray]:
        return null_space(self)

    def is_zero(self) -> bool:
        return not self.data.any()


# --- free functions ------------------------------------------------------


def rref(M: FMatrix) -> tuple[FMatrix, list[int], int]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns ``(R, pivots, rank)``; ``R`` keeps the shape of ``M`` with the
    zero rows at the bottom.
    """
    if M.data.size == 0:
        return M.copy(), [], 0
    R, piv = _kernels.rref(np.ascontiguousarray(M.data), *M.field.kernel_args)
    return FMatrix(M.field, R), [int(c) for c in piv], len(piv)


def row_space(M: FMatrix) -> FMatrix:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    R, _, r = rref(M)
    return FMatrix(M.field, R.data[:r])


def null_space(M: FMatrix) -> list[np.ndarray]:
    """Basis of the right kernel ``{x : M x^T = 0}``.

    One vector per free column in increasing order. The vector for free
    column ``f`` carries ``-1`` at ``f``, the RREF entry ``R[r, f]`` at the
    pivot column of row ``r`` and zero elsewhere.
    """
    F = M.field
    n = M.cols
    R, piv, r = rref(M)
    free = [c for c in range(n) if c not in set(piv)]
    minus_one = F.neg(1)
    basis = []
    for f in free:
        x = np.zeros(n, dtype=np.int64)
        x[f] = minus_one
        for row, pc in enumerate(piv):
            x[pc] = R.data[row, f]
        basis.append(x)
    return basis


@dataclass(frozen=True)
class Unique:
    x: np.ndarray


@dataclass(frozen=True)
class Affine:
    x0: np.ndarray
    kernel: list[np.ndarray]


@dataclass(frozen=True)
class NoSolution:
    pass


Solution = Unique | Affine | NoSolution


def solve_right(A: FMatrix, b) -> Solution:
    """Classify and solve ``A x = b``."""
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != A.rows:
        raise DimensionMismatch(f"A has {A.rows} rows, b has {b.shape[0]} entries")
    F = A.field
    aug = FMatrix(F, np.hstack([A.data, b[:, None]]))
    R, piv, r = rref(aug)
    if A.cols in piv:
        return NoSolution()
    x0 = np.zeros(A.cols, dtype=np.int64)
    for row, pc in enumerate(piv):
        x0[pc] = R.data[row, A.cols]
    if r == A.cols:
        return Unique(x0)
    return Affine(x0, null_space(A))


def matmul(A: FMatrix, B: FMatrix) -> FMatrix:
    A._same_field(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.shape} @ {B.shape}")
    out = _kernels.matmul(
        np.ascontiguousarray(A.data), np.ascontiguousarray(B.data), *A.field.kernel_args
    )
    return FMatrix(A.field, out)


def matvec(A: FMatrix, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64).reshape(-1, 1)
    return matmul(A, FMatrix(A.field, x)).data[:, 0]


def transpose(A: FMatrix) -> FMatrix:
    return A.T


def diag(field: FieldSpec, v) -> FMatrix:
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    out = np.zeros((v.size, v.size), dtype=np.int64)
    out[np.arange(v.size), np.arange(v.size)] = v
    return FMatrix(field, out)


def rank_of(field: FieldSpec, data) -> int:
    return rref(FMatrix(field, data))[2]
