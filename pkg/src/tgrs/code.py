"""Generic linear codes over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatch,
    EnumerationCapExceeded,
    EOutOfRange,
    FieldMismatch,
    LengthMismatch,
    ZeroMatrix,
)
from .field import FieldSpec
from .matrix import FMatrix, null_space, rref

DEFAULT_CAP = 10**7

Tag = Literal["MDS", "AMDS", "NMDS", "OTHER"]


@dataclass(frozen=True)
class SingletonClass:
    tag: Tag
    d: int
    dual_d: int

    def to_json(self) -> dict:
        return {"tag": self.tag, "d": self.d, "dual_d": self.dual_d}


class LinearCode:
    """An [n, k] code given by a full-rank k x n generator matrix.

    A full-rank input generator is kept as given, so printed matrices survive
    construction; a rank-deficient one is replaced by its reduced row basis.
    Equality compares reduced row echelon forms.
    """

    def __init__(self, gen: FMatrix):
        if gen.rows == 0 or gen.is_zero():
            raise ZeroMatrix("generator matrix is zero")
        R, piv, r = rref(gen)
        self.field: FieldSpec = gen.field
        self.gen: FMatrix = gen.copy() if r == gen.rows else FMatrix(gen.field, R.data[:r])
        self._canon = FMatrix(gen.field, R.data[:r])
        self._pivots = piv
        self.n = gen.cols
        self.k = r
        self._d: int | None = None
        self._wd: np.ndarray | None = None
        self._profile: tuple[np.ndarray, np.ndarray] | None = None
        self._dual: LinearCode | None = None

    # identity ------------------------------------------------------------

    @property
    def canonical(self) -> FMatrix:
        return self._canon

    @property
    def info_set(self) -> list[int]:
        return list(self._pivots)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self._canon == other._canon
        )

    def __hash__(self) -> int:
        return hash(self._canon)

    def __repr__(self) -> str:
        d = f",{self._d}" if self._d is not None else ""
        return f"LinearCode[{self.n},{self.k}{d}]_{self.field.q}"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "generator": self.gen.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> LinearCode:
        F = FieldSpec.from_json(d["field"])
        return cls(FMatrix.from_json(F, d["generator"]))

    # membership ----------------------------------------------------------

    def _check_compatible(self, other: LinearCode) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.n != other.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n}")

    def contains(self, x) -> bool:
        """True if every row of ``x`` (a vector or matrix) lies in the code."""
        x = np.atleast_2d(np.asarray(x.data if isinstance(x, FMatrix) else x, dtype=np.int64))
        if x.shape[1] != self.n:
            raise LengthMismatch(f"vector length {x.shape[1]} vs code length {self.n}")
        stacked = FMatrix(self.field, np.vstack([self._canon.data, x]))
        return rref(stacked)[2] == self.k

    def is_subcode_of(self, other: LinearCode) -> bool:
        self._check_compatible(other)
        return other.contains(self._canon)

    def encode(self, msg) -> np.ndarray:
        msg = np.asarray(msg, dtype=np.int64).reshape(1, -1)
        if msg.shape[1] != self.k:
            raise DimensionMismatch(f"message length {msg.shape[1]} vs k={self.k}")
        return (FMatrix(self.field, msg) @ self.gen).data[0]

    def random_codeword(self, rng: np.random.Generator) -> np.ndarray:
        return self.encode(self.field.random(rng, self.k))

    # duals ---------------------------------------------------------------

    def dual(self, e: int = 0, method: Literal["kernel", "frobenius"] = "kernel") -> LinearCode:
        """e-Galois dual ``{y : sum_i x_i y_i^(p^e) = 0 for all x in C}``.

        ``kernel`` takes the Euclidean kernel ``K`` of the generator and maps
        it through ``z -> z^(p^(m-e))``; ``frobenius`` applies that map to the
        code first and then takes the Euclidean kernel.
        """
        F = self.field
        if not 0 <= e < F.m:
            raise EOutOfRange(f"e={e} outside [0, {F.m})")
        if e == 0 and self._dual is not None:
            return self._dual
        back = (F.m - e) % F.m
        if method == "kernel":
            basis = null_space(self._canon)
            if not basis:
                raise ZeroMatrix("the code is the full space; its dual is zero")
            K = np.vstack(basis)
            out = LinearCode(FMatrix(F, F.frob(K, back) if back else K))
        elif method == "frobenius":
            G = F.frob(self._canon.data, back) if back else self._canon.data
            out = LinearCode(FMatrix(F, G)).dual(0)
        else:
            raise ValueError(f"unknown method {method!r}")
        if e == 0:
            self._dual = out
        return out

    def parity_check(self) -> FMatrix:
        return self.dual(0).gen

    def is_self_dual(self, e: int = 0) -> bool:
        if not 0 <= e < self.field.m:
            raise EOutOfRange(f"e={e} outside [0, {self.field.m})")
        if 2 * self.k != self.n:
            return False
        return self == self.dual(e)

    # distances -----------------------------------------------------------

    def _enumerate(self, offset=None) -> tuple[np.ndarray, np.ndarray]:
        F = self.field
        scaled = _kernels.scaled_rows(self._canon.data, F.exp, F.log, F.q)
        off = np.zeros(self.n, dtype=np.int64) if offset is None else np.asarray(offset, dtype=np.int64)
        return _kernels.coset_weights(np.ascontiguousarray(scaled), off, F.p, F.m)

    def enumeration_size(self) -> int:
        return self.field.q**self.k

    def weight_profile(self, cap: int = DEFAULT_CAP) -> tuple[np.ndarray, np.ndarray]:
        """Weight distribution and, per weight, how many codewords of that
        weight are nonzero at each coordinate."""
        if self._profile is None:
            if self.enumeration_size() > cap:
                raise EnumerationCapExceeded(f"q^k = {self.enumeration_size()} exceeds cap {cap}")
            self._profile = self._enumerate()
            self._wd = self._profile[0]
        return self._profile

    def weight_distribution(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        return self.weight_profile(cap)[0]

    def min_distance(self, cap: int = DEFAULT_CAP) -> int:
        """Minimum distance by codeword enumeration, or, when q^k is over the
        cap, by the smallest dependent column set of a parity-check matrix."""
        if self._d is not None:
            return self._d
        if self._wd is not None or self.enumeration_size() <= cap:
            wd = self.weight_distribution(cap)
            nz = np.flatnonzero(wd[1:])
            self._d = int(nz[0]) + 1
            return self._d
        if self.k == self.n:
            self._d = 1
            return 1
        wmax = self.n - self.k + 1
        if _kernels.dependent_search_cost(self.n, wmax) > cap:
            raise EnumerationCapExceeded(
                f"q^k = {self.enumeration_size()} and the column search both exceed cap {cap}"
            )
        F = self.field
        H = np.ascontiguousarray(self.parity_check().data)
        self._d = int(_kernels.smallest_dependent(H, wmax, *F.kernel_args))
        return self._d

    def classify_singleton(self, cap: int = DEFAULT_CAP) -> SingletonClass:
        n, k = self.n, self.k
        d = self.min_distance(cap)
        dual_d = self.dual(0).min_distance(cap) if k < n else 0
        if d == n - k + 1:
            tag: Tag = "MDS"
        elif d == n - k:
            tag = "NMDS" if dual_d == k else "AMDS"
        else:
            tag = "OTHER"
        return SingletonClass(tag, d, dual_d)

    # constructions -------------------------------------------------------

    def schur_product(self, other: LinearCode) -> LinearCode:
        self._check_compatible(other)
        A, B = self.gen.data, other.gen.data
        rows = self.field.mul(A[:, None, :], B[None, :, :]).reshape(-1, self.n)
        return LinearCode(FMatrix(self.field, rows))

    def schur_square(self) -> LinearCode:
        return self.schur_product(self)

    def first_extend(self, g) -> LinearCode:
        """Append the column ``g`` (length k) to the generator."""
        g = np.asarray(g, dtype=np.int64).reshape(-1)
        if g.shape[0] != self.k:
            raise DimensionMismatch(f"column of length {g.shape[0]} vs k={self.k}")
        return LinearCode(FMatrix(self.field, np.hstack([self.gen.data, g[:, None]])))

    def second_extend(self, u) -> LinearCode:
        """Append the coordinate ``sum_i u_i c_i`` to every codeword."""
        u = np.asarray(u, dtype=np.int64).reshape(-1)
        if u.shape[0] != self.n:
            raise DimensionMismatch(f"vector of length {u.shape[0]} vs n={self.n}")
        col = (self.gen @ FMatrix(self.field, u[:, None])).data
        return LinearCode(FMatrix(self.field, np.hstack([self.gen.data, col])))

    def puncture(self, positions) -> LinearCode:
        drop = set(int(i) for i in np.atleast_1d(positions))
        keep = [j for j in range(self.n) if j not in drop]
        return LinearCode(FMatrix(self.field, self.gen.data[:, keep]))

    def frobenius(self, e: int) -> LinearCode:
        return LinearCode(FMatrix(self.field, self.field.frob(self.gen.data, e)))

    def monomial_image(self, perm, scale) -> LinearCode:
        """Code whose coordinate j is ``scale[j]`` times coordinate ``perm[j]``."""
        perm = np.asarray(perm, dtype=np.int64)
        scale = np.asarray(scale, dtype=np.int64)
        return LinearCode(FMatrix(self.field, self.field.mul(self.gen.data[:, perm], scale[None, :])))

    def __add__(self, other: LinearCode) -> LinearCode:
        """Sum of subspaces."""
        self._check_compatible(other)
        return LinearCode(FMatrix(self.field, np.vstack([self.gen.data, other.gen.data])))


def code_from_generator(G: FMatrix) -> LinearCode:
    return LinearCode(G)


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(FMatrix.identity(field, n))
