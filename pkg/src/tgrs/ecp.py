"""Error-correcting pairs for (+)-ETGRS codes and the resulting decoder."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .code import DEFAULT_CAP, LinearCode
from .errors import InvalidSpec, LengthMismatch
from .matrix import FMatrix, NoSolution, Unique, diag, matvec, null_space, solve_right
from .twisted import TwistedSpec, egrs_matrix, etgrs, etgrs_parity_check, grs_matrix


@dataclass(frozen=True)
class EcpPair:
    A: LinearCode
    B: LinearCode
    t: int
    parity: Literal["odd", "even"]


def ecp_matrices(spec: TwistedSpec) -> tuple[FMatrix, FMatrix, int, str]:
    """Generator matrices of (A, B), the radius t and the parity of n - k.

    Odd n - k: A is GRS_{(n-k+1)/2}(S, 1) with a zero coordinate appended and
    B = EGRS_{(n-k-1)/2}(S, w/v). Even n - k: A = EGRS_{(n-k+2)/2}(S, 1) and
    B = EGRS_{(n-k)/2}(S, w/v) with its last column multiplied by -eta.
    """
    if not spec.extended:
        raise InvalidSpec("error-correcting pairs are built for the extended code")
    F = spec.field
    S, n, k = spec.points, spec.n, spec.k
    ones = np.ones(n, dtype=np.int64)
    wv = spec.w_over_v
    r = n - k
    if r % 2:
        t = (r - 1) // 2
        GA = grs_matrix(F, S, ones, (r + 1) // 2)
        GA = GA.hstack(FMatrix.zeros(F, GA.rows, 1))
        GB = egrs_matrix(F, S, wv, t)
        return GA, GB, t, "odd"
    t = r // 2
    GA = egrs_matrix(F, S, ones, (r + 2) // 2)
    GB = egrs_matrix(F, S, wv, t)
    scale = np.ones(n + 1, dtype=np.int64)
    scale[n] = F.neg(spec.eta)
    return GA, GB.scale_columns(scale), t, "even"


def build_ecp(spec: TwistedSpec) -> EcpPair:
    GA, GB, t, parity = ecp_matrices(spec)
    return EcpPair(LinearCode(GA), LinearCode(GB), t, parity)  # type: ignore[arg-type]


@dataclass(frozen=True)
class EcpReport:
    product_in_dual: bool
    dual_b_distance_ok: bool
    dim_a_ok: bool
    distance_sum_ok: bool
    witness_row: np.ndarray | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.product_in_dual and self.dual_b_distance_ok and self.dim_a_ok and self.distance_sum_ok

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.product_in_dual, self.dual_b_distance_ok, self.dim_a_ok, self.distance_sum_ok)

    def to_json(self) -> dict:
        return {
            "A*B in dual(C)": self.product_in_dual,
            "d(dual(B)) > t": self.dual_b_distance_ok,
            "dim(A) > t": self.dim_a_ok,
            "d(A) + d(C) > length": self.distance_sum_ok,
        }


def verify_ecp(A: LinearCode, B: LinearCode, C: LinearCode, t: int, cap: int = DEFAULT_CAP) -> EcpReport:
    """Check the four pair conditions. When the product escapes the dual,
    ``witness_row`` is a product row outside it."""
    if not A.n == B.n == C.n:
        raise LengthMismatch(f"lengths {A.n}, {B.n}, {C.n}")
    D = C.dual(0)
    P = A.schur_product(B)
    inside = D.contains(P.gen)
    witness = None
    if not inside:
        for row in P.gen.data:
            if not D.contains(row):
                witness = row.copy()
                break
    c2 = B.dual(0).min_distance(cap) > t if B.k < B.n else True
    c3 = A.k > t
    c4 = A.min_distance(cap) + C.min_distance(cap) > C.n
    return EcpReport(inside, c2, c3, c4, witness)


# --- decoding -------------------------------------------------------------


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of a decode, with every intermediate quantity.

    ``tag`` is CODEWORD, ALREADY_CODEWORD or TOO_MANY_ERRORS. ``zeros`` uses
    1-based coordinate indices.
    """

    tag: Literal["CODEWORD", "ALREADY_CODEWORD", "TOO_MANY_ERRORS"]
    t: int
    syndrome: np.ndarray
    codeword: np.ndarray | None = None
    error: np.ndarray | None = None
    kernel: list[np.ndarray] = field(default_factory=list)
    u: np.ndarray | None = None
    locator: np.ndarray | None = None
    zeros: tuple[int, ...] = ()
    reason: str = ""

    def to_json(self, fmt) -> dict:
        def vec(x):
            return None if x is None else [fmt(a) for a in x]

        return {
            "outcome": self.tag,
            "t": self.t,
            "syndrome": vec(self.syndrome),
            "kernel": [vec(b) for b in self.kernel],
            "u": vec(self.u),
            "locator": vec(self.locator),
            "Z": list(self.zeros),
            "error": vec(self.error),
            "codeword": vec(self.codeword),
            "error_support": None if self.error is None else [int(i) + 1 for i in np.flatnonzero(self.error)],
            "reason": self.reason,
        }


def decode(spec: TwistedSpec, y) -> DecodeOutcome:
    """Error-correcting-pair decoder for the extended code of ``spec``."""
    F = spec.field
    y = np.asarray([F.code(a) for a in y] if not isinstance(y, np.ndarray) else y, dtype=np.int64)
    if y.shape != (spec.n + 1,):
        raise LengthMismatch(f"received vector of length {y.shape[0]}, expected {spec.n + 1}")
    H = etgrs_parity_check(spec)
    syn = matvec(H, y)
    GA, GB, t, _ = ecp_matrices(spec)
    if not syn.any():
        return DecodeOutcome("ALREADY_CODEWORD", t, syn, codeword=y.copy(), error=np.zeros_like(y))

    M = GB @ diag(F, y) @ GA.T
    kernel = null_space(M)
    if not kernel:
        return DecodeOutcome("TOO_MANY_ERRORS", t, syn, reason="trivial kernel")
    u = kernel[0]
    loc = matvec(GA.T, u)
    Z = np.flatnonzero(loc == 0)
    base = dict(t=t, syndrome=syn, kernel=kernel, u=u, locator=loc, zeros=tuple(int(i) + 1 for i in Z))
    if Z.size == 0:
        return DecodeOutcome("TOO_MANY_ERRORS", reason="empty zero set", **base)

    sol = solve_right(H.columns(Z), syn)
    if isinstance(sol, NoSolution):
        return DecodeOutcome("TOO_MANY_ERRORS", reason="restricted system inconsistent", **base)
    if not isinstance(sol, Unique):
        return DecodeOutcome("TOO_MANY_ERRORS", reason="restricted system not unique", **base)
    x = np.zeros_like(y)
    x[Z] = sol.x
    if np.count_nonzero(x) > t:
        return DecodeOutcome("TOO_MANY_ERRORS", reason="error weight above t", **base)
    c = F.sub(y, x)
    return DecodeOutcome("CODEWORD", codeword=c, error=x, **base)


def ecp_code(spec: TwistedSpec) -> LinearCode:
    return etgrs(spec)
