"""Error distance, covering radius and deep holes of duals of (+)-TGRS codes."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

import numpy as np

from . import _kernels
from .code import DEFAULT_CAP, LinearCode
from .errors import Class2Unavailable, EnumerationCapExceeded, LengthMismatch
from .twisted import TwistedSpec, powers, tgrs

SYNDROME_CAP = 10**6
WORK_CAP = 10**9


def error_distance(u, C: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum weight of the coset ``u + C``."""
    u = np.asarray(u, dtype=np.int64).reshape(-1)
    if u.shape[0] != C.n:
        raise LengthMismatch(f"vector length {u.shape[0]} vs code length {C.n}")
    if C.enumeration_size() > cap:
        raise EnumerationCapExceeded(f"q^k = {C.enumeration_size()} exceeds cap {cap}")
    dist, _ = C._enumerate(offset=u)
    return int(np.flatnonzero(dist)[0])


def coset_leader_weights(C: LinearCode, cap: int = SYNDROME_CAP, work_cap: int = WORK_CAP) -> np.ndarray:
    """Leader weight for every syndrome, indexed by ``sum_i s_i q^i``."""
    F = C.field
    r = C.n - C.k
    if r == 0:
        return np.zeros(1, dtype=np.int64)
    if F.q**r > cap:
        raise EnumerationCapExceeded(f"q^(n-k) = {F.q**r} syndromes exceed cap {cap}")
    work = sum(comb(C.n, w) * (F.q - 1) ** w for w in range(r + 1))
    if work > work_cap:
        raise EnumerationCapExceeded(f"weight-layered search needs up to {work} vectors, cap {work_cap}")
    H = C.parity_check().data
    e = np.arange(F.q, dtype=np.int64)
    scaled_cols = F.mul(H.T[:, None, :], e[None, :, None])  # (n, q, r)
    qpow = F.q ** np.arange(r, dtype=np.int64)
    radius, leader = _kernels.syndrome_cover(np.ascontiguousarray(scaled_cols), qpow, F.p, F.m)
    if radius < 0:  # pragma: no cover
        raise AssertionError("syndrome search ended with uncovered cosets")
    return leader


def covering_radius(C: LinearCode, cap: int = SYNDROME_CAP, work_cap: int = WORK_CAP) -> int:
    """Largest coset-leader weight, found syndrome-first by increasing weight."""
    return int(coset_leader_weights(C, cap, work_cap).max())


def is_deep_hole(u, C: LinearCode, cap: int = DEFAULT_CAP, radius: int | None = None) -> bool:
    if radius is None:
        radius = covering_radius(C)
    return error_distance(u, C, cap) == radius


@dataclass(frozen=True)
class DeepHoleSpec:
    """Deep-hole vector ``u_i = s a_i^t w_i / v_i`` for ``tgrs(base)``'s dual.

    Class 1 uses ``t = n-k-1`` and ``s = eta^(-1)``; class 2 uses ``t = n-k``
    and ``s = (1 + eta sum(a))^(-1)``.
    """

    base: TwistedSpec
    t_choice: int
    s: int
    u: tuple[int, ...]

    @classmethod
    def create(cls, base: TwistedSpec, klass: Literal[1, 2] = 1) -> DeepHoleSpec:
        F = base.field
        n, k = base.n, base.k
        if klass == 1:
            t, s = n - k - 1, F.inv(base.eta)
        elif klass == 2:
            c = base.one_plus_eta_sum
            if c == 0:
                raise Class2Unavailable("1 + eta * sum(S) is zero, class 2 does not exist")
            t, s = n - k, F.inv(c)
        else:
            raise ValueError(f"class must be 1 or 2, got {klass}")
        at = powers(F, base.points, t)[t]
        u = F.mul(F.mul(at, base.w_over_v), s)
        return cls(base, t, s, tuple(int(x) for x in u))

    @property
    def vector(self) -> np.ndarray:
        return np.asarray(self.u, dtype=np.int64)


def deep_hole_vector(base: TwistedSpec, klass: Literal[1, 2] = 1) -> np.ndarray:
    return DeepHoleSpec.create(base, klass).vector


def second_extension_of_tgrs(base: TwistedSpec, klass: Literal[1, 2] = 1) -> LinearCode:
    """``tgrs(base)`` extended by the coordinate ``sum_i u_i c_i``."""
    return tgrs(base).second_extend(deep_hole_vector(base, klass))
