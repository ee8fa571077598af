"""GRS, EGRS and (+)-twisted GRS codes with their extensions.

The (+)-TGRS code of dimension k evaluates the polynomials
``f_0 + f_1 x + ... + f_{k-1} x^{k-1} + eta f_{k-1} x^k`` at the points of S
and scales coordinate i by v_i. The extended code appends the coefficient
``f_{k-1}`` as an extra coordinate.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Sequence
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Literal

import numpy as np

from .code import LinearCode, SingletonClass
from .errors import CombinatorialCapExceeded, DuplicatePoints, InvalidSpec
from .field import FieldSpec
from .matrix import FMatrix

DEFAULT_SUBSET_CAP = 10**7
MITM_THRESHOLD = 10**5


# --- basic vectors --------------------------------------------------------


def _check_points(F: FieldSpec, S: Sequence[int]) -> np.ndarray:
    S = np.asarray([int(a) for a in S], dtype=np.int64)
    if S.size and (S.min() < 0 or S.max() >= F.q):
        raise InvalidSpec(f"evaluation point outside {F!r}")
    if len(set(S.tolist())) != S.size:
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    return S


def w_vector(F: FieldSpec, S: Sequence[int]) -> np.ndarray:
    """``w_i = prod_{j != i} (a_i - a_j)^(-1)``."""
    S = _check_points(F, S)
    n = S.size
    if n < 2:
        raise InvalidSpec("need at least two points")
    diff = F.sub(S[:, None], S[None, :])
    diff[np.arange(n), np.arange(n)] = 1
    prods = np.array([F.prod(row) for row in diff], dtype=np.int64)
    return F.inv(prods)


def powers(F: FieldSpec, S: np.ndarray, top: int) -> np.ndarray:
    """Rows a^0, a^1, ..., a^top (pow(0, 0) = 1)."""
    out = np.empty((top + 1, S.size), dtype=np.int64)
    out[0] = 1
    for h in range(1, top + 1):
        out[h] = F.mul(out[h - 1], S)
    return out


# --- generator matrices ---------------------------------------------------


def grs_matrix(F: FieldSpec, S, v, k: int) -> FMatrix:
    S = _check_points(F, S)
    v = np.asarray(v, dtype=np.int64)
    if not 1 <= k <= S.size:
        raise InvalidSpec(f"k={k} outside [1, {S.size}]")
    if v.shape != S.shape or np.any(v == 0):
        raise InvalidSpec("column multipliers must be n nonzero elements")
    return FMatrix(F, F.mul(powers(F, S, k - 1), v[None, :]))


def egrs_matrix(F: FieldSpec, S, v, k: int) -> FMatrix:
    G = grs_matrix(F, S, v, k).data
    ext = np.zeros((k, 1), dtype=np.int64)
    ext[-1, 0] = 1
    return FMatrix(F, np.hstack([G, ext]))


def tgrs_matrix(F: FieldSpec, S, v, eta: int, k: int, extended: bool = False) -> FMatrix:
    """Generator with last row ``v_i (a_i^(k-1) + eta a_i^k)``; ``extended``
    appends the column (0, ..., 0, 1)."""
    S = _check_points(F, S)
    v = np.asarray(v, dtype=np.int64)
    if not 1 <= k <= S.size:
        raise InvalidSpec(f"k={k} outside [1, {S.size}]")
    if v.shape != S.shape or np.any(v == 0):
        raise InvalidSpec("column multipliers must be n nonzero elements")
    P = powers(F, S, k)
    P[k - 1] = F.add(P[k - 1], F.mul(eta, P[k]))
    G = F.mul(P[:k], v[None, :])
    if extended:
        ext = np.zeros((k, 1), dtype=np.int64)
        ext[-1, 0] = 1
        G = np.hstack([G, ext])
    return FMatrix(F, G)


def grs(F: FieldSpec, S, v, k: int) -> LinearCode:
    return LinearCode(grs_matrix(F, S, v, k))


def egrs(F: FieldSpec, S, v, k: int) -> LinearCode:
    return LinearCode(egrs_matrix(F, S, v, k))


# --- specs ----------------------------------------------------------------


@dataclass(frozen=True)
class TwistedSpec:
    """Parameters (S, v, eta, k) of a (+)-TGRS code, optionally extended.

    Points keep their given order since the generator depends on it.
    """

    field: FieldSpec
    S: tuple[int, ...]
    v: tuple[int, ...]
    eta: int
    k: int
    extended: bool = False
    _w: np.ndarray | None = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        F = self.field
        S = _check_points(F, self.S)
        n = S.size
        if len(self.v) != n or any(int(x) == 0 or not 0 < int(x) < F.q for x in self.v):
            raise InvalidSpec("v must hold n nonzero field elements")
        if not 0 < int(self.eta) < F.q:
            raise InvalidSpec("eta must be a nonzero field element")
        if not 3 <= self.k <= n - 2:
            raise InvalidSpec(f"need 3 <= k <= n-2, got k={self.k}, n={n}")
        if n > F.q:
            raise InvalidSpec(f"n={n} exceeds q={F.q}")
        object.__setattr__(self, "S", tuple(int(a) for a in self.S))
        object.__setattr__(self, "v", tuple(int(a) for a in self.v))
        object.__setattr__(self, "eta", int(self.eta))

    @classmethod
    def create(cls, F: FieldSpec, S, v="ones", eta=1, k: int = 3, extended: bool = False) -> TwistedSpec:
        """Accepts element strings or codes; ``v`` may be ``"ones"`` or ``"w"``."""
        S = tuple(F.codes(S))
        if isinstance(v, str):
            if v == "ones":
                v = (1,) * len(S)
            elif v == "w":
                v = tuple(int(x) for x in w_vector(F, S))
            else:
                raise InvalidSpec(f"unknown v shorthand {v!r}")
        else:
            v = tuple(F.codes(v))
        return cls(F, S, v, F.code(eta), int(k), bool(extended))

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n

    @property
    def points(self) -> np.ndarray:
        return np.asarray(self.S, dtype=np.int64)

    @property
    def mult(self) -> np.ndarray:
        return np.asarray(self.v, dtype=np.int64)

    @property
    def w(self) -> np.ndarray:
        if self._w is None:
            object.__setattr__(self, "_w", w_vector(self.field, self.S))
        return self._w

    @property
    def w_over_v(self) -> np.ndarray:
        return self.field.div(self.w, self.mult)

    @property
    def sum_a(self) -> int:
        return self.field.sum(self.S)

    @property
    def one_plus_eta_sum(self) -> int:
        return self.field.add(1, self.field.mul(self.eta, self.sum_a))

    def with_extended(self, extended: bool) -> TwistedSpec:
        return TwistedSpec(self.field, self.S, self.v, self.eta, self.k, extended)

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "field": self.field.to_json(),
            "S": [fmt(a) for a in self.S],
            "v": [fmt(a) for a in self.v],
            "eta": fmt(self.eta),
            "k": self.k,
            "extended": self.extended,
        }

    @classmethod
    def from_json(cls, d: dict) -> TwistedSpec:
        F = FieldSpec.from_json(d["field"])
        return cls.create(
            F,
            [str(x) for x in d["S"]],
            d.get("v", "ones") if isinstance(d.get("v", "ones"), str) else [str(x) for x in d["v"]],
            str(d["eta"]),
            int(d["k"]),
            bool(d.get("extended", False)),
        )

    @classmethod
    def loads(cls, text: str) -> TwistedSpec:
        return cls.from_json(json.loads(text))


def tgrs(spec: TwistedSpec) -> LinearCode:
    """The (+)-TGRS code of ``spec`` (the extension flag is ignored)."""
    return LinearCode(tgrs_matrix(spec.field, spec.S, spec.v, spec.eta, spec.k))


def etgrs(spec: TwistedSpec) -> LinearCode:
    """The (+)-ETGRS code of ``spec`` (the extension flag is ignored)."""
    return LinearCode(tgrs_matrix(spec.field, spec.S, spec.v, spec.eta, spec.k, extended=True))


def spec_code(spec: TwistedSpec) -> LinearCode:
    return etgrs(spec) if spec.extended else tgrs(spec)


def etgrs_parity_check(spec: TwistedSpec) -> FMatrix:
    """(n-k+1) x (n+1) parity-check matrix: rows ``(w_i/v_i) a_i^h`` for
    h = 0..n-k, last column zero except ``-eta`` at h = n-k-1 and
    ``-1 - eta sum(a)`` at h = n-k."""
    if not spec.extended:
        raise InvalidSpec("parity-check matrix is defined for the extended code")
    F = spec.field
    r = spec.n - spec.k
    H = F.mul(powers(F, spec.points, r), spec.w_over_v[None, :])
    last = np.zeros((r + 1, 1), dtype=np.int64)
    last[r - 1, 0] = F.neg(spec.eta)
    last[r, 0] = F.neg(spec.one_plus_eta_sum)
    return FMatrix(F, np.hstack([H, last]))


# --- subset sums ------------------------------------------------------------


def _sums_by_size(F: FieldSpec, vals: Sequence[int], size: int) -> set[int]:
    return {F.sum(c) for c in itertools.combinations(vals, size)}


def _mitm_cost(n: int, k: int) -> int:
    h = n // 2
    return sum(comb(h, j) + comb(n - h, k - j) for j in range(0, k + 1))


def _exists_mitm(F: FieldSpec, vals: list[int], k: int, target: int) -> bool:
    if k == 0:
        return target == 0
    if k > len(vals):
        return False
    h = len(vals) // 2
    left, right = vals[:h], vals[h:]
    for j in range(0, k + 1):
        if j > len(left) or k - j > len(right):
            continue
        ls = _sums_by_size(F, left, j)
        rs = _sums_by_size(F, right, k - j)
        if any(F.sub(target, x) in rs for x in ls):
            return True
    return False


def subset_sum_contains(
    F: FieldSpec, S, k: int, target, cap: int = DEFAULT_SUBSET_CAP
) -> tuple[bool, tuple[int, ...] | None]:
    """Does some k-subset of S sum to ``target``?

    Returns ``(found, witness)`` with the lexicographically first witness as a
    tuple of indices into S. Small instances are scanned directly; above
    ``MITM_THRESHOLD`` subsets a meet-in-the-middle test decides existence
    and a greedy index walk recovers the first witness.
    """
    vals = [int(a) for a in S]
    n = len(vals)
    target = F.code(target)
    if not 0 < k <= n:
        raise InvalidSpec(f"k={k} outside [1, {n}]")
    total = comb(n, k)
    if total <= MITM_THRESHOLD:
        for idx in itertools.combinations(range(n), k):
            if F.sum(vals[i] for i in idx) == target:
                return True, idx
        return False, None
    if _mitm_cost(n, k) * n > cap:
        raise CombinatorialCapExceeded(f"subset-sum search over C({n},{k}) exceeds cap {cap}")
    if not _exists_mitm(F, vals, k, target):
        return False, None
    witness = []
    start, need, rest = 0, k, target
    while need:
        for i in range(start, n - need + 1):
            r2 = F.sub(rest, vals[i])
            if _exists_mitm(F, vals[i + 1 :], need - 1, r2):
                witness.append(i)
                start, need, rest = i + 1, need - 1, r2
                break
        else:  # pragma: no cover
            raise AssertionError("subset-sum witness walk lost the solution")
    return True, tuple(witness)


def mds_obstruction(spec: TwistedSpec, cap: int = DEFAULT_SUBSET_CAP) -> tuple[bool, tuple[int, ...] | None]:
    """Whether ``-eta^(-1)`` is a k-subset sum of S, with witness."""
    F = spec.field
    target = F.neg(F.inv(spec.eta))
    return subset_sum_contains(F, spec.S, spec.k, target, cap)


def classify_twisted(spec: TwistedSpec, cap: int = DEFAULT_SUBSET_CAP) -> SingletonClass:
    """MDS iff ``-eta^(-1)`` is not a k-subset sum of S, else NMDS."""
    blocked, _ = mds_obstruction(spec, cap)
    N, k = spec.length, spec.k
    if blocked:
        return SingletonClass("NMDS", N - k, k)
    return SingletonClass("MDS", N - k + 1, k + 1)


# --- dual family ----------------------------------------------------------

FamilyTag = Literal["HAN_ZHANG", "TGRS_SHIFTED", "TGRS_NEGATED"]


@dataclass(frozen=True)
class DualFamily:
    """Shape of the Euclidean dual of a (+)-TGRS code.

    For the TGRS tags the dual is the (+)-TGRS code of dimension ``n - k`` on
    the same points with multipliers ``w/v`` and twist ``twist``. For
    HAN_ZHANG the dual is spanned by ``(w/v) a^h`` for ``h <= n-k-2`` and
    ``h = n-k``.
    """

    tag: FamilyTag
    field: FieldSpec
    S: tuple[int, ...]
    mult: tuple[int, ...]
    k: int
    twist: int | None

    def generator(self) -> FMatrix:
        F = self.field
        S = np.asarray(self.S, dtype=np.int64)
        mult = np.asarray(self.mult, dtype=np.int64)
        if self.twist is not None:
            return tgrs_matrix(F, S, mult, self.twist, self.k)
        P = powers(F, S, self.k)
        rows = np.vstack([P[: self.k - 1], P[self.k : self.k + 1]])
        return FMatrix(F, F.mul(rows, mult[None, :]))

    def code(self) -> LinearCode:
        return LinearCode(self.generator())

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "tag": self.tag,
            "k": self.k,
            "multipliers": [fmt(x) for x in self.mult],
            "twist": None if self.twist is None else fmt(self.twist),
        }


def dual_family(spec: TwistedSpec) -> DualFamily:
    """Classify the Euclidean dual of ``tgrs(spec)``.

    Shortening the extended parity-check rows at the last coordinate shows the
    dual has last row ``(w/v)((1 + eta s) a^(n-k-1) - eta a^(n-k))`` with
    ``s = sum(a)``, so the twist is ``-eta / (1 + eta s)`` whenever
    ``1 + eta s != 0``.
    """
    F = spec.field
    s = spec.sum_a
    c = spec.one_plus_eta_sum
    mult = tuple(int(x) for x in spec.w_over_v)
    r = spec.n - spec.k
    if s != 0 and c == 0:
        return DualFamily("HAN_ZHANG", F, spec.S, mult, r, None)
    twist = F.neg(F.div(spec.eta, c))
    tag: FamilyTag = "TGRS_NEGATED" if s == 0 else "TGRS_SHIFTED"
    return DualFamily(tag, F, spec.S, mult, r, twist)


# --- e-Galois self-duality of extended codes ------------------------------

SELF_DUAL_AFFINE_CAP = 10**6


@dataclass(frozen=True)
class SelfDualSearch:
    """Outcome of the self-dual search at one ``(q, k, e)`` point.

    ``exact_*`` counts come from solving for ``x_i = v_i^(p^e + 1)``, which
    makes self-orthogonality an affine condition; ``sampled_*`` counts come
    from direct checks on explicit multiplier vectors.
    """

    q: int
    k: int
    e: int
    pairs: int
    exact_hits: int
    sampled: int
    sampled_hits: int

    @property
    def found(self) -> int:
        return self.exact_hits + self.sampled_hits


def _twisted_rows(F: FieldSpec, S: np.ndarray, eta: int, k: int) -> np.ndarray:
    P = powers(F, S, k)
    P[k - 1] = F.add(P[k - 1], F.mul(eta, P[k]))
    return P[:k]


def _affine_points(F: FieldSpec, x0: np.ndarray, kernel: list[np.ndarray]):
    if F.q ** len(kernel) > SELF_DUAL_AFFINE_CAP:
        raise CombinatorialCapExceeded(f"affine space of size {F.q}^{len(kernel)}")
    K = np.vstack(kernel) if kernel else np.zeros((0, x0.size), dtype=np.int64)
    for coeffs in itertools.product(range(F.q), repeat=len(kernel)):
        x = x0
        for c, row in zip(coeffs, K):
            if c:
                x = F.add(x, F.mul(c, row))
        yield x


def galois_self_dual_etgrs(
    F: FieldSpec, k: int, e: int, samples: int = 10_000, seed: int = 0, extended: bool = True
) -> SelfDualSearch:
    """Count e-Galois self-dual extended codes of length ``n + 1 = 2k``
    (with ``extended=False``, plain codes of length ``n = 2k``).

    Every n-subset S and every eta is solved exactly in the unknowns
    ``x_i = v_i^(p^e + 1)``; a solution counts only if each ``x_i`` lies in
    the image of ``y -> y^(p^e + 1)`` on nonzero y. Independently, ``samples``
    explicit specs (cycling through all (S, eta) pairs, v drawn from a seeded
    generator) are tested with ``G Frob_e(G)^T = 0``.
    """
    from .matrix import NoSolution, Unique, solve_right

    if not 0 <= e < F.m:
        raise ValueError(f"e={e} outside [0, {F.m})")
    n = 2 * k - 1 if extended else 2 * k
    if n > F.q:
        return SelfDualSearch(F.q, k, e, 0, 0, 0, 0)
    nonzero = np.arange(1, F.q, dtype=np.int64)
    image = set(int(x) for x in F.pow(nonzero, F.p**e + 1))
    delta = np.zeros(k * k, dtype=np.int64)
    if extended:
        delta[-1] = F.neg(1)

    pairs = [(S, eta) for S in itertools.combinations(range(F.q), n) for eta in range(1, F.q)]
    exact_hits = 0
    for S, eta in pairs:
        rows = _twisted_rows(F, np.asarray(S, dtype=np.int64), eta, k)
        M = F.mul(rows[:, None, :], F.frob(rows, e)[None, :, :]).reshape(k * k, n)
        sol = solve_right(FMatrix(F, M), delta)
        if isinstance(sol, NoSolution):
            continue
        x0, kernel = (sol.x, []) if isinstance(sol, Unique) else (sol.x0, sol.kernel)
        for x in _affine_points(F, x0, kernel):
            if all(int(a) in image for a in x):
                exact_hits += 1

    rng = np.random.default_rng([seed, F.q, k, e])
    sampled_hits = 0
    for i in range(samples):
        S, eta = pairs[i % len(pairs)]
        v = F.random(rng, n, nonzero=True)
        G = tgrs_matrix(F, S, v, eta, k, extended=extended)
        if (G @ FMatrix(F, F.frob(G.data, e)).T).is_zero():
            sampled_hits += 1
    return SelfDualSearch(F.q, k, e, len(pairs), exact_hits, samples, sampled_hits)
