"""Non-GRS certificates and a small-scale monomial equivalence search."""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb
from typing import Literal

import numpy as np

from .code import LinearCode
from .errors import BudgetExceeded, DimensionOutOfRange, EnumerationCapExceeded, FieldMismatch, LengthMismatch
from .matrix import FMatrix, rref
from .twisted import grs

EQUIV_CAP = 10**6
SEARCH_BUDGET = 10**5

VerdictTag = Literal["CERTIFIED_NON_GRS", "EQUIVALENT_TO_GRS", "INCONCLUSIVE"]


@dataclass(frozen=True)
class Witness:
    """``D`` equals the code whose coordinate j is ``scale[j]`` times
    coordinate ``perm[j]`` of ``C``."""

    perm: tuple[int, ...]
    scale: tuple[int, ...]

    def to_json(self, fmt) -> dict:
        return {"perm": [p + 1 for p in self.perm], "scale": [fmt(s) for s in self.scale]}


@dataclass(frozen=True)
class GrsVerdict:
    tag: VerdictTag
    evidence: dict = field(default_factory=dict)


# --- Schur-square certificate ---------------------------------------------


def weight_one_coordinates(C: LinearCode) -> list[int]:
    """Coordinates j with the unit vector e_j in C (so d(C) = 1 iff nonempty)."""
    out = []
    G = C.canonical.data
    for j in range(C.n):
        rest = np.delete(G, j, axis=1)
        if rest.shape[1] == 0 or rref(FMatrix(C.field, rest))[2] < C.k:
            out.append(j)
    return out


def schur_certificate(C: LinearCode) -> GrsVerdict:
    """Schur-square test against GRS behaviour.

    For 3 <= k < (n+1)/2 a GRS code has dim(C^2) = 2k-1. For n/2 <= k <= n-3
    the dual of a GRS code is GRS of dimension n-k in the first range, so
    its square has distance at least 2; a unit vector inside (C^perp)^2
    certifies non-GRS.
    """
    n, k = C.n, C.k
    if not 3 <= k <= n - 3:
        raise DimensionOutOfRange(f"need 3 <= k <= n-3, got [{n},{k}]")
    ev: dict = {}
    certified = False
    if 2 * k < n + 1:
        dim_sq = C.schur_square().k
        ev["dim_square"] = dim_sq
        ev["grs_dim_square"] = 2 * k - 1
        certified |= dim_sq != 2 * k - 1
    if 2 * k >= n:
        sq = C.dual(0).schur_square()
        units = weight_one_coordinates(sq)
        ev["dual_square_dim"] = sq.k
        ev["dual_square_unit_coordinates"] = [j + 1 for j in units]
        ev["dual_square_distance_below_2"] = bool(units)
        certified |= bool(units)
    return GrsVerdict("CERTIFIED_NON_GRS" if certified else "INCONCLUSIVE", ev)


# --- monomial equivalence ---------------------------------------------------


def _fingerprints(C: LinearCode, cap: int) -> tuple[np.ndarray, list[bytes]]:
    if C.enumeration_size() > cap:
        raise EnumerationCapExceeded(f"q^k = {C.enumeration_size()} exceeds cap {cap}")
    wd, colcount = C.weight_profile(cap)
    return wd, [colcount[:, j].tobytes() for j in range(C.n)]


class _Matcher:
    """Backtracking over the non-information columns of C for one choice
    of ordered information set in D.

    Looks for row scalings lam and a column matching with
    ``X[:, c] = mu * lam * A[:, r]``. Row scalings live in components that
    are fixed only up to a common factor until a column ties them together.
    """

    def __init__(self, F, A, X, fpA, fpX):
        self.q1 = F.q - 1
        self.exp = F._exp_l
        self.log = F._log_l
        self.k = A.shape[0]
        self.A = A.T.tolist()
        self.X = X.T.tolist()
        suppA = [tuple(i for i, a in enumerate(col) if a) for col in self.A]
        suppX = [tuple(i for i, a in enumerate(col) if a) for col in self.X]
        self.suppA = suppA
        self.order = sorted(range(len(self.A)), key=lambda r: -len(suppA[r]))
        self.cands = {
            r: [c for c in range(len(self.X)) if suppX[c] == suppA[r] and fpX[c] == fpA[r]] for r in self.order
        }
        self.keys = {}
        for c, col in enumerate(self.X):
            self.keys.setdefault(self._normal(col), []).append(c)

    def _normal(self, col):
        log, q1 = self.log, self.q1
        lead = next((log[a] for a in col if a), 0)
        return tuple((log[a] - lead) % q1 if a else -1 for a in col)

    def feasible(self) -> bool:
        return all(self.cands[r] for r in self.order)

    def run(self):
        return self._step(0, [None] * self.k, list(range(self.k)), {}, frozenset())

    def _step(self, i, lam, comp, assign, used):
        if i == len(self.order):
            return lam, assign
        r = self.order[i]
        s = self.suppA[r]
        cands = self.cands[r]
        if None not in lam and len(set(comp)) == 1:
            # rows fully tied: the image column is determined up to scale
            log, q1, exp = self.log, self.q1, self.exp
            key = self._normal([exp[(lam[t] + log[a]) % q1] if a else 0 for t, a in enumerate(self.A[r])])
            allowed = set(cands)
            cands = [c for c in self.keys.get(key, ()) if c in allowed]
        for c in cands:
            if c in used:
                continue
            nxt = self._bind(s, r, c, lam, comp)
            if nxt is None:
                continue
            res = self._step(i + 1, *nxt, {**assign, r: c}, used | {c})
            if res is not None:
                return res
        return None

    def _bind(self, s, r, c, lam, comp):
        """Tie rows of s so that X[:, c] = mu * lam * A[:, r]; lam in logs."""
        if not s:
            return lam, comp
        log, q1 = self.log, self.q1
        a, x = self.A[r], self.X[c]
        ratio = {t: (log[x[t]] - log[a[t]]) % q1 for t in s}
        lam = list(lam)
        comp = list(comp)
        kappa: dict[int, int] = {}
        for t in s:
            if lam[t] is None:
                continue
            kv = (ratio[t] - lam[t]) % q1
            if kappa.setdefault(comp[t], kv) != kv:
                return None
        root = comp[s[0]]
        for cid, kv in kappa.items():
            for t in range(self.k):
                if comp[t] == cid:
                    if lam[t] is not None:
                        lam[t] = (lam[t] + kv) % q1
                    comp[t] = root
        for t in s:
            if lam[t] is None:
                lam[t] = ratio[t]
            comp[t] = root
        return lam, comp


def monomial_equivalent(C: LinearCode, D: LinearCode, cap: int = EQUIV_CAP) -> Witness | None:
    """Search for (perm, scale) taking C onto D, or return None."""
    if C.field != D.field:
        raise FieldMismatch(f"{C.field!r} vs {D.field!r}")
    if C.n != D.n:
        raise LengthMismatch(f"lengths {C.n} and {D.n}")
    if C.k != D.k:
        return None
    F, n, k = C.field, C.n, C.k
    wdC, fpC = _fingerprints(C, cap)
    wdD, fpD = _fingerprints(D, cap)
    if not np.array_equal(wdC, wdD) or sorted(fpC) != sorted(fpD):
        return None

    M = C.canonical.data
    I = C.info_set
    R = [j for j in range(n) if j not in set(I)]
    A = M[:, R]
    fpI = [fpC[j] for j in I]
    fpR = [fpC[j] for j in R]
    G = D.canonical.data
    for J in itertools.combinations(range(n), k):
        if sorted(fpD[j] for j in J) != sorted(fpI):
            continue
        rest = [j for j in range(n) if j not in J]
        Rj, piv, rank = rref(FMatrix(F, G[:, list(J) + rest]))
        if piv != list(range(k)):
            continue
        Xall = Rj.data[:k, k:]
        fpX = [fpD[j] for j in rest]
        for order in itertools.permutations(range(k)):
            if any(fpD[J[order[t]]] != fpI[t] for t in range(k)):
                continue
            X = Xall[list(order)]
            m = _Matcher(F, A, X, fpR, fpX)
            if not m.feasible():
                continue
            res = m.run()
            if res is None:
                continue
            lam_log, assign = res
            lam = [1 if v is None else F.power_of_primitive(v) for v in lam_log]
            perm = [0] * n
            scale = [0] * n
            for t in range(k):
                col = J[order[t]]
                perm[col] = I[t]
                scale[col] = F.inv(lam[t])
            for r, c in assign.items():
                col = rest[c]
                perm[col] = R[r]
                supp = np.flatnonzero(A[:, r])
                if supp.size:
                    t = int(supp[0])
                    scale[col] = F.div(int(X[t, c]), F.mul(lam[t], int(A[t, r])))
                else:
                    scale[col] = 1
            w = Witness(tuple(perm), tuple(scale))
            if C.monomial_image(perm, scale) == D:
                return w
    return None


def exhaustive_grs_search(
    C: LinearCode,
    budget: int = SEARCH_BUDGET,
    collect_all: bool = False,
    cap: int = EQUIV_CAP,
    progress: Callable[[int, int], None] | None = None,
) -> GrsVerdict:
    """Compare C with GRS_k(S', 1) for every n-subset S' of the field.

    Subsets run in increasing order of element codes. Column multipliers of
    the GRS side are absorbed by the monomial scaling. With ``collect_all``
    every matching subset is recorded instead of stopping at the first.
    """
    F, n, k = C.field, C.n, C.k
    total = comb(F.q, n)
    if total > budget:
        raise BudgetExceeded(f"C({F.q},{n}) = {total} candidate pairs exceed budget {budget}")
    ones = np.ones(n, dtype=np.int64)
    matches: list[tuple[tuple[int, ...], Witness]] = []
    for done, Sp in enumerate(itertools.combinations(range(F.q), n), start=1):
        w = monomial_equivalent(grs(F, Sp, ones, k), C, cap)
        if progress is not None:
            progress(done, total)
        if w is None:
            continue
        matches.append((Sp, w))
        if not collect_all:
            break
    fmt = F.format
    if not matches:
        return GrsVerdict("CERTIFIED_NON_GRS", {"method": "exhaustion", "candidates": total})
    Sp, w = matches[0]
    ev = {
        "S": [fmt(a) for a in Sp],
        "witness": w.to_json(fmt),
        "candidates": total,
    }
    if collect_all:
        ev["all_sets"] = [[fmt(a) for a in s] for s, _ in matches]
    return GrsVerdict("EQUIVALENT_TO_GRS", ev)
