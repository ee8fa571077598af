"""Hot loops, each in two flavours.

``*_jit`` functions are scalar loops compiled with numba; ``*_np`` functions
are vectorised numpy equivalents. The public wrappers at the bottom pick one
according to :data:`tgrs._accel.USE_NUMBA`. Both flavours take element codes
as int64 arrays and the field tables ``(exp, log, p, m, q)``.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from ._accel import USE_NUMBA, njit

# --- scalar field arithmetic (numba) ---------------------------------------


@njit
def _fadd(a, b, p, m):
    if p == 2:
        return a ^ b
    if m == 1:
        s = a + b
        return s - p if s >= p else s
    r = 0
    w = 1
    for _ in range(m):
        r += ((a % p + b % p) % p) * w
        a //= p
        b //= p
        w *= p
    return r


@njit
def _fneg(a, p, m):
    if p == 2 or a == 0:
        return a
    if m == 1:
        return p - a
    r = 0
    w = 1
    for _ in range(m):
        r += ((p - a % p) % p) * w
        a //= p
        w *= p
    return r


@njit
def _fmul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit
def _finv(a, exp, log, q):
    return exp[q - 1 - log[a]]


# --- row reduction ---------------------------------------------------------


@njit
def rref_jit(M, exp, log, p, m, q):
    R = M.copy()
    rows, cols = R.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = R[r, j]
                R[r, j] = R[piv, j]
                R[piv, j] = t
        inv = _finv(R[r, c], exp, log, q)
        for j in range(c, cols):
            R[r, j] = _fmul(R[r, j], inv, exp, log)
        for i in range(rows):
            if i != r and R[i, c] != 0:
                f = _fneg(R[i, c], p, m)
                for j in range(c, cols):
                    if R[r, j] != 0:
                        R[i, j] = _fadd(R[i, j], _fmul(f, R[r, j], exp, log), p, m)
        pivots[r] = c
        r += 1
    return R, pivots[:r]


def _vadd(a, b, p, m, digits, weights):
    if p == 2:
        return a ^ b
    if m == 1:
        return (a + b) % p
    return ((digits[a] + digits[b]) % p) @ weights


def _vneg(a, p, m, digits, weights):
    if p == 2:
        return a
    if m == 1:
        return (-a) % p
    return ((-digits[a]) % p) @ weights


def _vmul(a, b, exp, log):
    return np.where((a == 0) | (b == 0), 0, exp[log[a] + log[b]])


def _digit_tables(p, m):
    if p == 2 or m == 1:
        return None, None
    weights = p ** np.arange(m, dtype=np.int64)
    codes = np.arange(p**m, dtype=np.int64)
    return (codes[:, None] // weights[None, :]) % p, weights


def rref_np(M, exp, log, p, m, q):
    digits, weights = _digit_tables(p, m)
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = exp[q - 1 - log[R[r, c]]]
        R[r] = _vmul(R[r], inv, exp, log)
        f = R[:, c].copy()
        f[r] = 0
        if f.any():
            upd = _vmul(_vneg(f, p, m, digits, weights)[:, None], R[r][None, :], exp, log)
            R = _vadd(R, upd, p, m, digits, weights)
        pivots.append(c)
        r += 1
    return R, np.asarray(pivots, dtype=np.int64)


# --- matrix product --------------------------------------------------------


@njit
def matmul_jit(A, B, exp, log, p, m, q):
    n, kk = A.shape
    cols = B.shape[1]
    out = np.zeros((n, cols), dtype=np.int64)
    for i in range(n):
        for l in range(kk):
            a = A[i, l]
            if a == 0:
                continue
            for j in range(cols):
                b = B[l, j]
                if b != 0:
                    out[i, j] = _fadd(out[i, j], _fmul(a, b, exp, log), p, m)
    return out


def matmul_np(A, B, exp, log, p, m, q):
    digits, weights = _digit_tables(p, m)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for l in range(A.shape[1]):
        out = _vadd(out, _vmul(A[:, l][:, None], B[l][None, :], exp, log), p, m, digits, weights)
    return out


# --- codeword / coset enumeration -----------------------------------------


def scaled_rows(G, exp, log, q):
    """Table T[i, e] = e * G[i] for every element code e."""
    e = np.arange(q, dtype=np.int64)
    return _vmul(e[None, :, None], G[:, None, :], exp, log)


@njit
def coset_weights_jit(scaled, offset, p, m):
    """Weight histogram of offset + C over all q^k codewords of C, plus the
    per-weight count of vectors that are nonzero at each coordinate."""
    k, q, n = scaled.shape
    dist = np.zeros(n + 1, dtype=np.int64)
    colcount = np.zeros((n + 1, n), dtype=np.int64)
    partial = np.zeros((k + 1, n), dtype=np.int64)
    for l in range(k + 1):
        partial[l] = offset
    digits = np.zeros(k, dtype=np.int64)
    while True:
        w = 0
        for j in range(n):
            if partial[k, j] != 0:
                w += 1
        dist[w] += 1
        for j in range(n):
            if partial[k, j] != 0:
                colcount[w, j] += 1
        i = k - 1
        while i >= 0 and digits[i] == q - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            break
        digits[i] += 1
        for l in range(i, k):
            for j in range(n):
                partial[l + 1, j] = _fadd(partial[l, j], scaled[l, digits[l], j], p, m)
    return dist, colcount


def coset_weights_np(scaled, offset, p, m, chunk=1 << 15):
    digits_t, weights = _digit_tables(p, m)
    k, q, n = scaled.shape
    dist = np.zeros(n + 1, dtype=np.int64)
    colcount = np.zeros((n + 1, n), dtype=np.int64)
    total = q**k
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        acc = np.broadcast_to(offset, (idx.size, n)).copy()
        for i in range(k):
            d = (idx // powers[i]) % q
            acc = _vadd(acc, scaled[i][d], p, m, digits_t, weights)
        nz = acc != 0
        w = nz.sum(axis=1)
        dist += np.bincount(w, minlength=n + 1)
        np.add.at(colcount, w, nz.astype(np.int64))
    return dist, colcount


# --- syndrome coverage (covering radius) -----------------------------------


@njit
def _next_combination(c, n):
    w = c.shape[0]
    i = w - 1
    while i >= 0 and c[i] == n - w + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, w):
        c[j] = c[j - 1] + 1
    return True


@njit
def syndrome_cover_jit(scaled_cols, qpow, p, m):
    """Weight-layered search over error patterns until every syndrome has a
    leader. Returns (covering radius, leader weight per syndrome)."""
    n, q, r = scaled_cols.shape
    total = 1
    for _ in range(r):
        total *= q
    leader = np.full(total, -1, dtype=np.int64)
    leader[0] = 0
    covered = 1
    if covered == total:
        return 0, leader
    for w in range(1, n + 1):
        comb_ = np.arange(w)
        vals = np.ones(w, dtype=np.int64)
        partial = np.zeros((w + 1, r), dtype=np.int64)
        while True:
            # full value sweep for this support
            for l in range(w):
                vals[l] = 1
                for j in range(r):
                    partial[l + 1, j] = _fadd(partial[l, j], scaled_cols[comb_[l], 1, j], p, m)
            while True:
                idx = 0
                for j in range(r):
                    idx += partial[w, j] * qpow[j]
                if leader[idx] < 0:
                    leader[idx] = w
                    covered += 1
                    if covered == total:
                        return w, leader
                i = w - 1
                while i >= 0 and vals[i] == q - 1:
                    vals[i] = 1
                    i -= 1
                if i < 0:
                    break
                vals[i] += 1
                for l in range(i, w):
                    for j in range(r):
                        partial[l + 1, j] = _fadd(partial[l, j], scaled_cols[comb_[l], vals[l], j], p, m)
            if not _next_combination(comb_, n):
                break
    return -1, leader


def syndrome_cover_np(scaled_cols, qpow, p, m, chunk=1 << 16):
    digits_t, weights = _digit_tables(p, m)
    n, q, r = scaled_cols.shape
    total = q**r
    leader = np.full(total, -1, dtype=np.int64)
    leader[0] = 0
    covered = 1
    if covered == total:
        return 0, leader
    for w in range(1, n + 1):
        nvals = (q - 1) ** w
        vpow = (q - 1) ** np.arange(w - 1, -1, -1, dtype=np.int64)
        for support in itertools.combinations(range(n), w):
            for start in range(0, nvals, chunk):
                idx = np.arange(start, min(nvals, start + chunk), dtype=np.int64)
                acc = np.zeros((idx.size, r), dtype=np.int64)
                for l, col in enumerate(support):
                    v = 1 + (idx // vpow[l]) % (q - 1)
                    acc = _vadd(acc, scaled_cols[col][v], p, m, digits_t, weights)
                syn = acc @ qpow
                fresh = np.unique(syn[leader[syn] < 0])
                if fresh.size:
                    leader[fresh] = w
                    covered += fresh.size
                    if covered == total:
                        return w, leader
    return -1, leader


# --- smallest linearly dependent column set --------------------------------


@njit
def _rank_of_columns(H, cols, exp, log, p, m, q):
    sub = np.empty((H.shape[0], cols.shape[0]), dtype=np.int64)
    for j in range(cols.shape[0]):
        sub[:, j] = H[:, cols[j]]
    _, piv = rref_jit(sub, exp, log, p, m, q)
    return piv.shape[0]


@njit
def smallest_dependent_jit(H, wmax, exp, log, p, m, q):
    n = H.shape[1]
    for w in range(1, wmax + 1):
        c = np.arange(w)
        while True:
            if _rank_of_columns(H, c, exp, log, p, m, q) < w:
                return w
            if not _next_combination(c, n):
                break
    return -1


def smallest_dependent_np(H, wmax, exp, log, p, m, q):
    n = H.shape[1]
    for w in range(1, wmax + 1):
        for cols in itertools.combinations(range(n), w):
            _, piv = rref_np(H[:, list(cols)], exp, log, p, m, q)
            if piv.size < w:
                return w
    return -1


def dependent_search_cost(n: int, wmax: int) -> int:
    return sum(comb(n, w) for w in range(1, wmax + 1))


# --- dispatch -------------------------------------------------------------

if USE_NUMBA:
    rref = rref_jit
    matmul = matmul_jit
    coset_weights = coset_weights_jit
    syndrome_cover = syndrome_cover_jit
    smallest_dependent = smallest_dependent_jit
else:
    rref = rref_np
    matmul = matmul_np
    coset_weights = coset_weights_np
    syndrome_cover = syndrome_cover_np
    smallest_dependent = smallest_dependent_np
