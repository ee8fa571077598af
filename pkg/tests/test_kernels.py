"""The numba kernels and their numpy fallbacks must agree exactly."""

from __future__ import annotations

import numpy as np
import pytest

from tgrs import _kernels, field_new
from tgrs._accel import HAVE_NUMBA

pytestmark = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")

FIELDS = [(2, 1), (11, 1), (13, 1), (2, 4), (3, 2), (2, 8)]


@pytest.mark.parametrize("p,m", FIELDS)
def test_rref_parity(p, m):
    F = field_new(p, m)
    rng = np.random.default_rng(p + m)
    for rows, cols in [(3, 5), (6, 4), (5, 12), (1, 1)]:
        M = F.random(rng, (rows, cols))
        M[rows // 2] = 0
        R1, p1 = _kernels.rref_jit(M.copy(), *F.kernel_args)
        R2, p2 = _kernels.rref_np(M.copy(), *F.kernel_args)
        assert np.array_equal(R1, R2)
        assert list(p1) == list(p2)


@pytest.mark.parametrize("p,m", FIELDS)
def test_matmul_parity(p, m):
    F = field_new(p, m)
    rng = np.random.default_rng(7 * p + m)
    A = F.random(rng, (4, 6))
    B = F.random(rng, (6, 3))
    assert np.array_equal(_kernels.matmul_jit(A, B, *F.kernel_args), _kernels.matmul_np(A, B, *F.kernel_args))


@pytest.mark.parametrize("p,m", [(11, 1), (2, 4), (3, 2)])
def test_coset_weights_parity(p, m):
    F = field_new(p, m)
    rng = np.random.default_rng(p)
    G = F.random(rng, (3, 7))
    exp, log, _, _, q = F.kernel_args
    scaled = _kernels.scaled_rows(G, exp, log, q)
    offset = F.random(rng, 7)
    d1, c1 = _kernels.coset_weights_jit(scaled, offset, p, m)
    d2, c2 = _kernels.coset_weights_np(scaled, offset, p, m)
    assert np.array_equal(d1, d2) and np.array_equal(c1, c2)
    assert d1.sum() == q**3


@pytest.mark.parametrize("p,m", [(11, 1), (2, 4), (3, 2)])
def test_syndrome_cover_parity(p, m):
    F = field_new(p, m)
    rng = np.random.default_rng(3 * p)
    H = F.random(rng, (3, 6))
    e = np.arange(F.q)
    cols = np.ascontiguousarray(F.mul(H.T[:, None, :], e[None, :, None]))
    qpow = F.q ** np.arange(3, dtype=np.int64)
    r1, l1 = _kernels.syndrome_cover_jit(cols, qpow, p, m)
    r2, l2 = _kernels.syndrome_cover_np(cols, qpow, p, m)
    assert r1 == r2 and np.array_equal(l1, l2)


@pytest.mark.parametrize("p,m", [(11, 1), (2, 4)])
def test_smallest_dependent_parity(p, m):
    F = field_new(p, m)
    rng = np.random.default_rng(5)
    H = F.random(rng, (4, 9))
    args = F.kernel_args
    assert _kernels.smallest_dependent_jit(H, 5, *args) == _kernels.smallest_dependent_np(H, 5, *args)
