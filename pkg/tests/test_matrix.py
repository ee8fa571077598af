from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elems, mat
from tgrs import Affine, FMatrix, NoSolution, Unique, diag, field_new, matmul, null_space, rref, solve_right, transpose
from tgrs.errors import DimensionMismatch, FieldMismatch
from tgrs.matrix import matvec

EX42_G = [
    "1 1 1 1 1 1 1 1 1 1 1 0",
    "1 w w^12 w^2 w^13 w^14 w^4 w^5 w^6 w^7 w^9 0",
    "1 w^2 w^9 w^4 w^11 w^13 w^8 w^10 w^12 w^14 w^3 0",
    "1 w^3 w^6 w^6 w^9 w^12 w^12 1 w^3 w^6 w^12 0",
    "w^13 w^13 w^2 w^10 w^8 w^6 w^6 w^2 w^5 w^4 0 1",
]


def reference_rref(M: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Textbook Gauss-Jordan over Z/p with Python ints."""
    M = [row[:] for row in M]
    rows, cols = len(M), len(M[0])
    piv, r = [], 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if M[i][c] % p), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return M, piv


def test_identity_and_zero(gf11):
    I = FMatrix.identity(gf11, 3)
    R, piv, r = rref(I)
    assert R == I and piv == [0, 1, 2] and r == 3
    Z = FMatrix.zeros(gf11, 2, 4)
    R, piv, r = rref(Z)
    assert R == Z and piv == [] and r == 0
    assert null_space(I) == []


def test_example_generator_rank(gf16):
    G = FMatrix(gf16, mat(gf16, EX42_G))
    assert rref(G)[2] == 5


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 11, 13]), st.integers(1, 6), st.integers(1, 7), st.data())
def test_rref_matches_reference(p, rows, cols, data):
    F = field_new(p)
    M = [[data.draw(st.integers(0, p - 1)) for _ in range(cols)] for _ in range(rows)]
    R, piv, r = rref(FMatrix(F, M))
    ref, ref_piv = reference_rref(M, p)
    assert piv == ref_piv
    assert R.data.tolist() == ref


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 4), (3, 2), (2, 3), (13, 1)]), st.integers(1, 5), st.integers(1, 7), st.data())
def test_null_space_properties(pm, rows, cols, data):
    F = field_new(*pm)
    M = FMatrix(F, [[data.draw(st.integers(0, F.q - 1)) for _ in range(cols)] for _ in range(rows)])
    basis = null_space(M)
    r = rref(M)[2]
    assert len(basis) == cols - r
    for x in basis:
        assert not matvec(M, x).any()
    if basis:
        assert rref(FMatrix(F, np.vstack(basis)))[2] == len(basis)


def test_null_space_convention(gf11):
    M = FMatrix(gf11, [[1, 2, 3]])
    basis = null_space(M)
    assert [b.tolist() for b in basis] == [[2, 10, 0], [3, 0, 10]]


def test_solve_right_cases(gf16, gf11):
    b = np.array([3, 7, 1])
    sol = solve_right(FMatrix.identity(gf11, 3), b)
    assert isinstance(sol, Unique) and sol.x.tolist() == b.tolist()
    assert isinstance(solve_right(FMatrix(gf11, [[0, 0]]), [1]), NoSolution)
    sol = solve_right(FMatrix(gf11, [[1, 1]]), [5])
    assert isinstance(sol, Affine) and len(sol.kernel) == 1
    assert gf11.add(int(sol.x0[0]), int(sol.x0[1])) == 5


def test_solve_right_dimension(gf11):
    with pytest.raises(DimensionMismatch):
        solve_right(FMatrix.identity(gf11, 3), [1, 2])


def test_matmul_transpose_diag(gf16):
    G = FMatrix(gf16, mat(gf16, EX42_G))
    GT = transpose(G)
    assert GT.shape == (12, 5)
    assert matmul(G, GT) == G @ G.T
    d = elems(gf16, "w 1 w^2 1 1 1 1 1 1 1 1 0")
    D = diag(gf16, d)
    scaled = (G @ D).data
    assert scaled[:, 0].tolist() == gf16.mul(G.data[:, 0], d[0]).tolist()
    assert not scaled[:, 11].any()
    with pytest.raises(DimensionMismatch):
        G @ G


def test_field_mismatch(gf11, gf13):
    with pytest.raises(FieldMismatch):
        FMatrix.identity(gf11, 2) @ FMatrix.identity(gf13, 2)


def test_json_roundtrip(gf16):
    G = FMatrix(gf16, mat(gf16, EX42_G))
    assert FMatrix.from_json(gf16, G.to_json()) == G
    assert G.to_json()[1][1] == "w^1"
