"""Integer normal forms against sympy and against their defining identities."""
from __future__ import annotations

from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from sasmall.intmat import (
    coords_in,
    hnf,
    hnf_with_transform,
    in_lattice,
    left_kernel,
    mat_mul,
    order_mod,
    reduce_mod,
    smith_with_transform,
    xgcd,
)

small_ints = st.integers(-12, 12)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c),
                           min_size=1, max_size=max_rows).map(lambda rows: (rows, c)))


@given(small_ints, small_ints)
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == gcd(a, b) and x * a + y * b == g


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_hnf_transform_identity(mc):
    rows, c = mc
    H, U, r = hnf_with_transform(rows, c)
    assert mat_mul(U, rows) == H
    assert abs(Matrix(U).det()) == 1
    assert all(not any(row) for row in H[r:])
    # echelon with positive pivots, entries above pivots reduced
    last = -1
    for i, row in enumerate(H[:r]):
        j = next(k for k, v in enumerate(row) if v)
        assert j > last and row[j] > 0
        for above in H[:i]:
            assert 0 <= above[j] < row[j]
        last = j


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_hnf_is_a_lattice_invariant(mc):
    rows, c = mc
    key = hnf(rows, c)
    # same lattice from a shuffled, redundant generating set
    extra = [[a + b for a, b in zip(rows[0], r)] for r in rows]
    assert hnf(list(reversed(rows)) + extra, c) == key
    for r in rows:
        assert in_lattice(r, key)


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_smith_against_sympy(mc):
    rows, c = mc
    diag, U, V, Vinv = smith_with_transform(rows, c)
    D = mat_mul(mat_mul(U, rows), V)
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            assert v == (diag[i] if i == j and i < len(diag) else 0)
    assert mat_mul(V, Vinv) == [[int(i == j) for j in range(c)] for i in range(c)]
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0
    ref = smith_normal_form(Matrix(rows), domain=ZZ)
    ref_diag = [abs(ref[i, i]) for i in range(min(ref.shape)) if ref[i, i] != 0]
    assert sorted(diag) == sorted(ref_diag)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_left_kernel(mc):
    rows, c = mc
    K = left_kernel(rows, c)
    for k in K:
        assert mat_mul([k], rows) == [[0] * c]
    rank = Matrix(rows).rank()
    assert len(K) == len(rows) - rank


def test_order_and_reduce():
    basis = hnf([[2, 0], [0, 8]], 2)
    assert order_mod([1, 0], basis) == 2
    assert order_mod([0, 2], basis) == 4
    assert order_mod([1, 1], basis) == 8
    assert reduce_mod([5, 11], basis) == (1, 3)
    assert order_mod([1], ()) == 0
    assert coords_in([4, 8], basis) == [2, 1]
    assert coords_in([1, 0], basis) is None
