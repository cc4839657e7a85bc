"""Exact integer matrix routines: Hermite and Smith normal forms, left kernels.

Matrices are lists of rows of Python ints. Row-style conventions throughout:
a lattice is the row space of its matrix, and the Hermite form is upper
triangular in echelon shape with positive pivots and entries above each
pivot reduced into ``[0, pivot)``.
"""
from __future__ import annotations

from math import gcd

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf_with_transform(rows, ncols: int | None = None) -> tuple[Matrix, Matrix, int]:
    """Row Hermite normal form.

    Returns ``(H, U, rank)`` with ``U @ A == H``, ``U`` unimodular, the first
    ``rank`` rows of ``H`` in reduced echelon form and the remaining rows zero.
    Only the first ``ncols`` columns are used for pivoting; trailing columns
    are carried along (this is how left kernels are read off).
    """
    H = [list(r) for r in rows]
    m = len(H)
    n = ncols if ncols is not None else (len(H[0]) if H else 0)
    U = identity(m)
    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][j]
            if b == 0:
                continue
            a = H[r][j]
            g, x, y = xgcd(a, b)
            p, q = -b // g, a // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * u + y * v for u, v in zip(Hr, Hi)]
            H[i] = [p * u + q * v for u, v in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * u + y * v for u, v in zip(Ur, Ui)]
            U[i] = [p * u + q * v for u, v in zip(Ur, Ui)]
        piv = H[r][j]
        if piv == 0:
            continue
        if piv < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
            piv = -piv
        for i in range(r):
            c = H[i][j] // piv
            if c:
                H[i] = [u - c * v for u, v in zip(H[i], H[r])]
                U[i] = [u - c * v for u, v in zip(U[i], U[r])]
        r += 1
    return H, U, r


def hnf(rows, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of the row lattice: nonzero HNF rows as a tuple key."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return ()
    H, _, rank = hnf_with_transform(rows, ncols)
    return tuple(tuple(row) for row in H[:rank])


def left_kernel(rows, ncols: int) -> Matrix:
    """Basis of ``{c : c @ rows == 0}`` over the integers."""
    m = len(rows)
    if m == 0:
        return []
    aug = [list(r) + e for r, e in zip(rows, identity(m))]
    H, _, rank = hnf_with_transform(aug, ncols)
    return [row[ncols:] for row in H[rank:]]


def pivot_col(row) -> int:
    for j, v in enumerate(row):
        if v:
            return j
    return -1


def order_mod(vec, basis) -> int:
    """Least ``r > 0`` with ``r * vec`` in the lattice spanned by ``basis``.

    ``basis`` must be in Hermite form. Returns 0 when no such ``r`` exists
    (the class of ``vec`` has infinite order).
    """
    pivots = {pivot_col(row): row for row in basis}
    w = list(vec)
    r = 1
    for j in range(len(w)):
        wj = w[j]
        if wj == 0:
            continue
        row = pivots.get(j)
        if row is None:
            return 0
        p = row[j]
        m = p // gcd(p, wj)
        if m != 1:
            r *= m
            w = [m * v for v in w]
        c = w[j] // p
        w = [u - c * v for u, v in zip(w, row)]
    return r


def reduce_mod(vec, basis) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo a Hermite-form lattice."""
    w = list(vec)
    for row in basis:
        j = pivot_col(row)
        c = w[j] // row[j]
        if c:
            w = [u - c * v for u, v in zip(w, row)]
    return tuple(w)


def in_lattice(vec, basis) -> bool:
    return not any(reduce_mod(vec, basis))


def mat_mul(A, B) -> Matrix:
    if not A:
        return []
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def vec_mat(v, A) -> list[int]:
    if not A:
        return []
    n = len(A[0])
    out = [0] * n
    for c, row in zip(v, A):
        if c:
            for j in range(n):
                out[j] += c * row[j]
    return out


def smith_with_transform(rows, ncols: int):
    """Smith normal form ``U @ A @ V == D``.

    Returns ``(diag, U, V, Vinv)`` where ``diag`` lists the nonzero invariant
    factors ``d1 | d2 | ...`` (their count is the rank of ``A``), ``U`` is
    ``m x m`` and ``V``/``Vinv`` are ``ncols x ncols`` mutually inverse.
    """
    A = [list(r) for r in rows]
    m, n = len(A), ncols
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]
        Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    def add_row(dst, src, c):
        A[dst] = [u + c * v for u, v in zip(A[dst], A[src])]
        U[dst] = [u + c * v for u, v in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        # col_dst += c * col_src; inverse acts on rows of Vinv
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]
        Vinv[src] = [u - c * v for u, v in zip(Vinv[src], Vinv[dst])]

    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            p = A[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
        diag.append(A[t][t])
        t += 1
    return diag, U, V, Vinv


def coords_in(vec, basis) -> list[int] | None:
    """Coefficients ``c`` with ``c @ basis == vec`` for a Hermite basis, else None."""
    w = list(vec)
    out = []
    for row in basis:
        j = pivot_col(row)
        c, r = divmod(w[j], row[j])
        if r:
            return None
        out.append(c)
        if c:
            w = [u - c * v for u, v in zip(w, row)]
    if any(w):
        return None
    return out
