"""Exact linear algebra over F_p and Z on plain list-of-list matrices.

Matrices are lists of rows of Python ints.  Everything here is exact:
mod-p arithmetic uses representatives in 0..p-1, integer routines use
arbitrary-precision ints and unimodular operations only.
"""

from __future__ import annotations


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> list[list[int]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                orow = out[i]
                for j in range(cols):
                    orow[j] += aik * brow[j]
    return out


def mat_mod(a: list[list[int]], p: int) -> list[list[int]]:
    return [[x % p for x in row] for row in a]


def rref_mod(mat: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p.  Returns (rref, pivot columns)."""
    m = [[x % p for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank_mod(mat: list[list[int]], p: int) -> int:
    return len(rref_mod(mat, p)[1])


def nullspace_mod(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace over F_p, as rows in reduced echelon form."""
    if not mat or not mat[0]:
        cols = len(mat[0]) if mat else 0
        return [row[:] for row in identity(cols)]
    rref, pivots = rref_mod(mat, p)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % p
        basis.append(v)
    if not basis:
        return []
    return rref_mod(basis, p)[0][: len(basis)]


def row_space_contains(rows: list[list[int]], vec: list[int], p: int) -> bool:
    """Whether vec lies in the F_p row space of rows."""
    if not any(x % p for x in vec):
        return True
    if not rows:
        return False
    r0 = rank_mod(rows, p)
    return rank_mod(rows + [vec], p) == r0


def kernel_int(mat: list[list[int]]) -> list[list[int]]:
    """Z-basis of the integer kernel {x : mat @ x = 0}, as rows.

    Unimodular column elimination: reduce mat to column echelon form while
    applying the same column operations to an identity matrix; the columns
    that become zero give a basis of the kernel lattice (which is saturated).
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [row[:] for row in mat]
    v = identity(cols)

    def col_addmul(j: int, k: int, q: int) -> None:
        for i in range(rows):
            a[i][j] += q * a[i][k]
        for i in range(cols):
            v[i][j] += q * v[i][k]

    def col_swap(j: int, k: int) -> None:
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    lead = 0
    for r in range(rows):
        if lead >= cols:
            break
        active = [j for j in range(lead, cols) if a[r][j]]
        if not active:
            continue
        # Euclidean gcd sweep across the active columns of row r.
        while True:
            active = [j for j in range(lead, cols) if a[r][j]]
            if len(active) <= 1:
                break
            jmin = min(active, key=lambda j: abs(a[r][j]))
            for j in active:
                if j != jmin:
                    col_addmul(j, jmin, -(a[r][j] // a[r][jmin]))
        j = next(j for j in range(lead, cols) if a[r][j])
        if j != lead:
            col_swap(lead, j)
        lead += 1

    kernel = []
    for j in range(lead, cols):
        vec = [v[i][j] for i in range(cols)]
        lead_entry = next((x for x in vec if x), 0)
        if lead_entry < 0:
            vec = [-x for x in vec]
        kernel.append(vec)
    kernel.sort(reverse=True)
    return kernel


def rank_int(mat: list[list[int]]) -> int:
    """Rank over Z (equivalently over Q) of an integer matrix."""
    cols = len(mat[0]) if mat else 0
    return cols - len(kernel_int(mat))
