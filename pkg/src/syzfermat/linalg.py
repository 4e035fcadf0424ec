"""Gaussian elimination over F_p.

Matrices are numpy arrays. For p < 2^31 the work is done in int64 (every
product of two residues fits); larger moduli fall back to object arrays of
Python ints with the same code path.
"""

from __future__ import annotations

import numpy as np

_INT64_LIMIT = 1 << 31


def as_matrix(a, p: int) -> np.ndarray:
    dtype = np.int64 if p < _INT64_LIMIT else object
    m = np.array(a, dtype=dtype)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p. Pivot row is the lowest-index row with a
    nonzero entry in the current column, so results are reproducible."""
    m = as_matrix(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def kernel_basis(a, p: int) -> list[list[int]]:
    """One basis vector per free column, in increasing free-column order."""
    m, pivots = rref(a, p)
    cols = m.shape[1]
    pivot_set = set(pivots)
    basis = []
    for j in range(cols):
        if j in pivot_set:
            continue
        v = [0] * cols
        v[j] = 1
        for row, c in enumerate(pivots):
            v[c] = int(-m[row, j]) % p
        basis.append(v)
    return basis


def kernel_vector(a, p: int) -> list[int] | None:
    """A nonzero vector v with a @ v == 0 (mod p), or None if a has full
    column rank. Picks the basis vector of the first free column."""
    m = as_matrix(a, p)
    if m.shape[1] == 0:
        return None
    basis = kernel_basis(m, p)
    return basis[0] if basis else None


def det_mod_p(a, p: int) -> int:
    m = as_matrix(a, p).copy()
    n, cols = m.shape
    if n != cols:
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for c in range(n):
        nz = np.flatnonzero(m[c:, c])
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            det = -det
        pv = int(m[c, c])
        det = det * pv % p
        inv = pow(pv, -1, p)
        below = m[c + 1 :, c].copy()
        hit = np.flatnonzero(below)
        if hit.size:
            rows = hit + c + 1
            m[rows] = (m[rows] - np.outer(below[hit] * inv % p, m[c])) % p
    return det % p


def matvec(a, v, p: int) -> list[int]:
    m = as_matrix(a, p)
    vec = np.array(v, dtype=m.dtype) % p
    if m.dtype == object:
        return [int(sum(x * y for x, y in zip(row, vec)) % p) for row in m]
    # row-by-row accumulation keeps int64 sums from overflowing
    out = []
    for row in m:
        acc = 0
        for x, y in zip(row.tolist(), vec.tolist()):
            acc = (acc + x * y) % p
        out.append(acc)
    return out
