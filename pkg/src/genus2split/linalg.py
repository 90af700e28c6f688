"""Exact linear algebra over F_p for word-size primes, on top of numpy.

The matrix is held as float64 with integer entries in [0, p).  Elimination is
blocked: a panel of ``block`` columns is factored with int64 row operations,
then the trailing matrix is updated with one BLAS product.  Every partial sum
in that product is below block * (p - 1)^2 < 2^53, so float64 arithmetic is
exact and the result does not depend on BLAS threading or summation order.

Pivoting takes the first row with a nonzero entry in the current column, so
the echelon form, and hence the nullspace basis read off from it, is
deterministic.  The basis is the reduced one: each vector has a 1 in its own
free column and 0 in the other free columns, which makes it unique.
"""

from __future__ import annotations

import numpy as np

__all__ = ["max_block", "nullspace_mod_p", "rank_mod_p", "row_echelon_mod_p"]

_EXACT = 2 ** 53


def max_block(p: int) -> int:
    return max(1, (_EXACT - p) // ((p - 1) ** 2))


def _inv(a: int, p: int) -> int:
    return pow(int(a), -1, p)


def row_echelon_mod_p(matrix, p: int, block: int = 256):
    """Row echelon form of ``matrix`` mod p.

    Returns ``(U, pivots)``: U holds the rank nonzero rows (float64, entries
    in [0, p)) and pivots[i] is the pivot column of row i.
    """
    block = max(1, min(block, max_block(p)))
    A = np.array(matrix, dtype=np.float64) % p
    N, n = A.shape
    pivots: list[int] = []
    r = 0
    for j0 in range(0, n, block):
        if r == N:
            break
        j1 = min(j0 + block, n)
        P = A[r:, j0:j1].astype(np.int64)
        perm = np.arange(N - r)
        local: list[int] = []  # panel-relative pivot columns
        kk = 0
        for c in range(j1 - j0):
            if kk == P.shape[0]:
                break
            nz = np.flatnonzero(P[kk:, c])
            if nz.size == 0:
                continue
            i = kk + int(nz[0])
            if i != kk:
                P[[kk, i]] = P[[i, kk]]
                perm[[kk, i]] = perm[[i, kk]]
            piv = int(P[kk, c])
            rows = kk + 1 + np.flatnonzero(P[kk + 1:, c])
            if rows.size:
                m = P[rows, c] * _inv(piv, p) % p
                P[rows, c + 1:] = (P[rows, c + 1:] - m[:, None] * P[kk, c + 1:]) % p
                P[rows, c] = m  # multipliers kept in place, LAPACK style
            local.append(c)
            kk += 1
        k = kk
        A[r:] = A[r:][perm]
        if j1 < n and k:
            L = np.zeros((N - r, k), dtype=np.int64)
            for b, c in enumerate(local):
                L[b + 1:, b] = P[b + 1:, c]
            T = A[r:, j1:]
            # top rows: forward substitution with the unit lower triangle
            for a in range(1, k):
                coeffs = L[a, :a].astype(np.float64)
                T[a] = np.remainder(T[a] - coeffs @ T[:a], p)
            if N - r > k:
                T[k:] = np.remainder(T[k:] - L[k:].astype(np.float64) @ T[:k], p)
        # clean panel: keep U rows, zero multipliers and eliminated rows
        U = P[:k].copy()
        for b, c in enumerate(local):
            U[b + 1:, c] = 0
        A[r:r + k, j0:j1] = U
        A[r + k:, j0:j1] = 0
        pivots.extend(j0 + c for c in local)
        r += k
    return A[:r], pivots


def rank_mod_p(matrix, p: int, block: int = 256) -> int:
    return len(row_echelon_mod_p(matrix, p, block)[1])


def nullspace_mod_p(matrix, p: int, block: int = 256) -> list[np.ndarray]:
    """Reduced basis of the right nullspace of ``matrix`` mod p (int64 vectors)."""
    U, pivots = row_echelon_mod_p(matrix, p, block)
    n = np.asarray(matrix).shape[1]
    U = U.astype(np.int64)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    inv_diag = [_inv(U[i, c], p) for i, c in enumerate(pivots)]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            s = int(U[i, c + 1:] @ v[c + 1:]) % p
            v[c] = (-s * inv_diag[i]) % p
        basis.append(v)
    return basis
