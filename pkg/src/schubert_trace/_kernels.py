"""Hot loops of the verification sweeps.

Each kernel has a vectorized numpy implementation (``*_numpy``) and, when
numba is importable, a compiled loop implementation (``*_numba``).  The
unsuffixed name is bound to the numba path unless ``SCHUBERT_TRACE_NUMBA=0``
is set in the environment before import, or numba is missing.

Poset elements are passed as 2-D int64 arrays, one 1-based index per row.
Minors of different sizes are right-padded with a large sentinel so that
componentwise comparison against a shorter minor only looks at its prefix.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SCHUBERT_TRACE_NUMBA", "1") != "0"
BACKEND = "numba" if USE_NUMBA else "numpy"

INT64_LIMIT = 2**62


def int64_safe(m: int, bound: int) -> bool:
    """Whether fraction-free elimination on m x m matrices with entries in
    [-bound, bound], and products of two such determinants, stay in int64.

    Bareiss intermediates are minors, so the Hadamard bound (sqrt(m) * bound)^m
    squared covers both.
    """
    return m**m * bound ** (2 * m) < INT64_LIMIT


def encode_weights(n: int, m: int) -> np.ndarray:
    """Mixed-radix weights turning an index tuple with entries <= n into a key."""
    return (n + 1) ** np.arange(m - 1, -1, -1, dtype=np.int64)


# -- numpy implementations ---------------------------------------------------


def leq_matrix_numpy(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A[:, None, :] <= B[None, :, :]).all(axis=2)


def join_keys_numpy(A: np.ndarray, B: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return (np.maximum(A[:, None, :], B[None, :, :]) @ weights).reshape(-1)


def meet_keys_numpy(A: np.ndarray, B: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return (np.minimum(A[:, None, :], B[None, :, :]) @ weights).reshape(-1)


def bi_leq_matrix_numpy(sa, RA, CA, sb, RB, CB) -> np.ndarray:
    """out[i, j] = (minor i <= minor j) in the all-minors order; padded rows/cols."""
    size_ok = sa[:, None] >= sb[None, :]
    width = RA.shape[1]
    # positions past the size of the upper element are ignored
    live = np.arange(width)[None, :] < sb[:, None]
    r_ok = (RA[:, None, :] <= RB[None, :, :]) | ~live[None, :, :]
    c_ok = (CA[:, None, :] <= CB[None, :, :]) | ~live[None, :, :]
    return size_ok & r_ok.all(axis=2) & c_ok.all(axis=2)


def batch_det_numpy(M: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack of int64 square matrices (Bareiss with
    per-matrix row pivoting).  The caller must guarantee ``int64_safe``."""
    M = np.array(M, dtype=np.int64, copy=True)
    k_mats, m, _ = M.shape
    if m == 0:
        return np.ones(k_mats, dtype=np.int64)
    sign = np.ones(k_mats, dtype=np.int64)
    dead = np.zeros(k_mats, dtype=bool)
    prev = np.ones(k_mats, dtype=np.int64)
    idx = np.arange(k_mats)
    for k in range(m - 1):
        col = M[:, k:, k]
        nz = col != 0
        has = nz.any(axis=1)
        dead |= ~has
        piv = k + np.argmax(nz, axis=1)
        swap = has & (piv != k)
        if swap.any():
            rows_k = M[idx[swap], k, :].copy()
            M[idx[swap], k, :] = M[idx[swap], piv[swap], :]
            M[idx[swap], piv[swap], :] = rows_k
            sign[swap] = -sign[swap]
        p = np.where(dead, 1, M[:, k, k])
        sub = M[:, k + 1 :, k + 1 :] * p[:, None, None] - M[:, k + 1 :, k : k + 1] * M[:, k : k + 1, k + 1 :]
        M[:, k + 1 :, k + 1 :] = sub // prev[:, None, None]
        prev = p
    det = sign * M[:, m - 1, m - 1]
    det[dead] = 0
    return det


def maximal_minors_numpy(M: np.ndarray, combos: np.ndarray) -> np.ndarray:
    """All m-minors of an m x N int64 matrix for the 0-based column tuples in ``combos``."""
    sub = M[:, combos].transpose(1, 0, 2)
    return batch_det_numpy(sub)


# -- numba implementations ---------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def leq_matrix_numba(A, B):
        na, m = A.shape
        nb = B.shape[0]
        out = np.zeros((na, nb), dtype=np.bool_)
        for i in range(na):
            for j in range(nb):
                ok = True
                for l in range(m):
                    if A[i, l] > B[j, l]:
                        ok = False
                        break
                out[i, j] = ok
        return out

    @njit(cache=True)
    def join_keys_numba(A, B, weights):
        na, m = A.shape
        nb = B.shape[0]
        out = np.empty(na * nb, dtype=np.int64)
        for i in range(na):
            for j in range(nb):
                key = 0
                for l in range(m):
                    v = A[i, l] if A[i, l] > B[j, l] else B[j, l]
                    key += v * weights[l]
                out[i * nb + j] = key
        return out

    @njit(cache=True)
    def meet_keys_numba(A, B, weights):
        na, m = A.shape
        nb = B.shape[0]
        out = np.empty(na * nb, dtype=np.int64)
        for i in range(na):
            for j in range(nb):
                key = 0
                for l in range(m):
                    v = A[i, l] if A[i, l] < B[j, l] else B[j, l]
                    key += v * weights[l]
                out[i * nb + j] = key
        return out

    @njit(cache=True)
    def bi_leq_matrix_numba(sa, RA, CA, sb, RB, CB):
        na = sa.shape[0]
        nb = sb.shape[0]
        out = np.zeros((na, nb), dtype=np.bool_)
        for i in range(na):
            for j in range(nb):
                if sa[i] < sb[j]:
                    continue
                ok = True
                for l in range(sb[j]):
                    if RA[i, l] > RB[j, l] or CA[i, l] > CB[j, l]:
                        ok = False
                        break
                out[i, j] = ok
        return out

    @njit(cache=True)
    def _det_bareiss_numba(A):
        m = A.shape[0]
        M = A.copy()
        sign = 1
        prev = 1
        for k in range(m - 1):
            if M[k, k] == 0:
                p = -1
                for r in range(k + 1, m):
                    if M[r, k] != 0:
                        p = r
                        break
                if p < 0:
                    return 0
                for c in range(m):
                    tmp = M[k, c]
                    M[k, c] = M[p, c]
                    M[p, c] = tmp
                sign = -sign
            for i in range(k + 1, m):
                for j in range(k + 1, m):
                    M[i, j] = (M[i, j] * M[k, k] - M[i, k] * M[k, j]) // prev
            prev = M[k, k]
        return sign * M[m - 1, m - 1]

    @njit(cache=True)
    def batch_det_numba(M):
        k_mats = M.shape[0]
        out = np.empty(k_mats, dtype=np.int64)
        for q in range(k_mats):
            if M.shape[1] == 0:
                out[q] = 1
            else:
                out[q] = _det_bareiss_numba(M[q])
        return out

    @njit(cache=True)
    def maximal_minors_numba(M, combos):
        m = M.shape[0]
        nc = combos.shape[0]
        out = np.empty(nc, dtype=np.int64)
        sub = np.empty((m, m), dtype=np.int64)
        for q in range(nc):
            for i in range(m):
                for j in range(m):
                    sub[i, j] = M[i, combos[q, j]]
            out[q] = _det_bareiss_numba(sub)
        return out

else:  # pragma: no cover
    leq_matrix_numba = join_keys_numba = meet_keys_numba = None
    bi_leq_matrix_numba = batch_det_numba = maximal_minors_numba = None


if USE_NUMBA:
    leq_matrix = leq_matrix_numba
    join_keys = join_keys_numba
    meet_keys = meet_keys_numba
    bi_leq_matrix = bi_leq_matrix_numba
    batch_det = batch_det_numba
    maximal_minors = maximal_minors_numba
else:
    leq_matrix = leq_matrix_numpy
    join_keys = join_keys_numpy
    meet_keys = meet_keys_numpy
    bi_leq_matrix = bi_leq_matrix_numpy
    batch_det = batch_det_numpy
    maximal_minors = maximal_minors_numpy
