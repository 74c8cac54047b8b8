"""Fraction-free Gaussian elimination over Python integers."""
from __future__ import annotations

from typing import Sequence


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Every intermediate entry is a minor of the input, so all divisions are
    exact and nothing leaves the integers.
    """
    M = [[int(x) for x in row] for row in matrix]
    m = len(M)
    if any(len(row) != m for row in M):
        raise ValueError("matrix is not square")
    if m == 0:
        return 1
    sign, prev = 1, 1
    for k in range(m - 1):
        if M[k][k] == 0:
            for p in range(k + 1, m):
                if M[p][k] != 0:
                    M[k], M[p] = M[p], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, m):
            row_i, mik = M[i], M[i][k]
            row_k = M[k]
            for j in range(k + 1, m):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * M[m - 1][m - 1]


def minor(matrix: Sequence[Sequence[int]], cols: Sequence[int], rows: Sequence[int] | None = None) -> int:
    """Determinant of the submatrix on 1-based ``rows`` (default: all) and ``cols``."""
    if rows is None:
        rows = range(1, len(matrix) + 1)
    return det_bareiss([[matrix[i - 1][j - 1] for j in cols] for i in rows])
