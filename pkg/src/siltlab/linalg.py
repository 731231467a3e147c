"""Exact integer linear algebra by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def _copy(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[int(x) for x in row] for row in rows]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix given as a list of rows.

    All intermediate entries stay integral: each elimination step divides
    by the previous pivot, which divides exactly (Sylvester's identity).
    """
    m = _copy(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            for j in range(c, n_cols):
                m[i][j] = (p * m[i][j] - f * m[r][j]) // prev
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix."""
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def nullity(rows: Sequence[Sequence[int]], n_cols: int) -> int:
    """Dimension of the kernel of a matrix with ``n_cols`` columns."""
    if not rows:
        return n_cols
    return n_cols - rank(rows)
