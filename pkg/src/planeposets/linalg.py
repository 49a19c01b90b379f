"""Exact determinants and ranks.

Symbolic determinants use fraction-free (Bareiss) elimination, where every
division is exact by construction. Numeric matrices go through
:class:`fractions.Fraction` Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .qpoly import ONE, ZERO, QPoly


def _pivot_row(m: list[list[QPoly]], k: int) -> int | None:
    # Smallest candidate keeps the exact divisions cheap.
    best, best_size = None, None
    for i in range(k, len(m)):
        e = m[i][k]
        if not e.is_zero():
            size = (len(e), e.degree())
            if best_size is None or size < best_size:
                best, best_size = i, size
    return best


def det_bareiss(matrix: Sequence[Sequence[QPoly]]) -> QPoly:
    """Determinant of a square matrix of polynomials."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    m = [[QPoly.coerce(x) for x in row] for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        p = _pivot_row(m, k)
        if p is None:
            return ZERO
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                if mik.is_zero():
                    num = row_i[j] * piv
                else:
                    num = row_i[j] * piv - mik * row_k[j]
                row_i[j] = num if prev == ONE else num.exact_div(prev)
            row_i[k] = ZERO
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _to_fraction_matrix(matrix) -> list[list[Fraction]]:
    out = []
    for row in matrix:
        r = []
        for x in row:
            if isinstance(x, QPoly):
                if not x.is_constant():
                    raise ValueError("numeric routine got a non-constant polynomial")
                x = x.constant_term()
            r.append(Fraction(x))
        out.append(r)
    return out


def det_numeric(matrix) -> Fraction:
    """Exact determinant of a rational (or constant-polynomial) matrix."""
    m = _to_fraction_matrix(matrix)
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        piv = m[k][k]
        det *= piv
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                row_i, row_k = m[i], m[k]
                for j in range(k, n):
                    row_i[j] -= f * row_k[j]
    return det


def rank_numeric(matrix) -> int:
    """Rank over the rationals."""
    m = _to_fraction_matrix(matrix)
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        p = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for i in range(rows):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
