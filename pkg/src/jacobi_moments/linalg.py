"""Determinants on the exact and the floating-point path."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Sequence

import numpy as np

__all__ = ["bareiss_det", "det", "is_exact"]


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination on an integer matrix."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _rational_det(mat) -> Fraction:
    # scale rows to integers, run Bareiss, undo the scaling
    scale = Fraction(1)
    rows = []
    for row in mat:
        row = [Fraction(x) for x in row]
        c = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * c) for x in row])
        scale /= c
    return bareiss_det(rows) * scale


def det(mat):
    """Determinant; exact when every entry is rational, LAPACK LU otherwise."""
    mat = [list(row) for row in mat]
    if not mat:
        return 1
    if all(is_exact(x) for row in mat for x in row):
        return _rational_det(mat)
    return float(np.linalg.det(np.array(mat, dtype=float)))
