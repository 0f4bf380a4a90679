"""Determinant evaluation and exact linear solves.

Exact (rational/integer) matrices go through fraction-free Bareiss
elimination; floating matrices use Gaussian elimination with partial
pivoting, which also yields a cheap pivot-ratio condition indicator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import KernelDegeneracyError


@dataclass(frozen=True)
class DetResult:
    value: object
    condition: float = 1.0


def bareiss_det(rows):
    """Exact determinant by fraction-free elimination with row pivoting."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev
            a[r][c] = 0 * a[r][c]
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def pivoted_det(rows):
    """Partially pivoted elimination; returns value plus pivot-ratio condition."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return DetResult(1.0)
    sign = 1
    pivots = []
    for c in range(n):
        p = max(range(c, n), key=lambda r: abs(a[r][c]))
        if a[p][c] == 0:
            return DetResult(0 * a[0][0], float("inf"))
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        pivots.append(abs(a[c][c]))
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for j in range(c, n):
                a[r][j] = a[r][j] - f * a[c][j]
    det = a[0][0]
    for c in range(1, n):
        det = det * a[c][c]
    cond = float(max(pivots) / min(pivots))
    return DetResult(sign * det, cond)


def determinant(rows, exact):
    return bareiss_det(rows) if exact else pivoted_det(rows).value


def solve_exact(matrix, rhs):
    """Solve a square exact linear system; raises on singularity."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise KernelDegeneracyError("coefficient system is singular")
        a[c], a[p] = a[p], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                for j in range(c, n + 1):
                    a[r][j] -= f * a[c][j]
    return [a[r][n] / a[r][r] for r in range(n)]
