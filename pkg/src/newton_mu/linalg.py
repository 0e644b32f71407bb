"""Exact linear algebra over Fraction.

Matrices are lists of row lists. Everything here is plain Gaussian
elimination with exact pivots; sizes stay tiny (ambient dimension <= 6,
oracle matrices a few hundred rows), so no fraction-free tricks are needed.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def _as_fraction_rows(matrix) -> Matrix:
    return [[Fraction(entry) for entry in row] for row in matrix]


def determinant(matrix) -> Fraction:
    """Exact determinant of a square matrix of rationals."""
    rows = _as_fraction_rows(matrix)
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise ValueError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] / pivot
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def rank(matrix) -> int:
    """Row rank over the rationals."""
    rows = [row for row in _as_fraction_rows(matrix) if any(row)]
    if not rows:
        return 0
    cols = len(rows[0])
    rk = 0
    for col in range(cols):
        pivot_row = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rk], rows[pivot_row] = rows[pivot_row], rows[rk]
        pivot = rows[rk][col]
        for r in range(rk + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / pivot
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


def solve(matrix, rhs) -> list[Fraction] | None:
    """Solve A x = b exactly.

    Accepts rectangular A; returns one solution (free variables pinned to 0)
    or None when inconsistent.
    """
    rows = _as_fraction_rows(matrix)
    b = [Fraction(v) for v in rhs]
    if len(rows) != len(b):
        raise ValueError("rhs length mismatch")
    if not rows:
        return []
    cols = len(rows[0])
    aug = [row + [bv] for row, bv in zip(rows, b)]
    pivots: list[tuple[int, int]] = []
    rk = 0
    for col in range(cols):
        pivot_row = next((r for r in range(rk, len(aug)) if aug[r][col] != 0), None)
        if pivot_row is None:
            continue
        aug[rk], aug[pivot_row] = aug[pivot_row], aug[rk]
        pivot = aug[rk][col]
        aug[rk] = [v / pivot for v in aug[rk]]
        for r in range(len(aug)):
            if r != rk and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * bv for a, bv in zip(aug[r], aug[rk])]
        pivots.append((rk, col))
        rk += 1
    for r in range(rk, len(aug)):
        if aug[r][cols] != 0:
            return None
    solution = [Fraction(0)] * cols
    for row, col in pivots:
        solution[col] = aug[row][cols]
    return solution


def nullspace_vector(matrix) -> list[Fraction] | None:
    """One nonzero kernel vector of A, or None when A has full column rank."""
    rows = _as_fraction_rows(matrix)
    if not rows:
        return None
    cols = len(rows[0])
    aug = [list(row) for row in rows]
    pivots: dict[int, int] = {}
    rk = 0
    for col in range(cols):
        pivot_row = next((r for r in range(rk, len(aug)) if aug[r][col] != 0), None)
        if pivot_row is None:
            continue
        aug[rk], aug[pivot_row] = aug[pivot_row], aug[rk]
        pivot = aug[rk][col]
        aug[rk] = [v / pivot for v in aug[rk]]
        for r in range(len(aug)):
            if r != rk and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * bv for a, bv in zip(aug[r], aug[rk])]
        pivots[col] = rk
        rk += 1
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    vec = [Fraction(0)] * cols
    vec[f] = Fraction(1)
    for col, row in pivots.items():
        vec[col] = -aug[row][f]
    return vec


def primitive_integer_vector(vec) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (sign preserved)."""
    from math import gcd, lcm

    fracs = [Fraction(v) for v in vec]
    if all(v == 0 for v in fracs):
        raise ValueError("zero vector has no primitive form")
    denom = lcm(*[v.denominator for v in fracs])
    ints = [int(v * denom) for v in fracs]
    g = gcd(*ints)
    return tuple(v // g for v in ints)
