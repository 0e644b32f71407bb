"""Combinatorial weight coefficients for higher-order Newton numbers.

For a tuple d = (d_1, ..., d_k) of positive integers and l >= k:

    F(l, k, d) = sum over weak compositions i_1+...+i_k = l-k
                 of d_1^(i_1+1) * ... * d_k^(i_k+1)
    G(l, k, d) = same sum of d_1^(i_1) * ... * d_k^(i_k)

Both are symmetric in d and related by F = (prod d) * G.  At d = (1,...,1),
F(l, k, d) counts the compositions: binomial(l-1, k-1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def elementary_symmetric(s: int, values) -> Fraction:
    """s-th elementary symmetric polynomial of the given rationals."""
    vals = [Fraction(v) for v in values]
    n = len(vals)
    if s < 0 or s > n:
        raise ValueError(f"elementary symmetric index {s} out of range 0..{n}")
    # coeffs[j] accumulates sigma_j of the prefix processed so far
    coeffs = [Fraction(1)] + [Fraction(0)] * n
    for v in vals:
        for j in range(n, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[s]


def _check_lk(l: int, k: int, d: tuple[int, ...]) -> None:
    if k < 1 or l < k:
        raise ValueError(f"need 1 <= k <= l, got l={l} k={k}")
    if len(d) != k:
        raise ValueError(f"degree tuple has {len(d)} entries, expected {k}")
    if any(v < 1 for v in d):
        raise ValueError("degree entries must be positive integers")


@lru_cache(maxsize=None)
def _g_cached(l: int, k: int, d: tuple[int, ...]) -> int:
    if k == 1:
        return d[0] ** (l - 1)
    total = 0
    # split on the exponent of the last variable
    for last in range(l - k + 1):
        total += d[-1] ** last * _g_cached(l - last - 1, k - 1, d[:-1])
    return total


def g_coeff(l: int, k: int, d) -> int:
    """G(l, k, d): composition sum with bare exponents."""
    dt = tuple(int(v) for v in d)
    _check_lk(l, k, dt)
    return _g_cached(l, k, dt)


def f_coeff(l: int, k: int, d) -> int:
    """F(l, k, d): composition sum with every exponent raised by one."""
    dt = tuple(int(v) for v in d)
    _check_lk(l, k, dt)
    prod = 1
    for v in dt:
        prod *= v
    return prod * _g_cached(l, k, dt)
