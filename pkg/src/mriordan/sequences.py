"""Derived sequences and transforms: row sums, diagonal sums, the
bivariate table, Hankel transforms, interleavings."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import OrderTooSmall
from .group import MRiordanElement, step_series, to_matrix
from .series import Series


def _prefix_products(e: MRiordanElement) -> list:
    """[1, f_1, f_1*f_2, ..., f_1*...*f_{m-1}] at the element's order."""
    out = [Series.one(e.order)]
    for fi in e.f[: e.m - 1]:
        out.append(out[-1] * fi)
    return out


def row_sums(e: MRiordanElement, terms: int) -> list:
    """Row sums via the closed generating function
    g * (1 + f_1 + f_1 f_2 + ...) / (1 - f_1...f_m)."""
    if terms > e.order + 1:
        raise OrderTooSmall(f"{terms} terms need order >= {terms - 1}")
    num = e.g * sum(_prefix_products(e), Series.zero(e.order))
    den = 1 - step_series(e)
    return list((num / den).coeffs[:terms])


def diagonal_sums(e: MRiordanElement, terms: int) -> list:
    """Diagonal sums sum_k a_{n-k,k} via the y -> x substitution in the
    bivariate generating function."""
    if terms > e.order + 1:
        raise OrderTooSmall(f"{terms} terms need order >= {terms - 1}")
    n = e.order
    num = Series.zero(n)
    for j, p in enumerate(_prefix_products(e)):
        num = num + (e.g * p).shift_up(j).truncate(n)
    den = 1 - step_series(e).shift_up(e.m).truncate(n)
    return list((num / den).coeffs[:terms])


def bivariate_table(e: MRiordanElement, rows: int) -> list:
    """Rows of the bivariate expansion: row n is the coefficient list (over
    powers of y) of [x^n] in g*(sum_j y^j f_1..f_j)/(1 - y^m f_1..f_m).

    Expanding the geometric series in y^m*w gives column k = j + m*r the
    generating function g * (f_1..f_j) * w^r, an expansion path independent
    of the incremental column products used by ``to_matrix``.
    """
    if rows > e.order + 1:
        raise OrderTooSmall(f"{rows} rows need order >= {rows - 1}")
    w = step_series(e)
    prefixes = [e.g * p for p in _prefix_products(e)]
    cols = []
    wpow = Series.one(e.order)
    for r in range(rows // e.m + 1):
        for j in range(e.m):
            cols.append(prefixes[j] * wpow)
        wpow = wpow * w
    return [[cols[k][n] for k in range(n + 1)] for n in range(rows)]


def matrix_row_sums(e: MRiordanElement, terms: int) -> list:
    """Row sums by literally summing matrix rows; cross-check path."""
    return to_matrix(e, terms).row_sums()


def matrix_diagonal_sums(e: MRiordanElement, terms: int) -> list:
    """sum_k a_{n-k,k} straight off the matrix; cross-check path."""
    mat = to_matrix(e, terms)
    return [
        sum(mat[n - k, k] for k in range(n // 2 + 1)) for n in range(terms)
    ]


# -- Hankel transform ----------------------------------------------------


def bareiss_determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    For integer input every intermediate value stays an integer; rational
    input works the same way since the divisions are exact by construction.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(v) for v in row] for row in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def naive_determinant(rows: Sequence[Sequence]) -> Fraction:
    """Cofactor expansion; exponential-time oracle for small matrices."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [
            [row[c] for c in range(n) if c != j] for row in rows[1:]
        ]
        term = Fraction(rows[0][j]) * naive_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


def hankel_transform(seq: Sequence) -> list:
    """Term n is det [s_{i+j}] for 0 <= i,j <= n; ceil(L/2) terms."""
    length = len(seq)
    count = (length + 1) // 2
    out = []
    for n in range(count):
        mat = [[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]
        out.append(bareiss_determinant(mat))
    return out


def interleave_split(seq: Sequence, m: int) -> list:
    """Slot j holds the terms at indices congruent to j mod m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return [list(seq[j::m]) for j in range(m)]


def interleave(slots: Sequence[Sequence]) -> list:
    """Inverse of interleave_split (up to trailing-length bookkeeping)."""
    m = len(slots)
    total = sum(len(s) for s in slots)
    out = []
    for n in range(total):
        out.append(slots[n % m][n // m])
    return out
