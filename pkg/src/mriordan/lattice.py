"""Brute-force lattice path counting for periodic mixed step sets.

The table t_{n,k} counts paths from (0,0) to (n,k) staying in 0 <= k <= n,
where the admissible steps into column k depend on k mod m.  This is the
independent oracle against which generating-function claims are checked:
the recurrence knows nothing about power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import OrderTooSmall
from .group import CoeffMatrix
from .series import Series


@dataclass(frozen=True)
class LatticeSpec:
    """Recurrence t_{n,k} = sum over rules[k % m] of t_{n-dn, k-dk}.

    Every dn must be >= 1 so the fill makes progress; boundary is
    t_{0,k} = [k = 0] and t_{n,k} = 0 outside 0 <= k <= n.
    """

    m: int
    rules: tuple  # tuple (per residue) of tuples of (dn, dk) source offsets

    def __post_init__(self):
        if self.m < 1 or len(self.rules) != self.m:
            raise ValueError("need exactly one rule list per residue class")
        for rule in self.rules:
            for dn, _ in rule:
                if dn < 1:
                    raise ValueError("every step must advance n (dn >= 1)")

    @classmethod
    def from_lists(cls, m: int, rules: Sequence[Sequence[Sequence[int]]]) -> "LatticeSpec":
        return cls(m, tuple(tuple((dn, dk) for dn, dk in rule) for rule in rules))


def count_table(spec: LatticeSpec, rows: int) -> CoeffMatrix:
    """Dynamic-programming fill of t_{n,k}, exact integers."""
    if rows < 1:
        raise ValueError("rows must be >= 1")
    t = [[0] * rows for _ in range(rows)]
    t[0][0] = 1
    for n in range(1, rows):
        for k in range(n + 1):
            acc = 0
            for dn, dk in spec.rules[k % spec.m]:
                sn, sk = n - dn, k - dk
                if sn >= 0 and 0 <= sk <= sn and sk < rows:
                    acc += t[sn][sk]
            t[n][k] = acc
    return CoeffMatrix(rows, tuple(tuple(row) for row in t))


def left_factors(spec: LatticeSpec, terms: int) -> list:
    """Term n counts path prefixes reaching abscissa n: row sums of the
    counting table."""
    return count_table(spec, terms).row_sums()


def column_gfs(g: Series, f: Sequence[Series], ncols: int) -> list:
    """Columns following the m-Riordan pattern g, g*f_1, g*f_1*f_2, ...
    with the f_i cycling; here the series need not be block-profiled."""
    cols = [g]
    for k in range(1, ncols):
        cols.append(cols[-1] * f[(k - 1) % len(f)])
    return cols


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    checked_rows: int
    checked_cols: int
    mismatch: tuple | None = None  # (n, k, expected_from_table, got_from_gf)

    def __str__(self):
        if self.ok:
            return (
                f"ok: columns 0..{self.checked_cols - 1} match the counting "
                f"table through row {self.checked_rows - 1}"
            )
        n, k, want, got = self.mismatch
        return f"mismatch at (n={n}, k={k}): table has {want}, GF gives {got}"


def verify_against_gf(
    spec: LatticeSpec, column_gfs: Sequence[Series], terms: int
) -> VerifyReport:
    """Compare count_table entries with [x^n] of the supplied column GFs."""
    for col in column_gfs:
        if col.order < terms - 1:
            raise OrderTooSmall(
                f"column GF order {col.order} < {terms - 1}"
            )
    table = count_table(spec, terms)
    for k, col in enumerate(column_gfs):
        for n in range(terms):
            want = table[n, k] if k <= n else 0
            if col[n] != want:
                return VerifyReport(False, terms, len(column_gfs), (n, k, want, col[n]))
    return VerifyReport(True, terms, len(column_gfs))
