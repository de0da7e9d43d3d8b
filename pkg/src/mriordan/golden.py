"""Built-in golden fixtures: every published reference value this package
reproduces, runnable as one suite (the CLI's ``verify-paper`` verb).

Each check recomputes a quantity from first principles (group arithmetic,
lattice counting) and compares it against the frozen reference data below.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import group, lattice, sequences
from .documents import element_from_doc
from .expressions import evaluate_text
from .lattice import LatticeSpec
from .series import Series

DEFAULT_ORDER = 60

# -- reference element documents ----------------------------------------

EXAMPLE1_DOC = {
    "m": 3,
    "order": DEFAULT_ORDER,
    "let": [],
    "g": "1/(1-x^3)",
    "f": ["x/(1-x^3)", "x*(1+x^3)", "x/(1+x^3)"],
}

EXAMPLE2_DOC = {
    "m": 3,
    "order": DEFAULT_ORDER,
    "let": [],
    "g": "1+x^3",
    "f": ["x*(1+x^3)", "x/(1-x^3)", "x*(1-x^3)"],
}

EXAMPLE3_DOC = {
    "m": 3,
    "order": DEFAULT_ORDER,
    "let": [],
    "g": "1/(1+x^3)",
    "f": ["x/(1+x^3)", "x/(1+x^3)", "x/(1+x^3)"],
}

EXAMPLE1_INVERSE_EXPRS = (
    "1/(1+x^3)",
    "x/(1+x^3)",
    "x*(1+x^3)/(1+2*x^3)",
    "x*(1+2*x^3)/(1+x^3)",
)

EXAMPLE2_INVERSE_EXPRS = (
    "catalan(-x^3)",
    "x*catalan(-x^3)",
    "x*(1-x^3*catalan(-x^3))",
    "x/(1-x^3*catalan(-x^3))",
)

# -- lattice specifications ----------------------------------------------

THREEFOLD_DOC = {
    "m": 3,
    "rules": [
        [[1, 1], [1, -1]],  # Dyck steps into columns k = 0 (mod 3)
        [[1, 1], [1, 0], [1, -1]],  # Motzkin steps
        [[1, 1], [2, 0], [1, -1]],  # Schroeder steps (long level step)
    ],
    "boundary": "standard",
}

STEPSET_1UP_2DOWN_DOC = {
    "m": 1,
    "rules": [[[1, 1], [1, -2]]],
    "boundary": "standard",
}

# Closed forms for the three-fold lattice columns.  f_1 is not given
# directly: it is (1/x)*(1 - 1/g), built programmatically below.
LATTICE_G_EXPR = (
    "(1-x-2*x^2+x^3)/(1-x-2*x^2+x^4)"
    "*catalan(x^2*(1-x-x^2)*(1-x-2*x^2+x^3)/(1-x-2*x^2+x^4)^2)"
)
LATTICE_F2_EXPR = (
    "x*(1-x-x^2)/(1-x-2*x^2+2*x^3+x^4)"
    "*catalan(x^2*(1-x-x^2)*(1-2*x^2)/(1-x-2*x^2+2*x^3+x^4)^2)"
)
LATTICE_LEFT_FACTOR_GF_EXPR = (
    "(1-2*x^2)/(1-2*x-3*x^2+4*x^3+x^4-x^5)"
    "*catalan(-x*(1-x-x^2)*(1-2*x^2)*(1-x-4*x^2+x^4)"
    "/(1-2*x-3*x^2+4*x^3+x^4-x^5)^2)"
)

# -- frozen reference values ----------------------------------------------

EXAMPLE1_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 2, 0, 0, 1, 0, 0],
    [0, 3, 0, 0, 3, 0, 0, 1, 0],
    [0, 0, 5, 0, 0, 4, 0, 0, 1],
]

EXAMPLE1_INVERSE_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, -2, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, -3, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, -2, 0, 0, 1, 0, 0],
    [0, 3, 0, 0, -3, 0, 0, 1, 0],
    [0, 0, 7, 0, 0, -4, 0, 0, 1],
]

EXAMPLE1_ROW_SUMS = [
    1, 1, 1, 2, 3, 4, 4, 7, 10, 8, 15, 22, 16, 31, 46, 32, 63, 94, 64, 127, 190,
]

EXAMPLE1_SLOTS = [
    [1, 2, 4, 8, 16, 32, 64],  # 2^n
    [1, 3, 7, 15, 31, 63, 127],  # 2^(n+1) - 1
    [1, 4, 10, 22, 46, 94, 190],  # 3*2^n - 2
]

EXAMPLE1_INVERSE_ROW_SUMS = [
    1, 1, 1, 0, -1, -2, 0, 1, 4, 0, -1, -8, 0, 1, 16, 0, -1, -32, 0, 1, 64, 0, -1,
]

FTRA_ARG_EXPR = "(1-x^3)/(1+x^3)"
FTRA_EXAMPLE1_RESULT = [1, 0, 0] + [-1, 0, 0] * 6  # (1-2x^3)/(1-x^3), 21 terms
FTRA_EXAMPLE1_INVERSE_RESULT = [
    1, 0, 0, -3, 0, 0, 7, 0, 0, -15, 0, 0, 31, 0, 0, -63, 0, 0, 127, 0, 0,
]

EXAMPLE2_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 2, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 3, 0, 0, 1, 0],
    [0, 0, 4, 0, 0, 4, 0, 0, 1],
]

EXAMPLE2_ROW_SUMS = [
    1, 1, 1, 2, 3, 4, 3, 5, 9, 5, 8, 17, 8, 13, 30, 13, 21, 51, 21, 34, 85, 34, 55,
]

FTRA2_ARG_EXPR = "(1+x^3)/(1-x^3)"
FTRA_EXAMPLE2_RESULT_EXPR = "(1+x^3)*(1+x^3+x^6)/(1-x^3-x^6)"

EXAMPLE2_INVERSE_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, -2, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, -3, 0, 0, 1, 0, 0, 0, 0],
    [2, 0, 0, -2, 0, 0, 1, 0, 0, 0],
    [0, 5, 0, 0, -3, 0, 0, 1, 0, 0],
    [0, 0, 8, 0, 0, -4, 0, 0, 1, 0],
    [-5, 0, 0, 5, 0, 0, -3, 0, 0, 1],
]

EXAMPLE2_INVERSE_ROW_SUMS = [
    1, 1, 1, 0, -1, -2, 1, 3, 5, -2, -8, -14, 6, 24, 42, -18, -75, -132, 57, 243, 429,
]

# Hankel transforms of the three interleaved slots of the sequence above.
# The slots carry alternating signs relative to their unsigned OEIS
# versions; conjugating by diag((-1)^i) leaves every Hankel determinant
# unchanged, so the stated values hold for the slots exactly as extracted.
HANKEL_SLOT_EXPECTED = [
    [1, 1, 1, 1, 1],  # signed Fine numbers
    [1, 2, 5, 13, 34],  # F(2n+1)
    [1, 1, 1, 1, 1],  # signed Catalan C(n+1)
]

EXAMPLE3_INVERSE_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 1, 0, 0, 0, 0],
    [3, 0, 0, 4, 0, 0, 1, 0, 0, 0],
    # The published display shows 5 in column 1 here, but the example's
    # own recurrence t(n,k) = t(n-1,k-1) + t(n-1,k+2) forces
    # t(7,1) = t(6,0) + t(6,3) = 3 + 4 = 7; the group inverse agrees.
    [0, 7, 0, 0, 5, 0, 0, 1, 0, 0],
    [0, 0, 12, 0, 0, 6, 0, 0, 1, 0],
    [12, 0, 0, 18, 0, 0, 7, 0, 0, 1],
]

EXAMPLE3_ROW_SUMS = [
    1, 1, 1, 2, 3, 4, 8, 13, 19, 38, 64, 98, 196, 337, 531, 1062, 1851,
]

THREEFOLD_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 3, 1, 1, 0, 0, 0, 0, 0, 0],
    [3, 5, 5, 1, 1, 0, 0, 0, 0, 0],
    [5, 13, 7, 6, 2, 1, 0, 0, 0, 0],
    [13, 25, 24, 9, 9, 2, 1, 0, 0, 0],
    [25, 62, 41, 33, 20, 11, 2, 1, 0, 0],
    [62, 128, 119, 61, 64, 24, 12, 3, 1, 0],
    [128, 309, 230, 183, 149, 87, 27, 16, 3, 1],
]

THREEFOLD_LEFT_FACTORS = [1, 1, 3, 6, 15, 34, 83, 195, 474, 1133, 2756]


# -- fixture machinery -----------------------------------------------------


@dataclass
class FixtureResult:
    name: str
    ok: bool
    detail: str = ""


def _matrix_equals(mat: group.CoeffMatrix, expected) -> bool:
    return all(
        mat[n, k] == expected[n][k]
        for n in range(len(expected))
        for k in range(len(expected))
    )


def lattice_column_series(order: int):
    """The closed-form column series (g, f_1, f_2, f_3) for the three-fold
    lattice; f_1 = (1/x)(1 - 1/g) is derived rather than parsed."""
    g = evaluate_text(LATTICE_G_EXPR, order + 1)
    f1 = (1 - g.recip()).shift_down(1)
    f2 = evaluate_text(LATTICE_F2_EXPR, order)
    f3 = g.shift_up(1).truncate(order)
    return g.truncate(order), f1, f2, f3


def _fixtures():
    e1 = element_from_doc(EXAMPLE1_DOC)
    e2 = element_from_doc(EXAMPLE2_DOC)
    e3 = element_from_doc(EXAMPLE3_DOC)
    order = e1.order

    def ex1_matrix():
        return _matrix_equals(group.to_matrix(e1, 9), EXAMPLE1_MATRIX)

    def ex1_row_sums():
        return sequences.row_sums(e1, 21) == EXAMPLE1_ROW_SUMS

    def ex1_interleaving():
        slots = sequences.interleave_split(sequences.row_sums(e1, 21), 3)
        return slots == EXAMPLE1_SLOTS

    def ex1_inverse_closed_form():
        inv = group.inverse(e1)
        want = [evaluate_text(t, order) for t in EXAMPLE1_INVERSE_EXPRS]
        return inv.g == want[0] and list(inv.f) == want[1:]

    def ex1_inverse_matrix():
        return _matrix_equals(
            group.to_matrix(group.inverse(e1), 9), EXAMPLE1_INVERSE_MATRIX
        )

    def ex1_inverse_is_inverse():
        ident = group.identity(3, order)
        return group.product(e1, group.inverse(e1)) == ident

    def ex1_inverse_row_sums():
        return (
            sequences.row_sums(group.inverse(e1), 23)
            == EXAMPLE1_INVERSE_ROW_SUMS
        )

    def ex1_ftra():
        arg = evaluate_text(FTRA_ARG_EXPR, order)
        got = group.apply_ftra(e1, arg)
        return list(got.coeffs[:21]) == FTRA_EXAMPLE1_RESULT

    def ex1_inverse_ftra():
        arg = evaluate_text(FTRA_ARG_EXPR, order)
        got = group.apply_ftra(group.inverse(e1), arg)
        return list(got.coeffs[:21]) == FTRA_EXAMPLE1_INVERSE_RESULT

    def ex1_semidirect():
        left, right = group.decompose_semidirect(e1)
        return group.product(left, right) == e1

    def ex2_matrix():
        return _matrix_equals(group.to_matrix(e2, 9), EXAMPLE2_MATRIX)

    def ex2_row_sums():
        return sequences.row_sums(e2, 23) == EXAMPLE2_ROW_SUMS

    def ex2_ftra():
        arg = evaluate_text(FTRA2_ARG_EXPR, order)
        want = evaluate_text(FTRA_EXAMPLE2_RESULT_EXPR, order)
        return group.apply_ftra(e2, arg) == want

    def ex2_inverse_closed_form():
        inv = group.inverse(e2)
        want = [evaluate_text(t, order) for t in EXAMPLE2_INVERSE_EXPRS]
        return inv.g == want[0] and list(inv.f) == want[1:]

    def ex2_inverse_matrix():
        return _matrix_equals(
            group.to_matrix(group.inverse(e2), 10), EXAMPLE2_INVERSE_MATRIX
        )

    def ex2_inverse_row_sums():
        return (
            sequences.row_sums(group.inverse(e2), 21)
            == EXAMPLE2_INVERSE_ROW_SUMS
        )

    def ex2_hankel_claims():
        rs = sequences.row_sums(group.inverse(e2), 30)
        slots = sequences.interleave_split(rs, 3)
        for slot, want in zip(slots, HANKEL_SLOT_EXPECTED):
            if sequences.hankel_transform(slot)[:5] != want:
                return False
        return True

    def ex3_classical():
        return "Classical" in group.classify_subgroups(e3)

    def ex3_inverse_matrix():
        return _matrix_equals(
            group.to_matrix(group.inverse(e3), 10), EXAMPLE3_INVERSE_MATRIX
        )

    def ex3_inverse_row_sums():
        return (
            sequences.row_sums(group.inverse(e3), 17) == EXAMPLE3_ROW_SUMS
        )

    def ex3_lattice_match():
        spec = LatticeSpec.from_lists(
            STEPSET_1UP_2DOWN_DOC["m"], STEPSET_1UP_2DOWN_DOC["rules"]
        )
        return lattice.count_table(spec, 10) == group.to_matrix(
            group.inverse(e3), 10
        )

    threefold = LatticeSpec.from_lists(
        THREEFOLD_DOC["m"], THREEFOLD_DOC["rules"]
    )

    def lattice_matrix():
        return _matrix_equals(
            lattice.count_table(threefold, 10), THREEFOLD_MATRIX
        )

    def lattice_left_factors():
        return lattice.left_factors(threefold, 11) == THREEFOLD_LEFT_FACTORS

    def lattice_gf_columns():
        g, f1, f2, f3 = lattice_column_series(21)
        cols = lattice.column_gfs(g, [f1, f2, f3], 6)
        return lattice.verify_against_gf(threefold, cols, 21).ok

    def lattice_left_factor_gf():
        gf = evaluate_text(LATTICE_LEFT_FACTOR_GF_EXPR, 20)
        return list(gf.coeffs) == lattice.left_factors(threefold, 21)

    return [
        ("example1/matrix", ex1_matrix),
        ("example1/row-sums", ex1_row_sums),
        ("example1/interleaving", ex1_interleaving),
        ("example1/inverse-closed-form", ex1_inverse_closed_form),
        ("example1/inverse-matrix", ex1_inverse_matrix),
        ("example1/inverse-round-trip", ex1_inverse_is_inverse),
        ("example1/inverse-row-sums", ex1_inverse_row_sums),
        ("example1/ftra", ex1_ftra),
        ("example1/inverse-ftra", ex1_inverse_ftra),
        ("example1/semidirect-split", ex1_semidirect),
        ("example2/matrix", ex2_matrix),
        ("example2/row-sums", ex2_row_sums),
        ("example2/ftra", ex2_ftra),
        ("example2/inverse-closed-form", ex2_inverse_closed_form),
        ("example2/inverse-matrix", ex2_inverse_matrix),
        ("example2/inverse-row-sums", ex2_inverse_row_sums),
        ("example2/hankel-transforms", ex2_hankel_claims),
        ("example3/classical-embedding", ex3_classical),
        ("example3/inverse-matrix", ex3_inverse_matrix),
        ("example3/inverse-row-sums", ex3_inverse_row_sums),
        ("example3/lattice-recurrence-match", ex3_lattice_match),
        ("lattice/count-table", lattice_matrix),
        ("lattice/left-factors", lattice_left_factors),
        ("lattice/column-gfs", lattice_gf_columns),
        ("lattice/left-factor-gf", lattice_left_factor_gf),
    ]


def run_all() -> list:
    """Run every golden fixture; returns one result per fixture."""
    results = []
    for name, fn in _fixtures():
        try:
            ok = bool(fn())
            results.append(FixtureResult(name, ok, "" if ok else "value mismatch"))
        except Exception as exc:  # a fixture must never kill the suite
            results.append(FixtureResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
