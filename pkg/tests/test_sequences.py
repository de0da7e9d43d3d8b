import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mriordan import (
    OrderTooSmall,
    bivariate_table,
    diagonal_sums,
    hankel_transform,
    identity,
    interleave_split,
    inverse,
    row_sums,
    to_matrix,
)
from mriordan.sequences import (
    bareiss_determinant,
    interleave,
    matrix_diagonal_sums,
    matrix_row_sums,
    naive_determinant,
)

from conftest import random_proper_element


def test_row_sums_example1(example1):
    got = row_sums(example1, 21)
    assert got == [1, 1, 1, 2, 3, 4, 4, 7, 10, 8, 15, 22, 16, 31, 46, 32, 63, 94, 64, 127, 190]
    assert got == matrix_row_sums(example1, 21)


def test_row_sums_example1_inverse(example1):
    got = row_sums(inverse(example1), 12)
    assert got == [1, 1, 1, 0, -1, -2, 0, 1, 4, 0, -1, -8]


def test_row_sums_example2_inverse(example2):
    got = row_sums(inverse(example2), 15)
    assert got == [1, 1, 1, 0, -1, -2, 1, 3, 5, -2, -8, -14, 6, 24, 42]


def test_row_sums_order_guard(example1):
    with pytest.raises(OrderTooSmall):
        row_sums(example1, example1.order + 2)


def test_diagonal_sums_identity():
    got = diagonal_sums(identity(3, 12), 10)
    assert got == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0]


def test_diagonal_sums_match_matrix(example1, example2):
    for e in (example1, example2):
        assert diagonal_sums(e, 16) == matrix_diagonal_sums(e, 16)
        inv = inverse(e)
        assert diagonal_sums(inv, 16) == matrix_diagonal_sums(inv, 16)


def test_dual_path_sums_random():
    rng = random.Random(31)
    for m in (1, 2, 3, 4):
        e = random_proper_element(rng, m, 20)
        assert row_sums(e, 21) == matrix_row_sums(e, 21)
        assert diagonal_sums(e, 21) == matrix_diagonal_sums(e, 21)


def test_bivariate_identity():
    table = bivariate_table(identity(3, 10), 8)
    for n, row in enumerate(table):
        assert row == [1 if k == n else 0 for k in range(n + 1)]


def test_bivariate_matches_matrix(example1, example2):
    for e in (example1, example2):
        rows = 12
        mat = to_matrix(e, rows)
        table = bivariate_table(e, rows)
        for n in range(rows):
            assert table[n] == [mat[n, k] for k in range(n + 1)]


def test_bivariate_paper_rows(example1, example2):
    row8 = bivariate_table(example1, 9)[8]
    assert row8[2] == 5 and row8[5] == 4
    assert bivariate_table(example2, 9)[8][2] == 4


def test_hankel_catalan():
    assert hankel_transform([1, 1, 2, 5, 14, 42, 132]) == [1, 1, 1, 1]


def test_hankel_output_length():
    assert len(hankel_transform([1, 2, 3, 4, 5])) == 3
    assert len(hankel_transform([1])) == 1


def test_hankel_example2_slots(example2):
    rs = row_sums(inverse(example2), 30)
    slots = interleave_split(rs, 3)
    assert slots[0][:7] == [1, 0, 1, -2, 6, -18, 57]  # signed Fine numbers
    assert slots[1][:7] == [1, -1, 3, -8, 24, -75, 243]
    assert slots[2][:7] == [1, -2, 5, -14, 42, -132, 429]  # signed C(n+1)
    assert hankel_transform(slots[0])[:5] == [1, 1, 1, 1, 1]
    assert hankel_transform(slots[1])[:5] == [1, 2, 5, 13, 34]  # F(2n+1)
    assert hankel_transform(slots[2])[:5] == [1, 1, 1, 1, 1]


small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


@given(small_matrices)
@settings(max_examples=80, deadline=None)
def test_bareiss_matches_cofactor_expansion(rows):
    assert bareiss_determinant(rows) == naive_determinant(rows)


def test_bareiss_rational_entries():
    rows = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(1, 5), Fraction(2, 7)],
    ]
    assert bareiss_determinant(rows) == naive_determinant(rows)


def test_hankel_agrees_with_naive_small():
    seq = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
    for n in range(7):
        mat = [[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]
        assert hankel_transform(seq)[n] == naive_determinant(mat)


def test_interleave_split_examples(example1):
    slots = interleave_split(row_sums(example1, 21), 3)
    assert slots[0] == [1, 2, 4, 8, 16, 32, 64]
    assert slots[1] == [1, 3, 7, 15, 31, 63, 127]
    assert slots[2] == [1, 4, 10, 22, 46, 94, 190]


def test_interleave_split_m1():
    assert interleave_split([3, 1, 4], 1) == [[3, 1, 4]]


@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=20),
    st.integers(min_value=1, max_value=5),
)
@settings(max_examples=60, deadline=None)
def test_interleave_round_trip(seq, m):
    assert interleave(interleave_split(seq, m)) == seq
