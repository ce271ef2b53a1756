from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dnamatrix import combinatorics
from dnamatrix.combinatorics import alt_sum, binom_ext, p_stifel_rhs


@pytest.mark.parametrize("p, q, want", [(5, 2, 10), (3, 7, 0), (4, -1, 0), (0, 0, 1), (7, 7, 1)])
def test_binom_ext_examples(p, q, want):
    assert binom_ext(p, q) == want


def test_negative_upper_index_rejected():
    with pytest.raises(ValueError):
        binom_ext(-1, 0)


def test_memo_table_matches_direct_beyond_cap():
    cap = combinatorics.PASCAL_CAP
    for p in (cap - 1, cap, cap + 17):
        for q in (0, 1, p // 3, p // 2, p):
            assert binom_ext(p, q) == comb(p, q)


@given(st.integers(1, 300), st.integers(-5, 305))
def test_classical_stifel(n, k):
    assert binom_ext(n, k) == binom_ext(n - 1, k - 1) + binom_ext(n - 1, k)


def test_p_stifel_examples():
    assert p_stifel_rhs(6, 3, 1) == 20 == comb(5, 2) + comb(5, 3)
    # brute force: sum over i of C(3, i) C(7, 4 - 3 + i)
    assert p_stifel_rhs(10, 4, 3) == sum(comb(3, i) * comb(7, 1 + i) for i in range(4)) == 210
    for n in range(8):
        for k in range(-2, n + 3):
            assert p_stifel_rhs(n, k, 0) == binom_ext(n, k)


def test_p_stifel_rejects_p_above_n():
    with pytest.raises(ValueError):
        p_stifel_rhs(3, 1, 4)


def test_alt_sum_examples():
    assert alt_sum(4, 4) == -1
    assert alt_sum(2, 1) == 0
    assert alt_sum(5, 9) == 0


def test_alt_sum_holds_for_row_indices():
    for j in range(1, 41):
        for i in range(1, 46):
            assert alt_sum(j, i) == (-1 if i == j else 0)


def test_alt_sum_at_zero_row_index_is_alternating():
    # i = 0 is never a matrix row; there the sum is (-1)^j rather than 0
    for j in range(1, 41):
        assert alt_sum(j, 0) == (-1) ** j


def test_alt_sum_rejects_j_zero():
    with pytest.raises(ValueError):
        alt_sum(0, 0)
