from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from punctual.linalg import RationalMatrix, kernel_basis, rank, rref


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** c * m[0][c] * det([row[:c] + row[c + 1:] for row in m[1:]])
               for c in range(len(m)))


def rank_by_minors(m):
    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if det([[Fraction(m[r][c]) for c in cs] for r in rs]) != 0:
                    return k
    return 0


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@pytest.mark.parametrize("m, r", [
    ([[1, 0], [0, 1]], 2),
    ([[0] * 5 for _ in range(3)], 0),
    ([[1, 2], [2, 4], [3, 6]], 1),
])
def test_rank_examples(m, r):
    assert rank(m) == r


@pytest.mark.parametrize("m, expected", [
    ([[2, 4], [1, 3]], [[1, 0], [0, 1]]),
    ([[0, 0]], [[0, 0]]),
    ([[1, 2], [2, 4]], [[1, 2], [0, 0]]),
])
def test_rref_examples(m, expected):
    assert rref(m) == RationalMatrix(expected)


def test_kernel_examples():
    assert kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    (v,) = kernel_basis([[1, 1]])
    assert v[0] == -v[1] != 0
    assert len(kernel_basis([[1, 2, 3]])) == 2


def test_empty_system_kernel_is_everything():
    assert len(kernel_basis(RationalMatrix([], cols=3))) == 3


def test_exact_fractions():
    m = RationalMatrix([[Fraction(1, 3), Fraction(1, 7)], [Fraction(2, 3), Fraction(2, 7)]])
    assert rank(m) == 1
    assert rref(m).entries[0] == [1, Fraction(3, 7)]


@settings(max_examples=200)
@given(small_matrices)
def test_rank_matches_minor_oracle(m):
    assert rank(m) == rank_by_minors(m)


@given(small_matrices)
def test_rank_transpose(m):
    assert rank(m) == rank(RationalMatrix(m).transpose())


@given(small_matrices)
def test_kernel_vectors_annihilate(m):
    M = RationalMatrix(m)
    basis = kernel_basis(M)
    assert len(basis) == M.cols - rank(M)
    for v in basis:
        assert all(x == 0 for x in M.apply(v))
    if basis:
        assert rank(basis) == len(basis)


@given(small_matrices)
def test_rref_properties(m):
    R = rref(m)
    assert rank(R) == rank(m)
    assert rref(R) == R
    # same row space: stacking adds nothing
    assert rank(RationalMatrix(m).entries + R.entries) == rank(m)
    pivots = [next(c for c, x in enumerate(row) if x != 0) for row in R.entries if any(row)]
    assert pivots == sorted(set(pivots))
