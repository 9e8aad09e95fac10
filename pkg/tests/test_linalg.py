"""Exact Gaussian elimination: golden cases plus rank-nullity properties."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from operad_forge import in_span, kernel_basis, rank, rref, solve

F = Fraction


def test_rref_known_matrix():
    rows, pivots = rref([[2, 4], [1, 2], [0, 1]])
    assert pivots == [0, 1]
    assert rows[0] == [F(1), F(0)]
    assert rows[1] == [F(0), F(1)]
    assert rows[2] == [F(0), F(0)]


def test_rank_counts_pivots():
    assert rank([[1, 2, 3], [2, 4, 6], [0, 0, 1]]) == 2
    assert rank([]) == 0
    assert rank([[0, 0]]) == 0


def test_kernel_of_known_matrix():
    # x + 2y + 3z = 0 has a 2-dimensional kernel
    ker = kernel_basis([[1, 2, 3]])
    assert len(ker) == 2
    for v in ker:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


def test_solve_consistent_and_inconsistent():
    x = solve([[1, 1], [1, -1]], [4, 0])
    assert x == [F(2), F(2)]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


def test_in_span():
    vecs = [[1, 0, 1], [0, 1, 1]]
    assert in_span(vecs, [1, 1, 2])
    assert not in_span(vecs, [0, 0, 1])
    assert in_span([], [0, 0])
    assert not in_span([], [1, 0])


matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda nc: st.lists(
        st.lists(st.integers(min_value=-4, max_value=4).map(F), min_size=nc, max_size=nc),
        min_size=1,
        max_size=4,
    )
)


@given(matrices)
def test_rank_nullity(rows):
    ncols = len(rows[0])
    assert rank(rows) + len(kernel_basis(rows)) == ncols


@given(matrices)
def test_kernel_vectors_annihilate(rows):
    for v in kernel_basis(rows):
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


@given(matrices)
def test_rref_is_idempotent(rows):
    m1, p1 = rref(rows)
    m2, p2 = rref(m1)
    assert m2 == m1 and p2 == p1


@given(matrices, st.data())
def test_solve_recovers_a_solution(rows, data):
    ncols = len(rows[0])
    x = data.draw(st.lists(st.integers(min_value=-3, max_value=3).map(F), min_size=ncols, max_size=ncols))
    rhs = [sum(a * b for a, b in zip(row, x)) for row in rows]
    got = solve(rows, rhs)
    assert got is not None
    assert [sum(a * b for a, b in zip(row, got)) for row in rows] == rhs
