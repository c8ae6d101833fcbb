from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from exactef.arith import (GramSingular, RMatrix, format_rational, gram_solve, mat_mul,
                           nullspace, parse_rational, rank, solve_square)
from oracles import gauss_rank, gauss_solve

A = RMatrix.from_rows([[4, 0, 0, 0], [5, 0, 0, 0], [3, 0, 0, 0]])

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_mat_mul_identity():
    M = RMatrix.from_rows([[1, 2], ["1/2", -3], [0, 7]])
    assert mat_mul(RMatrix.identity(3), M) == M


def test_mat_mul_map_A_on_point_of_U():
    col = RMatrix.from_rows([[2], [0], [0], [0]])
    assert mat_mul(A, col).column(0) == (8, 10, 6)


def test_mat_mul_scalars():
    assert mat_mul(RMatrix.from_rows([["1/2"]]), RMatrix.from_rows([["2/3"]])).data == ((F(1, 3),),)


def test_mat_mul_shape_mismatch():
    with pytest.raises(ValueError):
        mat_mul(A, A)


@pytest.mark.parametrize("M, rhs, expected", [
    ([[1, 0], [0, 1]], (5, 7), (5, 7)),
    ([[2, 0], [0, 4]], (1, 1), (F(1, 2), F(1, 4))),
    ([[1, 1], [2, 2]], (1, 1), None),
])
def test_solve_square(M, rhs, expected):
    assert solve_square(RMatrix.from_rows(M), tuple(map(F, rhs))) == expected


def test_gram_solve_identity():
    M = RMatrix.from_rows([[1, 2], [3, 4], [5, "6/7"]])
    assert gram_solve(RMatrix.identity(3), M) == M


def test_gram_solve_example_coupling():
    C = RMatrix.from_rows([[-4], [-5], [-3]])
    out = gram_solve(RMatrix.identity(3), C)
    assert out.column(0) == (-4, -5, -3)
    assert (-out).column(0) == (4, 5, 3)


def test_gram_solve_singular():
    with pytest.raises(GramSingular):
        gram_solve(RMatrix.from_rows([[1, 2], [2, 4], [3, 6]]), RMatrix.from_rows([[1], [1], [1]]))


@pytest.mark.parametrize("rows, expected", [
    ([[0, 0], [0, 0]], 0),
    ([[1 if i == j else 0 for j in range(4)] for i in range(4)], 4),
    ([[4, 5, 3]], 1),
])
def test_rank_examples(rows, expected):
    assert rank(RMatrix.from_rows(rows)) == expected


@pytest.mark.parametrize("text, value", [
    ("-5", F(-5)), ("22/3", F(22, 3)), ("22.5", F(45, 2)), (7, F(7)), ("+3/6", F(1, 2)), (".5", F(1, 2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "2/-3", "1e5", "abc", 1.5, True, "", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational_canonical():
    assert format_rational(F(45, 2)) == "45/2"
    assert format_rational(F(-6, 3)) == "-2"


@given(rationals, rationals.filter(lambda s: s != 0))
def test_exact_field_operations(r, s):
    assert (r + s) - s == r
    assert (r * s) / s == r


matrices = st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(rationals, min_size=n, max_size=n), min_size=1, max_size=4))


@given(matrices)
def test_rank_matches_textbook_elimination(rows):
    assert rank(rows) == gauss_rank(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(rationals, min_size=n, max_size=n))))
def test_solve_square_iff_full_rank(data):
    rows, rhs = data
    M = RMatrix.from_rows(rows)
    x = solve_square(M, rhs)
    assert (x is not None) == (rank(M) == M.nrows)
    if x is not None:
        assert M.apply(x) == tuple(rhs)
        assert x == gauss_solve(rows, rhs)


@given(st.integers(1, 3).flatmap(lambda p: st.lists(
    st.lists(rationals, min_size=p, max_size=p), min_size=p, max_size=5)))
def test_gram_solve_of_itself_is_identity(rows):
    B = RMatrix.from_rows(rows)
    if rank(B) < B.ncols:
        with pytest.raises(GramSingular):
            gram_solve(B, B)
    else:
        assert gram_solve(B, B) == RMatrix.identity(B.ncols)


def test_nullspace_is_annihilated():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace([tuple(map(F, r)) for r in rows], 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_rref_keeps_inconsistent_rows():
    from exactef.arith import rref
    red, piv = rref([(1, 0), (1, 1)], 1)
    assert piv == [0]
    assert red == [[1, 0], [0, 1]]
