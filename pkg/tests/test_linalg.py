from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from evoder.errors import DimensionMismatch, MalformedInput
from evoder.families import complete_multipartite, path_graph, wheel_graph
from evoder.linalg import (RationalMatrix, in_span, mat_mul, null_space, parse_rational, rank,
                           row_space_rref, rref)


def M(rows):
    return RationalMatrix.from_rows(rows)


def adjacency(g):
    return M(g.adjacency_rows())


def test_fraction_normalization():
    m = M([[Fraction(2, 4), Fraction(-3, -6)], [0, Fraction(6, -3)]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2
    assert m[1, 1].numerator == -2 and m[1, 1].denominator == 1
    assert m[1, 0].denominator == 1


@pytest.mark.parametrize("rows, expected, pivots", [
    ([[2, 4], [1, 2]], [[1, 2], [0, 0]], [0]),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 1, 2]),
    ([[1, 1], [1, -1]], [[1, 0], [0, 1]], [0, 1]),
])
def test_rref_examples(rows, expected, pivots):
    r, p = rref(M(rows))
    assert r == M(expected)
    assert p == pivots


def test_rank_of_family_adjacencies():
    assert rank(adjacency(path_graph(9))) == 8
    assert rank(adjacency(wheel_graph(9))) == 7
    assert rank(adjacency(complete_multipartite(3, 4, 5))) == 3


def test_null_space_examples():
    assert null_space(RationalMatrix.identity(2)) == []
    (v,) = null_space(M([[1, 1], [1, 1]]))
    assert list(v.entries) == [-1, 1]
    m = M([[1, 2, 3]])
    vs = null_space(m)
    assert len(vs) == 2
    for x in vs:
        assert mat_mul(m, x).is_zero()


def test_null_space_of_empty_matrices():
    vs = null_space(RationalMatrix(0, 3))
    assert [list(v.entries) for v in vs] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert null_space(RationalMatrix(2, 0)) == []
    assert rref(RationalMatrix(0, 0)) == (RationalMatrix(0, 0), [])


def test_mat_mul():
    m = M([[1, 2], [3, Fraction(1, 2)]])
    assert mat_mul(RationalMatrix.identity(2), m) == m
    assert mat_mul(M([[1, 1, 1]]), M([[1], [1], [1]])) == M([[3]])
    with pytest.raises(DimensionMismatch):
        mat_mul(M([[1, 2]]), M([[1, 2]]))


def test_permutation_conjugation_preserves_rank():
    D = adjacency(wheel_graph(9))
    P = M([[1 if j == (i * 4) % 9 else 0 for j in range(9)] for i in range(9)])
    assert rank(P @ D @ P.transpose()) == rank(D)


def test_rational_text_and_csv():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("", "1/0", "1.5", "x"):
        with pytest.raises(MalformedInput):
            parse_rational(bad)
    m = M([[Fraction(1, 3), -2], [0, Fraction(-5, 7)]])
    assert m.to_csv() == "1/3,-2\n0,-5/7\n"
    assert RationalMatrix.from_csv(m.to_csv()) == m
    with pytest.raises(MalformedInput):
        RationalMatrix.from_csv("1,2\n3\n")


def test_in_span():
    vs = [(1, 0, 1), (0, 1, 1)]
    assert in_span(vs, (2, 3, 5), 3)
    assert not in_span(vs, (0, 0, 1), 3)


small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    return RationalMatrix(r, c, draw(st.lists(small, min_size=r * c, max_size=r * c)))


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_kernel_vectors_are_annihilated_and_rank_nullity(m):
    ker = null_space(m)
    for x in ker:
        assert mat_mul(m, x).is_zero()
    assert rank(m) + len(ker) == m.cols


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_idempotent_and_matches_sympy(m):
    r, piv = rref(m)
    assert rref(r) == (r, piv)
    assert piv == sorted(set(piv))
    if m.rows and m.cols:
        ref, ref_piv = sympy.Matrix(m.rows, m.cols, list(m.entries)).rref()
        assert list(piv) == list(ref_piv)
        assert [sympy.Rational(x) for x in r.entries] == list(ref)


@given(matrices(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_rank_invariant_under_row_and_column_permutation(m, rnd):
    rows = list(range(m.rows))
    cols = list(range(m.cols))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    shuffled = RationalMatrix(m.rows, m.cols, (m[i, j] for i in rows for j in cols))
    assert rank(shuffled) == rank(m)


@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=5))
@settings(max_examples=100, deadline=None)
def test_row_space_canonical_form_ignores_order_and_scaling(vectors):
    a = row_space_rref(vectors, 4)
    b = row_space_rref([[2 * x for x in v] for v in reversed(vectors)], 4)
    assert a == b
