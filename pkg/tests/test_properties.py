import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from evoder.algebra import (DerivationBasis, algebra_from_graph, apply_linear, basis_vector,
                            evolution_product, oracle_derivations)
from evoder.closed_form import closed_form_derivations
from evoder.errors import DimensionMismatch, InvalidClass
from evoder.families import complete_graph, complete_multipartite, path_graph, wheel_graph
from evoder.graph import gamma3, twin_partition
from evoder.linalg import RationalMatrix, in_span
from evoder.properties import (Check, PropertyReport, check_all, check_cor32, check_lemma36,
                               check_leibniz, check_prop31, check_zero_when_gamma3_empty)

from strategies import blowup_graphs

K33 = complete_multipartite(3, 3)


def k33_pattern(alpha, beta):
    a, b = alpha, beta
    return RationalMatrix.from_rows([
        [0, a, -a, 0, 0, 0],
        [-a, 0, a, 0, 0, 0],
        [a, -a, 0, 0, 0, 0],
        [0, 0, 0, 0, b, -b],
        [0, 0, 0, -b, 0, b],
        [0, 0, 0, b, -b, 0],
    ])


def test_leibniz_examples():
    c = algebra_from_graph(K33)
    assert check_leibniz(c, RationalMatrix.zeros(6, 6)).passed
    assert check_leibniz(c, k33_pattern(1, 0)).passed
    assert check_leibniz(c, k33_pattern(Fraction(2, 3), -5)).passed


def test_leibniz_failure_witness_is_genuine():
    c = algebra_from_graph(path_graph(3))
    D = RationalMatrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    report = check_leibniz(c, D)
    assert not report.passed
    (bad,) = report.failures()
    w = bad.witness
    ei, ej = basis_vector(3, w["i"]), basis_vector(3, w["j"])
    lhs = apply_linear(D, evolution_product(c, ei, ej))
    rhs = [x + y for x, y in zip(evolution_product(c, apply_linear(D, ei), ej),
                                 evolution_product(c, ei, apply_linear(D, ej)))]
    assert lhs[w["k"] - 1] != rhs[w["k"] - 1]
    assert (w["lhs"], w["rhs"]) == (lhs[w["k"] - 1], rhs[w["k"] - 1])


def test_leibniz_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        check_leibniz(algebra_from_graph(K33), RationalMatrix.zeros(5, 5))


def test_neighbourhood_conditions():
    for D in oracle_derivations(algebra_from_graph(K33)):
        assert check_prop31(K33, D).passed
    p4 = path_graph(4)
    assert check_prop31(p4, RationalMatrix.zeros(4, 4)).passed
    report = check_prop31(p4, RationalMatrix(4, 4, [1] * 16))
    ii = next(c for c in report.checks if c.check == "prop31.ii")
    assert not ii.passed
    # vertex 2 is in N(1) but not in N(2), which forces d_21 = 0
    assert ii.witness == {"i": 1, "j": 2, "k": 2, "d_ji": 1}


def test_diagonal_and_twin_conditions():
    assert check_cor32(K33, RationalMatrix.zeros(6, 6)).passed
    for D in closed_form_derivations(K33):
        assert check_cor32(K33, D).passed
    report = check_cor32(complete_graph(3), RationalMatrix.identity(3))
    (bad,) = [c for c in report.checks if c.check == "cor32.i"]
    assert not bad.passed
    assert bad.witness["d_ii"] == 1 and bad.witness["rhs"] == Fraction(1, 2)


def test_twin_diagonal_condition():
    star = complete_multipartite(1, 3)
    D = RationalMatrix.from_rows([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    failed = {c.check for c in check_cor32(star, D).failures()}
    assert "cor32.ii" in failed


def test_twin_class_block_conditions():
    (D, _) = closed_form_derivations(K33).mats
    assert check_lemma36(K33, {1, 2, 3}, D).passed
    assert check_lemma36(K33, [4, 5, 6], RationalMatrix.zeros(6, 6)).passed
    bad = RationalMatrix(6, 6, (1 if (i, j) == (0, 3) else 0 for i in range(6) for j in range(6)))
    report = check_lemma36(K33, (1, 2, 3), bad)
    failed = {c.check: c.witness for c in report.failures()}
    assert failed["lemma36.i"]["i"] == 1 and failed["lemma36.i"]["k"] == 4
    with pytest.raises(InvalidClass):
        check_lemma36(K33, {1, 2}, D)


def test_zero_when_gamma3_empty():
    p9 = path_graph(9)
    assert check_zero_when_gamma3_empty(p9, oracle_derivations(algebra_from_graph(p9))).passed
    w5 = wheel_graph(5)
    assert check_zero_when_gamma3_empty(w5, oracle_derivations(algebra_from_graph(w5))).passed
    assert check_zero_when_gamma3_empty(K33, oracle_derivations(algebra_from_graph(K33))).passed
    fake = DerivationBasis(9, (RationalMatrix.identity(9),))
    report = check_zero_when_gamma3_empty(p9, fake)
    assert not report.passed and report.failures()[0].witness == {"dimension": 1}


def test_failed_check_requires_witness():
    with pytest.raises(ValueError):
        Check("x", False)


def test_report_json_roundtrip():
    report = check_all(path_graph(4), RationalMatrix(4, 4, [Fraction(1, 3)] * 16))
    doc = json.loads(json.dumps(report.to_json()))
    assert all(set(d) == {"check", "passed", "witness"} for d in doc)
    assert any(not d["passed"] for d in doc)
    back = PropertyReport.from_json(doc)
    assert [c.check for c in back.checks] == [c.check for c in report.checks]
    assert back.passed == report.passed


@given(blowup_graphs(), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_leibniz_accepts_exactly_the_oracle_span(g, rnd):
    c = algebra_from_graph(g)
    basis = oracle_derivations(c)
    n = g.n
    combo = RationalMatrix.zeros(n, n)
    for D in basis:
        combo = combo + D.scale(rnd.randint(-3, 3))
    assert check_leibniz(c, combo).passed

    # nudge one entry of the combination
    i, j = rnd.randrange(n), rnd.randrange(n)
    delta = RationalMatrix(n, n, (1 if (p, q) == (i, j) else 0 for p in range(n) for q in range(n)))
    cand = combo + delta
    assert check_leibniz(c, cand).passed == in_span(basis.vectors(), cand.entries, n * n)


@given(blowup_graphs())
@settings(max_examples=80, deadline=None)
def test_oracle_elements_pass_every_predicate(g):
    c = algebra_from_graph(g)
    for D in oracle_derivations(c):
        assert check_all(g, D, c).passed


@given(blowup_graphs())
@settings(max_examples=80, deadline=None)
def test_nonzero_offdiagonal_entries_lie_in_large_twin_classes(g):
    part = twin_partition(g)
    big = [set(cls) for cls in gamma3(part).classes]
    for D in oracle_derivations(algebra_from_graph(g)):
        for i in range(g.n):
            for j in range(g.n):
                if i != j and D[i, j]:
                    assert part.class_of(i + 1) == part.class_of(j + 1)
                    assert any({i + 1, j + 1} <= s for s in big)


@given(blowup_graphs(), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
@settings(max_examples=80, deadline=None)
def test_diagonal_derivations_vanish(g, diag):
    D = RationalMatrix(g.n, g.n, (diag[i] if i == j else 0 for i in range(g.n) for j in range(g.n)))
    if check_leibniz(algebra_from_graph(g), D).passed:
        assert D.is_zero()


def test_diagonal_derivations_vanish_for_random_diagonals_on_families():
    rnd = random.Random(3)
    for g in (K33, complete_multipartite(1, 4), path_graph(5), wheel_graph(6)):
        for _ in range(20):
            D = RationalMatrix(g.n, g.n, (rnd.randint(-2, 2) if i == j else 0
                                          for i in range(g.n) for j in range(g.n)))
            assert check_leibniz(algebra_from_graph(g), D).passed == D.is_zero()
