"""Executable necessary conditions for derivations of graph evolution algebras.

Each ``check_*`` function returns a :class:`PropertyReport`: one
:class:`Check` per named condition, carrying the first violating index
tuple as its witness. Indices in witnesses are 1-based vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .algebra import (DerivationBasis, StructureMatrix, algebra_from_graph, apply_linear,
                      basis_vector, evolution_product)
from .errors import DimensionMismatch, InvalidClass
from .graph import Graph, gamma3, neighbors, twin_partition
from .linalg import RationalMatrix


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


@dataclass(frozen=True)
class Check:
    check: str
    passed: bool
    witness: dict | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed check {self.check!r} needs a witness")

    def to_json(self) -> dict:
        return {"check": self.check, "passed": self.passed,
                "witness": None if self.witness is None else _jsonable(self.witness)}

    @classmethod
    def from_json(cls, doc: dict) -> Check:
        return cls(doc["check"], doc["passed"], doc.get("witness"))


@dataclass(frozen=True)
class PropertyReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __add__(self, other: PropertyReport) -> PropertyReport:
        return PropertyReport(self.checks + other.checks)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    @classmethod
    def from_json(cls, doc: list[dict]) -> PropertyReport:
        return cls(tuple(Check.from_json(d) for d in doc))


class _Collector:
    """Records the first witness per check id, preserving declaration order."""

    def __init__(self, *ids: str):
        self.ids = ids
        self.witness: dict[str, dict] = {}

    def fail(self, check_id: str, **witness) -> None:
        self.witness.setdefault(check_id, witness)

    def report(self) -> PropertyReport:
        return PropertyReport(tuple(
            Check(i, i not in self.witness, self.witness.get(i)) for i in self.ids))


def _square(D: RationalMatrix, n: int) -> None:
    if D.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got {D.rows}x{D.cols}")


def check_leibniz(c: StructureMatrix, D: RationalMatrix) -> PropertyReport:
    """``d(e_i e_j) == d(e_i) e_j + e_i d(e_j)`` for all basis pairs, via the product."""
    n = c.n
    _square(D, n)
    col = _Collector("leibniz")
    e = [basis_vector(n, i) for i in range(1, n + 1)]
    images = [apply_linear(D, v) for v in e]
    for i in range(n):
        for j in range(i, n):
            lhs = apply_linear(D, evolution_product(c, e[i], e[j]))
            a = evolution_product(c, images[i], e[j])
            b = evolution_product(c, e[i], images[j])
            for k in range(n):
                if lhs[k] != a[k] + b[k]:
                    col.fail("leibniz", i=i + 1, j=j + 1, k=k + 1, lhs=lhs[k], rhs=a[k] + b[k])
                    break
            if "leibniz" in col.witness:
                break
        if "leibniz" in col.witness:
            break
    return col.report()


def check_prop31(g: Graph, D: RationalMatrix) -> PropertyReport:
    """The four pairwise conditions on a derivation of A(g) imposed by neighbourhoods."""
    n = g.n
    _square(D, n)
    d = lambda i, j: D[i - 1, j - 1]
    N = [None] + [neighbors(g, i) for i in range(1, n + 1)]
    col = _Collector("prop31.i", "prop31.ii", "prop31.iii", "prop31.iv")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            shared = N[i] & N[j]
            if shared and d(i, j) != -d(j, i):
                col.fail("prop31.i", i=i, j=j, k=min(shared), d_ij=d(i, j), d_ji=d(j, i))
            only_i = N[i] - N[j]
            if only_i and d(j, i) != 0:
                col.fail("prop31.ii", i=i, j=j, k=min(only_i), d_ji=d(j, i))
            if not shared and (d(i, j) != 0 or d(j, i) != 0):
                col.fail("prop31.iii", i=i, j=j, d_ij=d(i, j), d_ji=d(j, i))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            total = sum((d(k, j) for k in N[i]), Fraction(0))
            expected = 2 * d(i, i) if j in N[i] else Fraction(0)
            if total != expected:
                col.fail("prop31.iv", i=i, j=j, lhs=total, rhs=expected)
    return col.report()


def check_cor32(g: Graph, D: RationalMatrix) -> PropertyReport:
    """Diagonal averaging over neighbours, and equal diagonal entries on twins.

    Vertices of degree zero (only the one-vertex graph, when connected) are skipped.
    """
    n = g.n
    _square(D, n)
    col = _Collector("cor32.i", "cor32.ii")
    for i in range(1, n + 1):
        N = neighbors(g, i)
        if not N:
            continue
        rhs = sum((D[k - 1, k - 1] for k in N), Fraction(0)) / (2 * len(N))
        if D[i - 1, i - 1] != rhs:
            col.fail("cor32.i", i=i, d_ii=D[i - 1, i - 1], rhs=rhs)
    for cls in twin_partition(g).classes:
        first = cls[0]
        for j in cls[1:]:
            if D[first - 1, first - 1] != D[j - 1, j - 1]:
                col.fail("cor32.ii", i=first, j=j, d_ii=D[first - 1, first - 1], d_jj=D[j - 1, j - 1])
    return col.report()


def check_lemma36(g: Graph, twin_class: Iterable[int], D: RationalMatrix) -> PropertyReport:
    """Support, zero diagonal and skew-symmetry forced by one twin class."""
    n = g.n
    _square(D, n)
    T = tuple(sorted(twin_class))
    if T not in twin_partition(g).classes:
        raise InvalidClass(f"{list(T)} is not a twin class")
    d = lambda i, j: D[i - 1, j - 1]
    col = _Collector("lemma36.i", "lemma36.ii", "lemma36.iii", "lemma36.iv")
    outside = [k for k in range(1, n + 1) if k not in T]
    for i in T:
        for k in outside:
            if d(i, k) != 0 or d(k, i) != 0:
                col.fail("lemma36.i", i=i, k=k, d_ik=d(i, k), d_ki=d(k, i))
        if d(i, i) != 0:
            col.fail("lemma36.ii", i=i, d_ii=d(i, i))
    around = sorted(set().union(*(neighbors(g, i) for i in T)))
    for ell in around:
        if d(ell, ell) != 0:
            col.fail("lemma36.iii", l=ell, d_ll=d(ell, ell))
    for i in T:
        for j in T:
            if i != j and d(i, j) != -d(j, i):
                col.fail("lemma36.iv", i=i, j=j, d_ij=d(i, j), d_ji=d(j, i))
    return col.report()


def check_zero_when_gamma3_empty(g: Graph, basis: DerivationBasis) -> PropertyReport:
    col = _Collector("gamma3_empty_implies_zero")
    if not gamma3(twin_partition(g)) and len(basis):
        col.fail("gamma3_empty_implies_zero", dimension=len(basis))
    return col.report()


def check_all(g: Graph, D: RationalMatrix, c: StructureMatrix | None = None) -> PropertyReport:
    """Every check in this module, the twin-class one run once per class."""
    if c is None:
        c = algebra_from_graph(g)
    report = check_leibniz(c, D) + check_prop31(g, D)
    if g.n > 1:
        report = report + check_cor32(g, D)
    for cls in twin_partition(g).classes:
        report = report + check_lemma36(g, cls, D)
    return report
