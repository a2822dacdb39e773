"""Derivations read directly off the twin classes with at least three vertices.

A derivation vanishes outside the diagonal blocks of those classes and each
block is skew-symmetric with zero column sums. A block of size ``a`` therefore
contributes ``(a-1)(a-2)/2`` dimensions, spanned by the triangle generators
``T(1, j, k)``: ``+1`` at ``(1, j), (j, k), (k, 1)`` and ``-1`` at the
transposed positions, for ``2 <= j < k <= a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import DerivationBasis, algebra_from_graph, oracle_derivations
from .errors import ConnectivityError, InternalInconsistency, SizeTooSmall
from .graph import Gamma3, Graph, VertexPermutation, block_relabeling, gamma3, is_connected, twin_partition
from .linalg import RationalMatrix
from .properties import check_leibniz


@dataclass(frozen=True)
class BlockSpec:
    class_index: int
    offset: int
    size: int


@dataclass(frozen=True)
class ClosedFormBasis:
    n: int
    perm: VertexPermutation
    mats: tuple[RationalMatrix, ...]
    blocks: tuple[BlockSpec, ...] = ()

    def __len__(self) -> int:
        return len(self.mats)

    def __iter__(self):
        return iter(self.mats)

    def as_derivation_basis(self) -> DerivationBasis:
        return DerivationBasis(self.n, self.mats)


def triangle_generator(a: int, i: int, j: int, k: int) -> RationalMatrix:
    """Cyclic +-1 pattern on the 0-based index triple ``(i, j, k)`` in an a x a block."""
    rows = [[0] * a for _ in range(a)]
    for p, q in ((i, j), (j, k), (k, i)):
        rows[p][q] = 1
        rows[q][p] = -1
    return RationalMatrix.from_rows(rows)


def block_basis(a: int) -> list[RationalMatrix]:
    if a < 3:
        raise SizeTooSmall(f"twin block of size {a}; need at least 3")
    return [triangle_generator(a, 0, j, k)
            for j in range(1, a) for k in range(j + 1, a)]


def block_specs(g3: Gamma3) -> tuple[BlockSpec, ...]:
    return tuple(BlockSpec(ell, s, a)
                 for ell, (s, a) in enumerate(zip(g3.offsets, g3.sizes), 1))


def _embed(n: int, block: RationalMatrix, offset: int) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for p in range(block.rows):
        for q in range(block.cols):
            rows[offset + p][offset + q] = block[p, q]
    return rows


def _unrelabel(rows: list[list[Fraction]], perm: VertexPermutation) -> RationalMatrix:
    # D[i][j] in original labels equals D'[perm(i)][perm(j)] in block labels
    n = len(rows)
    return RationalMatrix.from_rows(
        [[rows[perm(i) - 1][perm(j) - 1] for j in range(1, n + 1)] for i in range(1, n + 1)])


def closed_form_derivations(g: Graph, *, validate: bool = True) -> ClosedFormBasis:
    """Derivation basis built from Gamma3(g), in the original vertex labels.

    Graphs with fewer than three vertices go to the oracle. Every emitted
    matrix is checked against the Leibniz identity unless ``validate`` is off;
    a failure raises :class:`InternalInconsistency`.
    """
    if not is_connected(g):
        raise ConnectivityError("graph is not connected")
    g3 = gamma3(twin_partition(g))
    perm = block_relabeling(g, g3)
    if g.n < 3:
        oracle = oracle_derivations(algebra_from_graph(g))
        return ClosedFormBasis(g.n, perm, oracle.mats)

    specs = block_specs(g3)
    mats = []
    for spec in specs:
        for block in block_basis(spec.size):
            mats.append(_unrelabel(_embed(g.n, block, spec.offset), perm))
    result = ClosedFormBasis(g.n, perm, tuple(mats), specs)

    if validate and mats:
        c = algebra_from_graph(g)
        for idx, D in enumerate(mats):
            report = check_leibniz(c, D)
            if not report.passed:
                raise InternalInconsistency(
                    f"closed-form matrix {idx} is not a derivation: {report.failures()[0]}")
    return result


def predicted_dimension(g3: Gamma3) -> int:
    return sum((a - 1) * (a - 2) // 2 for a in g3.sizes)


def closed_form_dimension(g: Graph) -> int:
    if not is_connected(g):
        raise ConnectivityError("graph is not connected")
    if g.n < 3:
        return len(oracle_derivations(algebra_from_graph(g)))
    return predicted_dimension(gamma3(twin_partition(g)))
