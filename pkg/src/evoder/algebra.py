"""Evolution algebras and their derivations computed as an exact kernel.

A linear map ``d`` is stored as an ``n x n`` matrix ``D`` whose row ``i``
holds the coordinates of ``d(e_i)``. Unknowns of the derivation system are
the entries of ``D`` in row-major order: ``d_11, d_12, ..., d_nn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConnectivityError, DimensionMismatch
from .graph import Graph, is_connected
from .linalg import RationalMatrix, null_space


@dataclass(frozen=True)
class StructureMatrix:
    c: RationalMatrix

    def __post_init__(self):
        if self.c.rows != self.c.cols or self.c.rows < 1:
            raise DimensionMismatch(f"structure matrix must be square and nonempty, got {self.c.shape}")

    @property
    def n(self) -> int:
        return self.c.rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> StructureMatrix:
        return cls(RationalMatrix.from_rows(rows))

    @classmethod
    def from_csv(cls, text: str) -> StructureMatrix:
        return cls(RationalMatrix.from_csv(text))


@dataclass(frozen=True)
class DerivationBasis:
    n: int
    mats: tuple[RationalMatrix, ...]

    def __len__(self) -> int:
        return len(self.mats)

    def __iter__(self):
        return iter(self.mats)

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [m.entries for m in self.mats]


def algebra_from_graph(g: Graph) -> StructureMatrix:
    if not is_connected(g):
        raise ConnectivityError("graph is not connected")
    return StructureMatrix(RationalMatrix.from_rows(g.adjacency_rows()))


def basis_vector(n: int, i: int) -> tuple[Fraction, ...]:
    """Coordinates of ``e_i`` (1-based)."""
    return tuple(Fraction(1 if k == i - 1 else 0) for k in range(n))


def evolution_product(c: StructureMatrix, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    """``u * v``; only the diagonal products ``e_i e_i`` survive."""
    n = c.n
    if len(u) != n or len(v) != n:
        raise DimensionMismatch(f"element lengths {len(u)}, {len(v)} for dimension {n}")
    out = [Fraction(0)] * n
    for i in range(n):
        w = u[i] * v[i]
        if not w:
            continue
        row = c.c.row(i)
        for k in range(n):
            if row[k]:
                out[k] += w * row[k]
    return tuple(out)


def apply_linear(D: RationalMatrix, x: Sequence) -> tuple[Fraction, ...]:
    """``d(x)`` where ``d(e_i) = sum_k D[i][k] e_k``; i.e. the row vector ``x D``."""
    n = D.rows
    if len(x) != n:
        raise DimensionMismatch(f"element of length {len(x)} for a {D.shape} map")
    out = [Fraction(0)] * D.cols
    for i in range(n):
        if not x[i]:
            continue
        row = D.row(i)
        for k in range(D.cols):
            if row[k]:
                out[k] += x[i] * row[k]
    return tuple(out)


def build_derivation_system(c: StructureMatrix) -> RationalMatrix:
    """Homogeneous linear system whose kernel is Der(A), one row per condition.

    First block: ``c_jk d_ij + c_ik d_ji = 0`` for each ``i != j`` and each ``k``.
    Second block: ``sum_k c_ik d_kj - 2 c_ij d_ii = 0`` for each ``i, j``.
    Redundant and zero rows are kept.
    """
    n = c.n
    C = [c.c.row(i) for i in range(n)]
    nn = n * n
    zero = Fraction(0)
    blank = [zero] * nn
    entries: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(n):
                if not (C[j][k] or C[i][k]):
                    entries.extend(blank)
                    continue
                row = blank.copy()
                row[i * n + j] = C[j][k]
                row[j * n + i] = C[i][k]
                entries.extend(row)
    for i in range(n):
        for j in range(n):
            row = blank.copy()
            for k in range(n):
                if C[i][k]:
                    row[k * n + j] = C[i][k]
            if C[i][j]:
                row[i * n + i] -= 2 * C[i][j]
            entries.extend(row)
    return RationalMatrix(n * n * (n - 1) + nn, nn, entries)


def oracle_derivations(c: StructureMatrix) -> DerivationBasis:
    """Basis of Der(A) read off the kernel of the derivation system."""
    return kernel_basis(build_derivation_system(c), c.n)


def kernel_basis(system: RationalMatrix, n: int) -> DerivationBasis:
    """Reshape the canonical null space of an assembled system into n x n matrices."""
    return DerivationBasis(n, tuple(v.reshape(n, n) for v in null_space(system)))


def derivation_dimension(c: StructureMatrix) -> int:
    return len(oracle_derivations(c))


def permute_structure(c: StructureMatrix, perm: Sequence[int]) -> StructureMatrix:
    """Structure matrix after renaming basis vector ``i`` to ``perm[i-1]`` (1-based)."""
    n = c.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            rows[perm[i] - 1][perm[k] - 1] = c.c[i, k]
    return StructureMatrix.from_rows(rows)
