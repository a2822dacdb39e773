"""Exhaustive cross-validation over small connected graphs.

Every graph is solved twice, once through the derivation-system kernel and
once through the twin-class construction, and the two spans are compared
exactly. The necessary conditions in :mod:`evoder.properties` are run on
every oracle basis element.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .algebra import algebra_from_graph, build_derivation_system, kernel_basis
from .closed_form import closed_form_derivations, predicted_dimension
from .errors import InvalidFamilyParams
from .graph import Graph, gamma3, twin_partition
from .linalg import RationalMatrix, null_space, rank, row_space_rref
from .properties import check_all, check_zero_when_gamma3_empty

log = logging.getLogger(__name__)

MAX_N = 7


def _connected_mask(n: int, nbr: list[int]) -> bool:
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        grow = 0
        v = frontier
        while v:
            low = v & -v
            grow |= nbr[low.bit_length() - 1]
            v ^= low
        frontier = grow & ~seen
        seen |= grow
    return seen == full


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """All connected simple graphs on vertex set 1..n (labeled, not up to isomorphism)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
        if n == 1 or _connected_mask(n, nbr):
            yield Graph.from_edges(n, [(u + 1, v + 1) for bit, (u, v) in enumerate(pairs)
                                       if mask >> bit & 1])


def unlabeled_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class, from the networkx graph atlas (n <= 7)."""
    import networkx as nx

    if n > MAX_N:
        raise InvalidFamilyParams(f"graph atlas only covers n <= {MAX_N}")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield Graph.from_edges(n, [(u + 1, v + 1) for u, v in h.edges()])


def graph_key(g: Graph) -> tuple:
    return (g.n, tuple(g.edges))


def span_key(mats: Iterable[RationalMatrix], n: int) -> RationalMatrix:
    return row_space_rref([m.entries for m in mats], n * n)


@dataclass
class GraphResult:
    key: tuple
    gamma3_sizes: tuple[int, ...]
    oracle_dim: int
    closed_dim: int
    predicted_dim: int
    adjacency_rank: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def diagonal_only_derivations(system: RationalMatrix, n: int) -> int:
    """Dimension of the derivations with zero off-diagonal entries."""
    data, width = system.entries, system.cols
    sub = RationalMatrix(system.rows, n, (data[r * width + i * n + i]
                                          for r in range(system.rows) for i in range(n)))
    return len(null_space(sub))


def verify_graph(g: Graph) -> GraphResult:
    c = algebra_from_graph(g)
    part = twin_partition(g)
    g3 = gamma3(part)
    system = build_derivation_system(c)
    oracle = kernel_basis(system, g.n)
    closed = closed_form_derivations(g)
    res = GraphResult(graph_key(g), g3.sizes, len(oracle), len(closed),
                      predicted_dimension(g3), rank(c.c))
    fail = res.failures.append

    if span_key(oracle.mats, g.n) != span_key(closed.mats, g.n):
        fail("closed-form span differs from oracle kernel")
    if (not g3) != (len(oracle) == 0):
        fail("gamma3 emptiness does not match zero derivation space")
    if res.oracle_dim != res.predicted_dim:
        fail(f"oracle dimension {res.oracle_dim} != predicted {res.predicted_dim}")
    if res.adjacency_rank == g.n and len(oracle):
        fail("non-singular adjacency with nonzero derivations")
    if not check_zero_when_gamma3_empty(g, oracle).passed:
        fail("gamma3 empty but derivations exist")
    if diagonal_only_derivations(system, g.n):
        fail("nonzero diagonal-only derivation")

    big = [set(cls) for cls in g3.classes]
    for idx, D in enumerate(oracle.mats):
        report = check_all(g, D, c)
        for bad in report.failures():
            fail(f"oracle[{idx}] fails {bad.check}: {bad.witness}")
        for i in range(g.n):
            for j in range(g.n):
                if i != j and D[i, j] and not any({i + 1, j + 1} <= s for s in big):
                    fail(f"oracle[{idx}] entry ({i + 1},{j + 1}) outside every twin class of size >= 3")
    return res


def _verify_key(key: tuple) -> GraphResult:
    n, edges = key
    return verify_graph(Graph.from_edges(n, edges))


@dataclass
class VerifyReport:
    n_max: int
    pruned: bool
    counts: dict[int, int] = field(default_factory=dict)
    agreements: dict[int, int] = field(default_factory=dict)
    nonzero: dict[int, int] = field(default_factory=dict)
    nonsingular: dict[int, int] = field(default_factory=dict)
    failures: list[tuple[tuple, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "pruned": self.pruned,
            "graphs": {str(n): c for n, c in self.counts.items()},
            "agreements": {str(n): c for n, c in self.agreements.items()},
            "nonzero_derivation_spaces": {str(n): c for n, c in self.nonzero.items()},
            "nonsingular_adjacency": {str(n): c for n, c in self.nonsingular.items()},
            "failures": [{"n": k[0], "edges": [list(e) for e in k[1]], "reason": r}
                         for k, r in self.failures],
            "ok": self.ok,
        }


def verify_results(results: Iterable[GraphResult], report: VerifyReport) -> VerifyReport:
    for res in sorted(results, key=lambda r: r.key):
        n = res.key[0]
        report.counts[n] = report.counts.get(n, 0) + 1
        report.agreements[n] = report.agreements.get(n, 0) + (
            "closed-form span differs from oracle kernel" not in res.failures)
        report.nonzero[n] = report.nonzero.get(n, 0) + (res.oracle_dim > 0)
        report.nonsingular[n] = report.nonsingular.get(n, 0) + (res.adjacency_rank == n)
        report.failures.extend((res.key, f) for f in res.failures)
    return report


def cmd_verify(n_max: int, *, prune: bool = False, parallel: bool = False,
               n_min: int = 3) -> VerifyReport:
    """Cross-validate every connected graph with ``n_min <= n <= n_max`` vertices."""
    if not 3 <= n_max <= MAX_N:
        raise InvalidFamilyParams(f"n_max must lie in 3..{MAX_N}, got {n_max}")
    report = VerifyReport(n_max, prune)
    for n in range(n_min, n_max + 1):
        source = unlabeled_connected_graphs(n) if prune else labeled_connected_graphs(n)
        keys = [graph_key(g) for g in source]
        log.info("n=%d: %d graphs", n, len(keys))
        if parallel:
            from multiprocessing import Pool

            with Pool() as pool:
                results = pool.map(_verify_key, keys, chunksize=64)
        else:
            results = [_verify_key(k) for k in keys]
        verify_results(results, report)
    return report
