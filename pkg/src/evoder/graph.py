"""Finite simple graphs, twin classes and the block relabeling.

Vertices are labeled ``1..n`` in every public function and value; the
adjacency rows are stored 0-based.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import LabelOutOfRange, LoopEdge, MalformedInput


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[bool, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInput("a graph needs at least one vertex")
        if len(self.adj) != self.n or any(len(r) != self.n for r in self.adj):
            raise MalformedInput("adjacency must be n x n")
        for i in range(self.n):
            if self.adj[i][i]:
                raise LoopEdge(f"loop at vertex {i + 1}")
            for j in range(i):
                if self.adj[i][j] != self.adj[j][i]:
                    raise MalformedInput("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise MalformedInput(f"vertex count must be a positive integer, got {n!r}")
        rows = [[False] * n for _ in range(n)]
        for e in edges:
            if len(e) != 2:
                raise MalformedInput(f"edge must have two endpoints: {e!r}")
            u, v = e
            for w in (u, v):
                if not isinstance(w, int) or isinstance(w, bool):
                    raise MalformedInput(f"vertex label must be an integer: {w!r}")
                if not 1 <= w <= n:
                    raise LabelOutOfRange(f"vertex {w} outside 1..{n}")
            if u == v:
                raise LoopEdge(f"loop edge {u}-{v}")
            rows[u - 1][v - 1] = rows[v - 1][u - 1] = True
        return cls(n, tuple(tuple(r) for r in rows))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n)
                for j in range(i + 1, self.n) if self.adj[i][j]]

    def degree(self, i: int) -> int:
        return len(neighbors(self, i))

    def adjacency_rows(self) -> list[list[int]]:
        return [[int(x) for x in r] for r in self.adj]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def parse_graph(text: str) -> Graph:
    """Parse an edge list (``n`` then ``u v`` lines) or ``{"n", "edges"}`` JSON.

    Duplicate edges collapse; loops and out-of-range labels are rejected.
    """
    s = text.lstrip()
    if s.startswith("{"):
        try:
            doc = json.loads(s)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
            raise MalformedInput('JSON graph needs keys "n" and "edges"')
        edges = doc["edges"]
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise MalformedInput('"edges" must be a list of [u, v] pairs')
        return Graph.from_edges(doc["n"], edges)

    lines = [ln.split("#", 1)[0].strip() for ln in s.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedInput("empty graph document")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise MalformedInput(f"expected 'u v', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(f"non-integer token: {exc}") from exc
    return Graph.from_edges(n, edges)


def _check_vertex(g: Graph, i: int) -> None:
    if not 1 <= i <= g.n:
        raise LabelOutOfRange(f"vertex {i} outside 1..{g.n}")


def neighbors(g: Graph, i: int) -> frozenset[int]:
    _check_vertex(g, i)
    row = g.adj[i - 1]
    return frozenset(k + 1 for k in range(g.n) if row[k])


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, a in enumerate(g.adj[u]):
            if a and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, i: int) -> tuple[int, ...]:
        for c in self.classes:
            if i in c:
                return c
        raise LabelOutOfRange(f"vertex {i} not in partition")


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices with identical neighbour sets.

    Classes are sorted internally and ordered by smallest member.
    """
    groups: dict[tuple[bool, ...], list[int]] = {}
    for i in range(g.n):
        groups.setdefault(g.adj[i], []).append(i + 1)
    return TwinPartition(tuple(sorted(tuple(c) for c in groups.values())))


@dataclass(frozen=True)
class Gamma3:
    classes: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, s = [], 0
        for a in self.sizes:
            out.append(s)
            s += a
        return tuple(out)

    def __len__(self) -> int:
        return len(self.classes)

    def __bool__(self) -> bool:
        return bool(self.classes)


def gamma3(p: TwinPartition) -> Gamma3:
    return Gamma3(tuple(c for c in p.classes if len(c) >= 3))


@dataclass(frozen=True)
class VertexPermutation:
    """``perm[old - 1] == new``, both 1-based."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise MalformedInput(f"not a permutation: {self.perm}")

    def __call__(self, old: int) -> int:
        return self.perm[old - 1]

    def inverse(self) -> VertexPermutation:
        inv = [0] * len(self.perm)
        for old, new in enumerate(self.perm, 1):
            inv[new - 1] = old
        return VertexPermutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(new == old for old, new in enumerate(self.perm, 1))

    def as_dict(self) -> dict[int, int]:
        return {old: new for old, new in enumerate(self.perm, 1)}


def block_relabeling(g: Graph, g3: Gamma3) -> VertexPermutation:
    """Send each Gamma3 class onto a contiguous block, in class order.

    Vertices outside every Gamma3 class follow the blocks in ascending order.
    """
    order = [v for c in g3.classes for v in sorted(c)]
    inside = set(order)
    order += [v for v in range(1, g.n + 1) if v not in inside]
    perm = [0] * g.n
    for new, old in enumerate(order, 1):
        perm[old - 1] = new
    return VertexPermutation(tuple(perm))


def relabel(g: Graph, perm: VertexPermutation) -> Graph:
    """The graph with vertex ``v`` renamed ``perm(v)``."""
    return Graph.from_edges(g.n, [(perm(u), perm(v)) for u, v in g.edges])
