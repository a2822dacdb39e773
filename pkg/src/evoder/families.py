"""Named graph families with fixed labelings.

=====================  ========================  ===================================
family                 params                    labeling
=====================  ========================  ===================================
path                   n >= 1                    1 - 2 - ... - n
cycle                  n >= 3                    path plus n - 1
star                   n >= 2 (vertex count)     center 1, leaves 2..n (K_{1,n-1})
wheel                  n >= 4                    rim cycle 1..n-1, center n
complete               n >= 1                    K_n
friendship             k >= 1 (triangles)        center 1, triangle t on 2t, 2t+1
complete_multipartite  a_1, ..., a_m (m >= 2)    parts in order, contiguous labels
=====================  ========================  ===================================

A friendship graph with ``k`` triangles has ``2k + 1`` vertices, so the
nine-vertex windmill is ``friendship 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidFamilyParams
from .graph import Graph

FAMILIES = ("path", "cycle", "star", "wheel", "complete", "friendship", "complete_multipartite")
ALIASES = {"multipartite": "complete_multipartite"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        name = ALIASES.get(self.family, self.family)
        if name not in FAMILIES:
            raise InvalidFamilyParams(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", name)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def _one(spec: FamilySpec, minimum: int) -> int:
    if len(spec.params) != 1:
        raise InvalidFamilyParams(f"{spec.family} takes exactly one parameter")
    n = spec.params[0]
    if n < minimum:
        raise InvalidFamilyParams(f"{spec.family} needs parameter >= {minimum}, got {n}")
    return n


def path_graph(n: int) -> Graph:
    return generate_family(FamilySpec("path", (n,)))


def cycle_graph(n: int) -> Graph:
    return generate_family(FamilySpec("cycle", (n,)))


def star_graph(n: int) -> Graph:
    return generate_family(FamilySpec("star", (n,)))


def wheel_graph(n: int) -> Graph:
    return generate_family(FamilySpec("wheel", (n,)))


def complete_graph(n: int) -> Graph:
    return generate_family(FamilySpec("complete", (n,)))


def friendship_graph(k: int) -> Graph:
    return generate_family(FamilySpec("friendship", (k,)))


def complete_multipartite(*parts: int) -> Graph:
    return generate_family(FamilySpec("complete_multipartite", parts))


def generate_family(spec: FamilySpec) -> Graph:
    f = spec.family
    if f == "path":
        n = _one(spec, 1)
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if f == "cycle":
        n = _one(spec, 3)
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])
    if f == "star":
        n = _one(spec, 2)
        return Graph.from_edges(n, [(1, v) for v in range(2, n + 1)])
    if f == "wheel":
        n = _one(spec, 4)
        rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
        return Graph.from_edges(n, rim + [(v, n) for v in range(1, n)])
    if f == "complete":
        n = _one(spec, 1)
        return Graph.from_edges(n, combinations(range(1, n + 1), 2))
    if f == "friendship":
        k = _one(spec, 1)
        edges = []
        for t in range(1, k + 1):
            a, b = 2 * t, 2 * t + 1
            edges += [(1, a), (1, b), (a, b)]
        return Graph.from_edges(2 * k + 1, edges)
    # complete_multipartite
    parts = spec.params
    if len(parts) < 2 or min(parts) < 1:
        raise InvalidFamilyParams("complete_multipartite needs at least two parts, each >= 1")
    blocks, start = [], 1
    for a in parts:
        blocks.append(range(start, start + a))
        start += a
    edges = [(u, v) for p, q in combinations(blocks, 2) for u in p for v in q]
    return Graph.from_edges(start - 1, edges)
