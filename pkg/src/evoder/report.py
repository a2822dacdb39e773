"""Result documents and the command implementations behind the CLI.

Rationals are serialised as ``"p/q"`` strings so documents round-trip
exactly through JSON.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Union

from .algebra import DerivationBasis, StructureMatrix, algebra_from_graph, oracle_derivations
from .closed_form import closed_form_derivations
from .errors import ConnectivityError, MalformedInput
from .graph import Graph, gamma3, is_connected, parse_graph, twin_partition
from .linalg import RationalMatrix, format_rational, parse_rational, rank, row_space_rref
from .properties import check_all, check_leibniz, check_zero_when_gamma3_empty

METHODS = ("closed_form", "oracle", "both")

Source = Union[Graph, StructureMatrix, str]


def normalize_method(method: str) -> str:
    m = method.replace("-", "_")
    if m not in METHODS:
        raise MalformedInput(f"unknown method {method!r}; choose from closed-form, oracle, both")
    return m


def _as_input(source: Source) -> Graph | StructureMatrix:
    if isinstance(source, (Graph, StructureMatrix)):
        return source
    return parse_graph(source)


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows: list[list[str]]) -> RationalMatrix:
    return RationalMatrix.from_rows([[parse_rational(x) for x in r] for r in rows])


def same_span(a, b, n: int) -> bool:
    return row_space_rref([m.entries for m in a], n * n) == row_space_rref([m.entries for m in b], n * n)


@dataclass
class ResultDocument:
    graph: dict | None = None
    twin_partition: list[list[int]] | None = None
    gamma3: dict | None = None
    adjacency_rank: int | None = None
    dimension: int | None = None
    basis: list[list[list[str]]] = field(default_factory=list)
    method: str | None = None
    agreement: bool | None = None
    property_reports: list[dict] = field(default_factory=list)
    permutation: list[int] | None = None

    def to_json(self) -> dict:
        doc = asdict(self)
        return {k: v for k, v in doc.items() if v is not None}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, doc: dict) -> ResultDocument:
        known = set(cls.__dataclass_fields__)
        return cls(**{k: v for k, v in doc.items() if k in known})

    @classmethod
    def loads(cls, text: str) -> ResultDocument:
        return cls.from_json(json.loads(text))

    def basis_matrices(self) -> list[RationalMatrix]:
        return [matrix_from_json(m) for m in self.basis]

    def to_table(self) -> str:
        lines = []
        if self.graph is not None:
            lines.append(f"vertices        {self.graph['n']}")
            lines.append(f"edges           {len(self.graph['edges'])}")
        if self.twin_partition is not None:
            lines.append("twin classes    " + " ".join(
                "{" + ",".join(map(str, c)) + "}" for c in self.twin_partition))
        if self.gamma3 is not None:
            g3 = self.gamma3["classes"]
            lines.append("gamma3          " + (" ".join(
                "{" + ",".join(map(str, c)) + "}" for c in g3) if g3 else "(empty)"))
        if self.adjacency_rank is not None:
            lines.append(f"rank            {self.adjacency_rank}")
        if self.method is not None:
            lines.append(f"method          {self.method}")
        if self.dimension is not None:
            lines.append(f"dim Der         {self.dimension}")
        if self.agreement is not None:
            lines.append(f"agreement       {'yes' if self.agreement else 'NO'}")
        if self.property_reports:
            bad = [c for r in self.property_reports for c in r["checks"] if not c["passed"]]
            lines.append(f"property checks {'all passed' if not bad else f'{len(bad)} FAILED'}")
        for idx, m in enumerate(self.basis):
            lines.append(f"basis[{idx}]")
            width = max(len(x) for row in m for x in row)
            lines.extend("  " + " ".join(x.rjust(width) for x in row) for row in m)
        return "\n".join(lines)


def _partition_fields(g: Graph, doc: ResultDocument) -> None:
    part = twin_partition(g)
    g3 = gamma3(part)
    doc.graph = g.to_json()
    doc.twin_partition = [list(c) for c in part.classes]
    doc.gamma3 = {"classes": [list(c) for c in g3.classes],
                  "sizes": list(g3.sizes), "offsets": list(g3.offsets)}


def cmd_twins(source: Source) -> ResultDocument:
    g = _as_input(source)
    if not isinstance(g, Graph):
        raise MalformedInput("twins needs a graph, not a structure matrix")
    doc = ResultDocument()
    _partition_fields(g, doc)
    return doc


def cmd_derive(source: Source, method: str = "both") -> ResultDocument:
    """Derivation space of A(G), or of a raw structure matrix (oracle only)."""
    method = normalize_method(method)
    item = _as_input(source)
    doc = ResultDocument(method=method)

    if isinstance(item, StructureMatrix):
        if method != "oracle":
            raise MalformedInput("a raw structure matrix supports only the oracle method")
        c = item
        doc.adjacency_rank = rank(c.c)
        basis = oracle_derivations(c).mats
        doc.property_reports = [{"target": f"basis[{i}]", "checks": check_leibniz(c, D).to_json()}
                                for i, D in enumerate(basis)]
    else:
        g = item
        if not is_connected(g):
            raise ConnectivityError("graph is not connected")
        _partition_fields(g, doc)
        c = algebra_from_graph(g)
        doc.adjacency_rank = rank(c.c)
        oracle = closed = None
        if method in ("oracle", "both"):
            oracle = oracle_derivations(c).mats
        if method in ("closed_form", "both"):
            cf = closed_form_derivations(g)
            closed = cf.mats
            doc.permutation = list(cf.perm.perm)
        basis = closed if closed is not None else oracle
        if method == "both":
            doc.agreement = same_span(oracle, closed, g.n)
        reports = [{"target": f"basis[{i}]", "checks": check_all(g, D, c).to_json()}
                   for i, D in enumerate(basis)]
        if g.n >= 3:
            found = DerivationBasis(g.n, tuple(oracle if oracle is not None else closed))
            reports.append({"target": "basis",
                            "checks": check_zero_when_gamma3_empty(g, found).to_json()})
        doc.property_reports = reports

    doc.dimension = len(basis)
    doc.basis = [matrix_to_json(D) for D in basis]
    return doc


@dataclass(frozen=True)
class RankReport:
    n: int
    rank: int

    @property
    def nonsingular(self) -> bool:
        return self.rank == self.n

    @property
    def zero_shortcut(self) -> bool:
        """A non-singular structure matrix forces the zero derivation space."""
        return self.nonsingular

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank, "nonsingular": self.nonsingular,
                "zero_derivations_by_rank": self.zero_shortcut}


def cmd_rank(source: Source) -> RankReport:
    item = _as_input(source)
    if isinstance(item, Graph):
        m = RationalMatrix.from_rows(item.adjacency_rows())
    else:
        m = item.c
    return RankReport(m.rows, rank(m))
