"""``evoder`` command line.

Exit status: 0 on success, 1 on bad input, 2 when the closed form and the
oracle disagree or a closed-form matrix fails validation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .algebra import StructureMatrix
from .corpus import cmd_verify
from .errors import InputError, InternalInconsistency
from .families import FAMILIES, ALIASES, FamilySpec, generate_family
from .report import cmd_derive, cmd_rank, cmd_twins

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load(path: str, raw: bool):
    text = _read(path)
    return StructureMatrix.from_csv(text) if raw else text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoder", description="Derivations of evolution algebras of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twins", help="twin partition and classes of size >= 3")
    p.add_argument("file", help="graph file (edge list or JSON); '-' for stdin")
    p.add_argument("--out", choices=("json", "table"), default="table")

    p = sub.add_parser("derive", help="basis of the derivation space")
    p.add_argument("file")
    p.add_argument("--method", choices=("both", "closed-form", "oracle"), default="both")
    p.add_argument("--out", choices=("json", "table"), default="table")
    p.add_argument("--raw", action="store_true",
                   help="input is a structure-matrix CSV (oracle method only)")

    p = sub.add_parser("rank", help="rank of the adjacency / structure matrix")
    p.add_argument("file")
    p.add_argument("--raw", action="store_true")
    p.add_argument("--out", choices=("json", "table"), default="table")

    p = sub.add_parser("family", help="generate a named graph")
    p.add_argument("family", choices=sorted(set(FAMILIES) | set(ALIASES)))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--emit", metavar="FILE", help="write the JSON graph here instead of stdout")

    p = sub.add_parser("verify", help="cross-check closed form and oracle on all small graphs")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--prune", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--out", choices=("json", "table"), default="table")
    return parser


def _run(args) -> int:
    if args.command == "twins":
        doc = cmd_twins(_read(args.file))
        print(doc.dumps() if args.out == "json" else doc.to_table())
        return EXIT_OK

    if args.command == "derive":
        method = "oracle" if args.raw and args.method == "both" else args.method
        doc = cmd_derive(_load(args.file, args.raw), method)
        print(doc.dumps() if args.out == "json" else doc.to_table())
        bad = any(not c["passed"] for r in doc.property_reports for c in r["checks"])
        return EXIT_INTERNAL if doc.agreement is False or bad else EXIT_OK

    if args.command == "rank":
        rep = cmd_rank(_load(args.file, args.raw))
        if args.out == "json":
            print(json.dumps(rep.to_json()))
        else:
            print(f"n {rep.n}  rank {rep.rank}  "
                  + ("non-singular: Der = 0" if rep.nonsingular else "singular"))
        return EXIT_OK

    if args.command == "family":
        g = generate_family(FamilySpec(args.family, tuple(args.params)))
        text = json.dumps(g.to_json())
        if args.emit:
            Path(args.emit).write_text(text + "\n")
        else:
            print(text)
        return EXIT_OK

    report = cmd_verify(args.nmax, prune=args.prune, parallel=args.parallel)
    if args.out == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"{'n':>2} {'graphs':>8} {'agree':>8} {'Der != 0':>9} {'non-sing':>9}")
        for n in sorted(report.counts):
            print(f"{n:>2} {report.counts[n]:>8} {report.agreements[n]:>8} "
                  f"{report.nonzero[n]:>9} {report.nonsingular[n]:>9}")
        for key, reason in report.failures[:20]:
            print(f"FAIL n={key[0]} edges={list(key[1])}: {reason}")
        print("all checks passed" if report.ok else f"{len(report.failures)} failures")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except InputError as exc:
        print(f"evoder: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        print(f"evoder: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
