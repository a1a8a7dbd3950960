"""JSON documents, DIMACS export and the ``cubestar`` command line.

A subgraph document stores Q_n minus a list of deleted edges::

    {
      "schema_version": "1",
      "n": 3,
      "deleted_edges": [
        [1, 3],
        ...
      ],
      "metadata": {"source": "construct"}
    }

Pairs are ``[a, b]`` vertex masks with ``a < b``, sorted.  Output is
canonical, so equal graphs serialise to identical bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .construct import extremal_pair
from .forbidden import DoubleStarPattern, contains_double_star
from .hypercube import check_dim, edge_between, edge_from_id
from .repair import NotFreeError, normalize_min_degree
from .solver import (
    DEFAULT_BUDGET,
    DeletionCertificate,
    balanced_pattern_for,
    exhaustive_turan,
    min_edge_dominating,
    turan_formula,
    verify_certificate,
)
from .subgraph import CubeSubgraph

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_MALFORMED = 2


class DocumentError(ValueError):
    """A subgraph document violates the schema; ``where`` names the field."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass
class SubgraphDocument:
    n: int
    deleted_edges: list[tuple[int, int]]
    metadata: dict[str, str] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_subgraph(cls, g: CubeSubgraph, metadata: dict[str, str] | None = None) -> "SubgraphDocument":
        pairs = [edge_from_id(g.n, int(i)).endpoints for i in g.deleted_ids()]
        return cls(g.n, sorted(pairs), dict(metadata or {}))

    def to_subgraph(self) -> CubeSubgraph:
        return CubeSubgraph.from_deleted(self.n, [edge_between(self.n, a, b) for a, b in self.deleted_edges])

    def to_certificate(self) -> DeletionCertificate:
        ids = tuple(sorted(edge_between(self.n, a, b) for a, b in self.deleted_edges))
        return DeletionCertificate(
            self.n,
            ids,
            claimed_free=self.metadata.get("claimed_free", "true") == "true",
            claimed_optimal=self.metadata.get("claimed_optimal", "false") == "true",
        )

    def to_json(self) -> str:
        pairs = sorted((min(a, b), max(a, b)) for a, b in self.deleted_edges)
        meta = json.dumps({str(k): str(v) for k, v in self.metadata.items()}, sort_keys=True)
        lines = [
            "{",
            f'  "schema_version": {json.dumps(self.schema_version)},',
            f'  "n": {self.n},',
        ]
        if pairs:
            lines.append('  "deleted_edges": [')
            lines.append(",\n".join(f"    [{a}, {b}]" for a, b in pairs))
            lines.append("  ],")
        else:
            lines.append('  "deleted_edges": [],')
        lines.append(f'  "metadata": {meta}')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SubgraphDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"line {exc.lineno} column {exc.colno}", f"malformed JSON ({exc.msg})") from exc
        if not isinstance(raw, dict):
            raise DocumentError("document", "top level must be an object")
        for key in ("schema_version", "n", "deleted_edges"):
            if key not in raw:
                raise DocumentError(key, "missing required field")
        extra = set(raw) - {"schema_version", "n", "deleted_edges", "metadata"}
        if extra:
            raise DocumentError(sorted(extra)[0], "unknown field")
        if raw["schema_version"] != SCHEMA_VERSION:
            raise DocumentError("schema_version", f"unsupported version {raw['schema_version']!r}")
        n = raw["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise DocumentError("n", "must be an integer")
        try:
            check_dim(n)
        except ValueError as exc:
            raise DocumentError("n", str(exc)) from None
        meta = raw.get("metadata", {})
        if not isinstance(meta, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in meta.items()):
            raise DocumentError("metadata", "must map strings to strings")
        items = raw["deleted_edges"]
        if not isinstance(items, list):
            raise DocumentError("deleted_edges", "must be a list")
        pairs: list[tuple[int, int]] = []
        seen = set()
        for i, item in enumerate(items):
            where = f"deleted_edges[{i}]"
            if (
                not isinstance(item, list)
                or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            ):
                raise DocumentError(where, "must be a pair of integer vertex masks")
            a, b = item
            for x in (a, b):
                if not 0 <= x < (1 << n):
                    raise DocumentError(where, f"vertex {x} out of range for n={n}")
            if a >= b:
                raise DocumentError(where, "pair must be ordered with a < b")
            x = a ^ b
            if x & (x - 1):
                raise DocumentError(where, f"[{a}, {b}] is not a hypercube edge")
            if (a, b) in seen:
                raise DocumentError(where, f"duplicate edge [{a}, {b}]")
            seen.add((a, b))
            pairs.append((a, b))
        return cls(n, pairs, dict(meta), raw["schema_version"])


def write_subgraph(g: CubeSubgraph, path: str | Path | None = None, metadata: dict[str, str] | None = None) -> str:
    """Serialise ``g``; also writes the text to ``path`` if given."""
    text = SubgraphDocument.from_subgraph(g, metadata).to_json()
    if path is not None:
        Path(path).write_text(text)
    return text


def read_subgraph(source: str | Path) -> CubeSubgraph:
    """Parse a document from a path or from JSON text."""
    return load_document(source).to_subgraph()


def load_document(source: str | Path) -> SubgraphDocument:
    if isinstance(source, Path) or not str(source).lstrip().startswith("{"):
        source = Path(source).read_text()
    return SubgraphDocument.from_json(str(source))


def export_dimacs(g: CubeSubgraph) -> str:
    """DIMACS edge list; vertex ``v`` is numbered ``v + 1``."""
    ids = g.edge_ids()
    lines = [f"p edge {1 << g.n} {len(ids)}"]
    for i in ids:
        a, b = edge_from_id(g.n, int(i)).endpoints
        lines.append(f"e {a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


# -- command line -----------------------------------------------------------


def _cmd_formula(args) -> int:
    print(turan_formula(args.n))
    return EXIT_OK


def _cmd_construct(args) -> int:
    pair = extremal_pair(args.n)
    g = pair.g_prime if args.prime else pair.g
    meta = {
        "source": "construct",
        "graph": "g_prime" if args.prime else "g",
        "edges": str(g.edge_count),
        "claimed_free": "true",
        "claimed_optimal": "true",
    }
    text = write_subgraph(g, args.out, meta)
    if args.out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote Q_{args.n} subgraph with {g.edge_count} edges to {args.out}")
    return EXIT_OK


def _cmd_check(args) -> int:
    doc = load_document(args.input)
    g = doc.to_subgraph()
    if args.pattern:
        pattern = DoubleStarPattern.parse(args.pattern)
    else:
        pattern = balanced_pattern_for(g.n)
    print(f"n={g.n} edges={g.edge_count} min_degree={g.min_degree()} max_degree={g.max_degree()}")
    status = EXIT_OK
    if pattern is not None:
        w = contains_double_star(g, pattern)
        if w is None:
            print(f"free of S_{{{pattern.k},{pattern.l}}}")
        else:
            print(f"contains S_{{{pattern.k},{pattern.l}}}: centres {w.center_u}-{w.center_v}, "
                  f"leaves {list(w.leaves_u)} / {list(w.leaves_v)}")
            status = EXIT_REFUTED
    if doc.metadata.get("claimed_optimal") == "true":
        ok = verify_certificate(doc.to_certificate())
        print(f"optimality certificate: {'verified' if ok else 'REFUTED'}")
        if not ok:
            status = EXIT_REFUTED
    if args.repair:
        try:
            h, report = normalize_min_degree(g)
        except NotFreeError as exc:
            print(f"repair refused: {exc}")
            return EXIT_REFUTED
        for s in report.steps:
            extra = f" removed {s.removed}" if s.removed is not None else ""
            print(f"  {s.kind}: added {s.added}{extra}")
        print(f"repair: {len(report.steps)} steps, edge_delta={report.edge_delta}, "
              f"was_edge_maximal={report.was_edge_maximal}, min_degree={h.min_degree()}, edges={h.edge_count}")
    return status


def _cmd_solve(args) -> int:
    balanced = True
    if args.mode == "exhaustive":
        pattern = DoubleStarPattern.parse(args.pattern) if args.pattern else balanced_pattern_for(args.n)
        if pattern is None:
            raise ValueError("n=1 has no balanced pattern; pass --pattern")
        balanced = pattern == balanced_pattern_for(args.n)
        res = exhaustive_turan(args.n, pattern)
    else:
        pattern = balanced_pattern_for(args.n)
        res = min_edge_dominating(args.n, budget=args.budget, workers=args.workers)
    # certificates speak about the balanced pattern only
    ok = verify_certificate(res.deletions) if balanced else None
    verdict = {True: "verified", False: "REFUTED", None: "n/a"}[ok]
    print(f"n={res.n} pattern={pattern.k},{pattern.l} optimum_edges={res.optimum_edges} "
          f"deleted={len(res.deletions.deleted)} nodes={res.nodes_explored} "
          f"proof_complete={res.proof_complete} certificate={verdict}")
    if balanced:
        print(f"closed form ex(Q_{res.n}, S_{{{pattern.k},{pattern.l}}}) = {turan_formula(res.n)}")
    if args.cert:
        meta = {
            "source": f"solve-{args.mode}",
            "pattern": f"{pattern.k},{pattern.l}",
            "claimed_free": "true" if balanced else "false",
            "claimed_optimal": "true" if res.deletions.claimed_optimal else "false",
            "proof_complete": str(res.proof_complete).lower(),
            "nodes_explored": str(res.nodes_explored),
        }
        write_subgraph(res.witness, args.cert, meta)
    return EXIT_REFUTED if ok is False else EXIT_OK


def _cmd_export(args) -> int:
    g = read_subgraph(Path(args.input))
    sys.stdout.write(export_dimacs(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubestar", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form ex(Q_n, S_{n-1,n-1})")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("construct", help="write an extremal subgraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", action="store_true", help="emit the second graph of the pair")
    p.add_argument("--out", help="output path (stdout if omitted)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="check a subgraph document for double stars")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--pattern", help="k,l (default n-1,n-1)")
    p.add_argument("--repair", action="store_true", help="raise the minimum degree to n-1")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="exact search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "bnb"), default="bnb")
    p.add_argument("--pattern", help="k,l for exhaustive mode (default n-1,n-1)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cert", help="write the certificate document here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("export", help="export a subgraph document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=("dimacs",), default="dimacs")
    p.set_defaults(func=_cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
