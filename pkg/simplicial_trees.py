#!/usr/bin/env python

"""
simplicial_trees.py

Command-line front end for certifying and exploring pure simplicial complexes.

Every command reads a facet-list JSON document (`{"n": 2, "facets": [[1, 2, 3], ...]}`)
and writes one JSON document to stdout; `search` writes JSON lines. Logs go to
stderr.

Commands:
    check-tree FILE                     cross-certify tree-ness (exit 1 when not a tree)
    components FILE                     partition the facets into components
    find-path FILE --from S --to T      an (m,n)-path sequence, or null
    find-reduced-path FILE --from S --to T
                                        a reduced (m,n)-path sequence, or null
    find-cycle FILE --m M               an (m,n)-simplicial cycle sequence, or null
    count FILE                          face counts, count formulas and bounds
    ordering FILE [--complete]          an (n-1)-ordering, or null
    search --n N --max-facets F --max-vertices V --conjecture {c1,c2,new}
                                        counterexamples as JSON lines
    fixtures DIR                        write the built-in complexes to DIR

With `--check SEQ`, the find-* commands classify a given sequence document
(`{"m": 0, "items": [[1], [1, 2, 3], ...]}`) instead of searching: find-path and
find-reduced-path report walk, path and reduced-path status, find-cycle reports
circuit and simplicial-cycle status.

Simplices are given as "1,2,3" or as a JSON array "[1,2,3]". Input errors exit
with code 2 and a `{"error": {"type": ..., "message": ...}}` document.

Usage:
    $ python simplicial_trees.py fixtures out/
    $ python simplicial_trees.py check-tree out/strip_tree.json
    $ python simplicial_trees.py find-cycle --m 0 out/ring_with_pendants.json

Environment:
    Optional variables, read from .env or the environment:
    - LOG_LEVEL, MAX_VERTICES, MAX_DIMENSION, PERMUTATION_BUDGET
    - SEARCH_WORKERS, VERDICT_SINK, VERDICT_PATH, NEAR_MISS_PATH
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from catalog import write_fixtures
from certify.complete_ordering import certify_by_complete_ordering
from certify.lemmas import count_bounds
from certify.report import cross_certify
from complexes.core import (
    PureComplex,
    Simplex,
    alphas,
    dewdney_count_formula,
    tree_count_formula,
)
from complexes.cycles import find_cycle, validate_circuit, validate_cycle
from complexes.errors import ComplexError
from complexes.paths import (
    AltSequence,
    components,
    find_ordering,
    find_path,
    find_reduced_path,
    validate_path,
    validate_reduced_path,
    validate_walk,
)
from config import Config
from enumeration.conjectures import Conjecture
from enumeration.search import search_counterexamples
from enumeration.space import EnumSpace
from loaders.facet_list import FacetListLoader
from loaders.sequence import load_sequence, parse_simplex
from sinks.jsonl_sink import JsonLinesSink

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


def _emit(doc: Any) -> None:
    print(json.dumps(doc), flush=True)


def _count_report(K: PureComplex) -> Dict:
    """Face counts next to the tree count and the (n-1,n)-tree count for each k."""
    p = len(K.faces[0])
    counts = alphas(K)
    formulas = {}
    for k in range(1, K.n + 1):
        tree = tree_count_formula(p, K.n, k)
        dewdney = dewdney_count_formula(p, K.n - 1, K.n, k)
        formulas[str(k)] = {
            "alpha": counts[k],
            "tree_count": tree,
            "tree_count_matches": counts[k] == tree,
            "dewdney_count": str(dewdney),
            "dewdney_count_matches": dewdney == counts[k],
        }
    return {
        "n": K.n,
        "p": p,
        "alphas": counts,
        "formulas": formulas,
        "bounds": count_bounds(K).to_dict(),
    }


def _endpoints(args: argparse.Namespace) -> Tuple[Simplex, Simplex]:
    if args.source is None or args.target is None:
        raise ValueError(f"{args.command} needs --from and --to, or --check.")
    return parse_simplex(args.source), parse_simplex(args.target)


def _check_path(seq: AltSequence, K: PureComplex) -> Dict:
    """Classify a given sequence as walk, path and reduced path of K."""
    walk = validate_walk(seq, K)
    witness = validate_reduced_path(seq, K)
    return {
        "walk": walk,
        "path": walk and validate_path(seq, K),
        "reduced": witness.to_dict() if witness else None,
    }


def _check_cycle(seq: AltSequence, K: PureComplex) -> Dict:
    circuit = validate_circuit(seq, K)
    witness = validate_cycle(seq, K)
    return {"circuit": circuit, "cycle": witness.to_dict() if witness else None}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplicial_trees",
        description="Certify and explore pure simplicial complexes.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("check-tree", "components", "count"):
        commands.add_parser(name).add_argument("file", type=Path)

    for name in ("find-path", "find-reduced-path"):
        cmd = commands.add_parser(name)
        cmd.add_argument("file", type=Path)
        cmd.add_argument("--from", dest="source")
        cmd.add_argument("--to", dest="target")
        cmd.add_argument("--check", type=Path)

    cycle = commands.add_parser("find-cycle")
    cycle.add_argument("file", type=Path)
    cycle.add_argument("--m", type=int)
    cycle.add_argument("--check", type=Path)

    ordering = commands.add_parser("ordering")
    ordering.add_argument("file", type=Path)
    ordering.add_argument("--complete", action="store_true")

    search = commands.add_parser("search")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--max-facets", type=int, required=True)
    search.add_argument("--min-facets", type=int, default=1)
    search.add_argument("--max-vertices", type=int, required=True)
    search.add_argument(
        "--conjecture", required=True, choices=[c.value for c in Conjecture]
    )
    search.add_argument("--iso", action=argparse.BooleanOptionalAction, default=True)
    search.add_argument("--out", type=Path)
    search.add_argument("--near-miss", type=Path)
    search.add_argument("--workers", type=int)

    fixtures = commands.add_parser("fixtures")
    fixtures.add_argument("directory", type=Path)
    return parser


def _dispatch(args: argparse.Namespace, config: Config) -> int:
    if args.command == "fixtures":
        written = write_fixtures(args.directory)
        _emit({"written": [str(p) for p in written]})
        return EXIT_OK

    if args.command == "search":
        space = EnumSpace(
            n=args.n,
            max_facets=args.max_facets,
            max_vertices=args.max_vertices,
            up_to_iso=args.iso,
            min_facets=args.min_facets,
        )
        near_miss = args.near_miss or config.near_miss_path
        search_counterexamples(
            space,
            Conjecture(args.conjecture),
            workers=args.workers or config.search_workers,
            sink=JsonLinesSink(args.out) if args.out else config.sink,
            near_miss_sink=JsonLinesSink(near_miss) if near_miss else None,
            budget=config.permutation_budget,
        )
        return EXIT_OK

    K = FacetListLoader(config).load(args.file)
    match args.command:
        case "check-tree":
            report = cross_certify(K)
            _emit(report.to_dict())
            return EXIT_OK if report.is_tree else EXIT_NEGATIVE
        case "components":
            _emit({"components": [[list(f) for f in cls] for cls in components(K)]})
        case "find-path" | "find-reduced-path" if args.check:
            _emit(_check_path(load_sequence(args.check), K))
        case "find-path":
            seq = find_path(K, *_endpoints(args))
            _emit(seq.to_dict() if seq else None)
        case "find-reduced-path":
            seq = find_reduced_path(K, *_endpoints(args))
            _emit(seq.to_dict() if seq else None)
        case "find-cycle" if args.check:
            _emit(_check_cycle(load_sequence(args.check), K))
        case "find-cycle":
            if args.m is None:
                raise ValueError("find-cycle needs --m or --check.")
            witness = find_cycle(K, args.m)
            _emit(witness.to_dict() if witness else None)
        case "count":
            _emit(_count_report(K))
        case "ordering":
            found = certify_by_complete_ordering(K) if args.complete else find_ordering(K)
            _emit(found.to_dict() if found else None)
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv`, run one command and return its exit code.

    Args:
        argv (Optional[List[str]]): Arguments without the program name;
            defaults to `sys.argv[1:]`.

    Returns:
        int: 0 on success, 1 when `check-tree` finds no tree, 2 on input
            or configuration errors.
    """
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args, Config.load())
    except (ComplexError, ValueError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        _emit({"error": {"type": type(e).__name__, "message": str(e)}})
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    try:
        main()
    except Exception as e:
        logger.critical("Fatal error: %s", e, exc_info=True)
        sys.exit(1)
