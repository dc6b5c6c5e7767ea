"""Built-in reference complexes and the properties each one must have."""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from complexes.core import PureComplex, alphas, build_complex, dewdney_count_formula
from complexes.cycles import find_circuit, find_cycle, is_acyclic
from complexes.paths import components, is_connected

logger = logging.getLogger(__name__)

CATALOG: Dict[str, List[List[int]]] = {
    # Two triangles on an edge, a lone triangle, and a ring of three triangles.
    "three_components": [[1, 2, 3], [2, 3, 4], [4, 5, 6], [7, 8, 9], [8, 9, 10], [7, 8, 10]],
    # Four triangles closing a ring around vertex 1, with four pendant triangles.
    "ring_with_pendants": [
        [1, 2, 3],
        [2, 3, 4],
        [3, 4, 5],
        [1, 4, 5],
        [1, 2, 6],
        [1, 3, 7],
        [1, 4, 9],
        [1, 5, 8],
    ],
    "strip_tree": [[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6]],
    "fan_tree": [[1, 2, 3], [2, 3, 4], [2, 4, 5]],
    "vertex_linked_triangles": [[1, 2, 3], [3, 4, 5], [1, 5, 6]],
    "linked_strips": [[1, 2, 3], [2, 3, 4], [4, 5, 6], [1, 5, 6]],
}


def catalog_complex(name: str) -> PureComplex:
    """
    Build a complex from the catalog by name.

    Raises:
        KeyError: If the name is not in the catalog.
    """
    return build_complex(CATALOG[name])


Check = Tuple[str, Callable[[PureComplex], bool]]

PROPERTIES: Dict[str, List[Check]] = {
    "three_components": [
        ("face counts 10/14/6", lambda K: alphas(K) == [10, 14, 6]),
        ("three components", lambda K: len(components(K)) == 3),
        ("has a (1,2)-cycle", lambda K: find_cycle(K, 1) is not None),
    ],
    "ring_with_pendants": [
        ("face counts 9/17/8", lambda K: alphas(K) == [9, 17, 8]),
        ("connected", is_connected),
        ("has a (0,2)-cycle", lambda K: find_cycle(K, 0) is not None),
        ("no (1,2)-cycle", lambda K: find_cycle(K, 1) is None),
    ],
    "strip_tree": [
        ("face counts 6/9/4", lambda K: alphas(K) == [6, 9, 4]),
        ("connected", is_connected),
        ("acyclic", is_acyclic),
    ],
    "fan_tree": [
        ("face counts 5/7/3", lambda K: alphas(K) == [5, 7, 3]),
        ("connected", is_connected),
        ("acyclic", is_acyclic),
    ],
    "vertex_linked_triangles": [
        ("six vertices and nine edges", lambda K: alphas(K)[:2] == [6, 9]),
        ("no (1,2)-circuit", lambda K: find_circuit(K, 1) is None),
        (
            "edge count matches the (1,2)-tree count",
            lambda K: dewdney_count_formula(alphas(K)[0], 1, 2, 1) == alphas(K)[1],
        ),
        ("disconnected", lambda K: not is_connected(K)),
    ],
    "linked_strips": [
        ("face counts 6/10/4", lambda K: alphas(K) == [6, 10, 4]),
        ("acyclic", is_acyclic),
        ("disconnected", lambda K: not is_connected(K)),
    ],
}


def verify_fixture(name: str) -> List[str]:
    """
    Check a catalog complex against its stated properties.

    Returns:
        List[str]: Descriptions of the properties that fail; empty when all hold.
    """
    K = catalog_complex(name)
    failed = [label for label, check in PROPERTIES[name] if not check(K)]
    for label in failed:
        logger.error("Fixture %s fails property: %s", name, label)
    return failed


def write_fixtures(directory: Path) -> List[Path]:
    """
    Write every verified catalog complex as `<name>.json` facet lists.

    Raises:
        ValueError: If a catalog complex fails its properties.
    """
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in CATALOG:
        failed = verify_fixture(name)
        if failed:
            raise ValueError(f"Fixture {name} fails: {', '.join(failed)}")
        path = directory / f"{name}.json"
        path.write_text(json.dumps(catalog_complex(name).to_dict()) + "\n", encoding="utf-8")
        logger.info("Wrote %s", path)
        written.append(path)
    return written
