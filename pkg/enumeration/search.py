"""Counterexample searches over enumerated complexes, fanned out over worker processes."""

import logging
from multiprocessing import Pool
from typing import List, Optional, Tuple

from tqdm import tqdm

from complexes.core import Simplex, build_complex
from enumeration.canonical import DEFAULT_PERMUTATION_BUDGET
from enumeration.conjectures import Conjecture, ConjectureVerdict, Status, test_conjecture
from enumeration.space import EnumSpace, enumerate_complexes
from sinks.verdict_sink import VerdictSink

logger = logging.getLogger(__name__)

WorkItem = Tuple[Conjecture, int, List[Tuple[Simplex, ...]]]

CHUNKS_PER_WORKER = 4


def _process_chunk(item: WorkItem) -> List[ConjectureVerdict]:
    which, budget, chunk = item
    return [test_conjecture(build_complex(facets), which, budget) for facets in chunk]


def split_work(
    facet_lists: List[Tuple[Simplex, ...]], workers: int
) -> List[List[Tuple[Simplex, ...]]]:
    """Consecutive chunks of near-equal size, `CHUNKS_PER_WORKER` per worker."""
    count = max(1, workers) * CHUNKS_PER_WORKER
    size = max(1, -(-len(facet_lists) // count))
    return [facet_lists[i : i + size] for i in range(0, len(facet_lists), size)]


def search_counterexamples(
    space: EnumSpace,
    which: Conjecture,
    workers: int = 1,
    sink: Optional[VerdictSink] = None,
    near_miss_sink: Optional[VerdictSink] = None,
    budget: int = DEFAULT_PERMUTATION_BUDGET,
) -> List[ConjectureVerdict]:
    """
    Test a conjecture on every complex of `space` and return the counterexamples.

    The enumerated complexes are split into even chunks and the chunks are
    tested by up to `workers` processes. Counterexamples go to `sink`. For the
    acyclic-top-count conjecture every complex whose premises hold goes to
    `near_miss_sink`, so the evidence behind an empty result stays auditable.

    Args:
        space (EnumSpace): The complexes to test.
        which (Conjecture): The conjecture.
        workers (int): Worker processes; 1 or less runs inline.
        sink (Optional[VerdictSink]): Collector for counterexamples.
        near_miss_sink (Optional[VerdictSink]): Collector for premise hits.
        budget (int): Labelling-step budget of `canonical_form`.

    Returns:
        List[ConjectureVerdict]: Counterexamples sorted by canonical form.

    Example:
        >>> found = search_counterexamples(EnumSpace(n=2, max_facets=3, max_vertices=9), Conjecture.NO_CIRCUITS_SOME_K)
        >>> ((1, 2, 3), (1, 4, 5), (2, 4, 6)) in [v.canonical for v in found]
        True
    """
    facet_lists = [K.facets for K in enumerate_complexes(space, budget)]
    work_items: List[WorkItem] = [(which, budget, c) for c in split_work(facet_lists, workers)]
    logger.info(
        "Testing %s over %d chunks with %d worker(s)",
        which.value,
        len(work_items),
        workers,
    )

    results: List[ConjectureVerdict] = []
    progress = tqdm(total=len(work_items), desc=f"Searching {which.value}", disable=None)
    if workers > 1 and len(work_items) > 1:
        with Pool(processes=min(workers, len(work_items))) as pool:
            for verdicts in pool.imap_unordered(_process_chunk, work_items):
                results.extend(verdicts)
                progress.update()
    else:
        for item in work_items:
            results.extend(_process_chunk(item))
            progress.update()
    progress.close()

    results.sort(key=lambda v: v.canonical)
    found = [v for v in results if v.status is Status.COUNTEREXAMPLE]

    if which is Conjecture.ACYCLIC_TOP_COUNT:
        near_misses = [v for v in results if v.premises_hold]
        if near_miss_sink is not None and near_misses:
            near_miss_sink.add_verdicts(near_misses)
        for verdict in found:
            logger.warning("Counterexample to %s: %s", which.value, list(verdict.canonical))
    if sink is not None:
        sink.add_verdicts(found)

    logger.info("%d complexes tested, %d counterexamples", len(results), len(found))
    return found
