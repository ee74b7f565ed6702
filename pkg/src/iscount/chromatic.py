"""Chromatic number by inclusion-exclusion over vertex subsets.

For every ``W`` the number of independent sets of ``G[W]`` is computed
with the branch-and-reduce counter; ``s_k = sum_W (-1)^(n-|W|) i(W)^k``
counts k-tuples of independent sets covering ``V``, so the chromatic
number is the least ``k`` with ``s_k > 0``. Subsets are streamed, and all
``s_k`` for ``k = 1..n`` are accumulated in the same pass.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

from .engine import EngineConfig, count_independent_sets
from .graph import Graph

MAX_N = 18
BRUTE_MAX_N = 12


class ChromaticLimitExceeded(ValueError):
    pass


@dataclass
class ChromaticResult:
    chi: int
    per_k_sums: List[int] = field(default_factory=list)
    subsets_evaluated: int = 0


def count_is_induced(g: Graph, w: Iterable[int], config: Optional[EngineConfig] = None) -> int:
    w = set(w)
    if not w:
        return 1
    if not w <= set(g):
        raise ValueError("subset contains vertices outside the graph")
    return count_independent_sets(g.induced(w), config)


def _power_sums(g: Graph, order: Sequence[int], masks: Iterable[int], config: Optional[EngineConfig]):
    n = len(order)
    sums = [0] * (n + 1)
    seen = 0
    for mask in masks:
        w = [order[i] for i in range(n) if mask >> i & 1]
        c = count_is_induced(g, w, config)
        sign = -1 if (n - len(w)) % 2 else 1
        p = 1
        for k in range(1, n + 1):
            p *= c
            sums[k] += sign * p
        seen += 1
    return sums, seen


def _chunk_job(args):
    g, order, lo, hi, config = args
    return _power_sums(g, order, range(lo, hi), config)


def chromatic_number(
    g: Graph, max_n: int = MAX_N, config: Optional[EngineConfig] = None, workers: int = 1
) -> ChromaticResult:
    n = g.n
    if n > max_n:
        raise ChromaticLimitExceeded(f"graph has {n} vertices; inclusion-exclusion is capped at {max_n}")
    if n == 0:
        return ChromaticResult(0, [], 1)
    order = g.vertices()
    total = 1 << n
    if workers > 1:
        step = -(-total // (workers * 4))
        jobs = [(g, order, lo, min(lo + step, total), config) for lo in range(0, total, step)]
        sums = [0] * (n + 1)
        seen = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, cnt in pool.map(_chunk_job, jobs):
                sums = [a + b for a, b in zip(sums, part)]
                seen += cnt
    else:
        sums, seen = _power_sums(g, order, range(total), config)
    for k in range(1, n + 1):
        if sums[k] > 0:
            return ChromaticResult(k, sums[1 : k + 1], seen)
    raise AssertionError("n colours always suffice")


def chromatic_bruteforce(g: Graph, max_n: int = BRUTE_MAX_N) -> int:
    """Least k admitting a proper colouring, by backtracking assignment."""
    if g.n > max_n:
        raise ChromaticLimitExceeded(f"graph has {g.n} vertices; brute-force colouring is capped at {max_n}")
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    if not order:
        return 0
    colour = {}

    def place(i: int, k: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {colour[u] for u in g.neighbors(v) if u in colour}
        # first use of a new colour is symmetric; try only the lowest unused one
        limit = min(k, max(colour.values(), default=-1) + 2)
        for c in range(limit):
            if c in used:
                continue
            colour[v] = c
            if place(i + 1, k):
                return True
            del colour[v]
        return False

    k = 1
    while not place(0, k):
        k += 1
    return k
