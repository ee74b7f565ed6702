"""Degree-3 skeleton of a subcubic graph and the bisection bookkeeping
used to pick branching vertices in the sparse subcubic regime."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .graph import Graph, edge_key


class NotSubcubic(ValueError):
    pass


@dataclass
class Skeleton:
    """B(G): degree-3 vertices joined by chains of degree-2 vertices.

    ``tn[v]`` lists the topological neighbours of ``v``, one entry per
    chain (a chain returning to ``v`` contributes ``v`` once).
    ``edges`` counts chains per unordered pair, loops included as ``(v, v)``.
    """

    vertices: FrozenSet[int]
    tn: Dict[int, List[int]]
    edges: Counter = field(default_factory=Counter)

    def multiplicity(self, x: int, y: int) -> int:
        return self.edges.get(edge_key(x, y) if x != y else (x, x), 0)

    def self_adjacent(self, v: int) -> bool:
        return v in self.tn[v]


def _walk(g: Graph, start: int, first: int) -> Tuple[int, int]:
    """Follow the degree-2 chain leaving ``start`` through ``first``.

    Returns ``(end, last)`` where ``last`` is the vertex preceding ``end``;
    ``end`` has degree != 2 (or is ``start`` for a closed chain).
    """
    prev, cur = start, first
    while g.degree(cur) == 2 and cur != start:
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return cur, prev


def skeleton(g: Graph) -> Skeleton:
    if g.max_degree() > 3:
        raise NotSubcubic("skeleton needs maximum degree <= 3")
    verts = frozenset(v for v in g if g.degree(v) == 3)
    tn: Dict[int, List[int]] = {v: [] for v in verts}
    edges: Counter = Counter()
    for x in sorted(verts):
        for y in sorted(g.neighbors(x)):
            end, last = _walk(g, x, y)
            if end not in verts:
                continue
            if end == x:
                # each closed chain is seen from both of its ends; keep one
                if y < last:
                    tn[x].append(x)
                    edges[(x, x)] += 1
                continue
            tn[x].append(end)
            if x < end:
                edges[(x, end)] += 1
    return Skeleton(verts, tn, edges)


def topological_neighbors(g: Graph, v: int) -> List[int]:
    """Ends of the degree-2 chains leaving ``v`` (``v`` itself for a closed chain)."""
    out = []
    for y in sorted(g.neighbors(v)):
        end, last = _walk(g, v, y)
        if end == v:
            if y < last:
                out.append(v)
        else:
            out.append(end)
    return sorted(out)


@dataclass(frozen=True)
class Partition:
    v0: FrozenSet[int] = frozenset()
    v1: FrozenSet[int] = frozenset()

    @staticmethod
    def of(v0: Iterable[int], v1: Iterable[int]) -> "Partition":
        a, b = frozenset(v0), frozenset(v1)
        if a & b:
            raise ValueError("partition sides overlap")
        return Partition(a, b)

    @property
    def bp(self) -> int:
        return max(len(self.v0), len(self.v1))

    @property
    def empty_side(self) -> bool:
        return not self.v0 or not self.v1

    def side_of(self, v: int) -> int:
        if v in self.v0:
            return 0
        if v in self.v1:
            return 1
        return -1

    def sides(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        return self.v0, self.v1


EMPTY = Partition()


def width(p: Partition, b: Skeleton) -> int:
    """ec: chains of B(G) with one end in each side, counted with multiplicity."""
    return sum(
        k for (x, y), k in b.edges.items() if x != y and (x in p.v0 and y in p.v1 or x in p.v1 and y in p.v0)
    )


def restrict(p: Partition, b: Skeleton) -> Partition:
    return Partition(p.v0 & b.vertices, p.v1 & b.vertices)


def cross_count(p: Partition, b: Skeleton, v: int) -> int:
    other = p.v1 if v in p.v0 else p.v0
    return sum(1 for t in b.tn[v] if t in other)


def rebalance_heavy_vertices(p: Partition, b: Skeleton) -> Partition:
    """Move vertices whose chains mostly cross to the other side.

    A vertex moves when all three of its chains end across, or when it is
    self-adjacent and its one remaining chain ends across. Each move lowers
    the width, so this terminates.
    """
    v0, v1 = set(p.v0), set(p.v1)
    moved = True
    while moved:
        moved = False
        cur = Partition(frozenset(v0), frozenset(v1))
        for v in sorted(v0 | v1):
            if v not in b.vertices:
                continue
            cross = cross_count(cur, b, v)
            if cross == 3 or (cross == 1 and b.self_adjacent(v)):
                src, dst = (v0, v1) if v in v0 else (v1, v0)
                src.remove(v)
                dst.add(v)
                moved = True
                break
    return Partition(frozenset(v0), frozenset(v1))


# -- bisection ------------------------------------------------------------------


def _weights(b: Skeleton) -> Dict[int, Dict[int, int]]:
    w: Dict[int, Dict[int, int]] = {v: {} for v in b.vertices}
    for (x, y), k in b.edges.items():
        if x != y:
            w[x][y] = w[x].get(y, 0) + k
            w[y][x] = w[y].get(x, 0) + k
    return w


def _grow(order: List[int], w: Dict[int, Dict[int, int]], size: int, rng: random.Random) -> set:
    """Greedy region growth: repeatedly absorb the vertex most tied to the region."""
    region: set = set()
    gain = {v: 0 for v in order}
    while len(region) < size:
        frontier = [v for v in order if v not in region and gain[v] > 0]
        if frontier:
            best = max(gain[v] for v in frontier)
            pick = [v for v in frontier if gain[v] == best]
        else:
            pick = [v for v in order if v not in region]
        v = pick[rng.randrange(len(pick))]
        region.add(v)
        for y, k in w[v].items():
            gain[y] += k
    return region


def _refine(order: List[int], w: Dict[int, Dict[int, int]], small: set) -> set:
    """Steepest-descent pair swaps between the two sides."""
    while True:
        d = {}
        for v in order:
            ext = sum(k for y, k in w[v].items() if (y in small) != (v in small))
            d[v] = 2 * ext - sum(w[v].values())
        best, pair = 0, None
        for a in order:
            if a not in small:
                continue
            for c in order:
                if c in small:
                    continue
                g = d[a] + d[c] - 2 * w[a].get(c, 0)
                if g > best:
                    best, pair = g, (a, c)
        if pair is None:
            return small
        small.remove(pair[0])
        small.add(pair[1])


def bisect(b: Skeleton, seed: int = 0, restarts: int = 8) -> Partition:
    """Balanced split of B(G) with small width (heuristic).

    ``|v0| = floor(n/2)`` and ``|v1| = ceil(n/2)``. Deterministic for a fixed
    graph and seed; the best of ``restarts`` greedy seeds is kept.
    """
    order = sorted(b.vertices)
    n = len(order)
    w = _weights(b)
    best = None
    for s in range(restarts):
        rng = random.Random(seed * 1_000_003 + s)
        small = _refine(order, w, _grow(order, w, n // 2, rng))
        p = Partition(frozenset(small), frozenset(set(order) - small))
        key = (width(p, b), sorted(p.v0))
        if best is None or key < best[0]:
            best = (key, p)
    assert best is not None
    return best[1]
