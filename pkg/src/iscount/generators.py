"""Seeded random instances and the small named graphs used in tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .cardinality import State, trivial_cardinality
from .graph import Graph


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    g = Graph(range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                g.add_edge(i, j)
    return g


def random_cubic(n: int, rng: random.Random, max_tries: int = 10_000) -> Graph:
    """Uniform-ish 3-regular simple graph via the pairing model with rejection."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even n >= 4")
    for _ in range(max_tries):
        points = [v for v in range(1, n + 1) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(range(1, n + 1), sorted(edges))
    raise RuntimeError("pairing model kept producing multigraphs")


def path(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    g = path(n)
    if n >= 3:
        g.add_edge(n, 1)
    return g


def complete(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    return Graph(range(1, 11), outer + inner + spokes)


def bowtie() -> Graph:
    return Graph(range(1, 6), [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])


def theta(a: int, b: int, c: int) -> Graph:
    """Two hubs joined by three internally disjoint paths with a, b, c inner vertices."""
    g = Graph([1, 2])
    for length in (a, b, c):
        prev = 1
        for _ in range(length):
            x = g.add_vertex()
            g.add_edge(prev, x)
            prev = x
        g.add_edge(prev, 2)
    return g


def cube() -> Graph:
    verts = list(range(8))
    edges = [(a, b) for a in verts for b in verts if a < b and bin(a ^ b).count("1") == 1]
    return Graph([v + 1 for v in verts], [(a + 1, b + 1) for a, b in edges])


_WEIGHTS = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3), Fraction(5)]


def random_state(g: Graph, rng: random.Random, gadgets: int = 0) -> State:
    """Random proper cardinality function with values in [1/3, 5].

    ``gadgets`` extra vertices are hung on random non-adjacent pairs as
    members of A(G) with negative ``c1``, chosen to keep the state proper.
    """
    st = trivial_cardinality(g)
    for v in st.graph:
        st.c1[v] = rng.choice(_WEIGHTS)
        st.c0[v] = rng.choice(_WEIGHTS)
    for e in st.ce:
        st.ce[e] = rng.choice(_WEIGHTS)
    st.scalar = rng.choice(_WEIGHTS)
    for _ in range(gadgets):
        _hang_gadget(st, rng)
    return st


def _hang_gadget(st: State, rng: random.Random) -> Optional[int]:
    g = st.graph
    plain = [v for v in g.vertices() if v not in st.added]
    pairs = [(u, v) for i, u in enumerate(plain) for v in plain[i + 1 :] if not g.has_edge(u, v)]
    if not pairs:
        return None
    u, v = rng.choice(pairs)
    c0 = rng.choice(_WEIGHTS)
    cu = rng.choice(_WEIGHTS)
    cv = rng.choice(_WEIGHTS)
    # c1 in (-c0*cu*cv, 0) keeps c1 + c0*cu*cv > 0
    c1 = -c0 * cu * cv * rng.choice([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    return st.add_gadget(u, v, c1, c0, cu, cv)
