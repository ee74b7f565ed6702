"""Cardinality functions: per-vertex and per-edge weights whose product
over an independent set's configuration gives that set's weight."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Optional, Set, Tuple

from .graph import Graph, edge_key

Edge = Tuple[int, int]


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class State:
    """A graph together with its cardinality function.

    ``scalar`` is a global factor multiplied into every set's weight;
    ``added`` is the set of gadget vertices created by the D2 reduction,
    the only vertices allowed a non-positive ``c1``.
    """

    __slots__ = ("graph", "c1", "c0", "ce", "scalar", "added")

    def __init__(
        self,
        graph: Graph,
        c1: Dict[int, Fraction],
        c0: Dict[int, Fraction],
        ce: Dict[Edge, Fraction],
        scalar: Fraction = Fraction(1),
        added: Optional[Set[int]] = None,
    ) -> None:
        self.graph = graph
        self.c1 = c1
        self.c0 = c0
        self.ce = ce
        self.scalar = Fraction(scalar)
        self.added = set(added or ())

    def copy(self) -> "State":
        return State(self.graph.copy(), dict(self.c1), dict(self.c0), dict(self.ce), self.scalar, self.added)

    def edge_weight(self, u: int, v: int) -> Fraction:
        return self.ce[edge_key(u, v)]

    def set_edge_weight(self, u: int, v: int, w) -> None:
        self.ce[edge_key(u, v)] = Fraction(w)

    def delete_vertex(self, v: int) -> None:
        for u in self.graph.neighbors(v):
            del self.ce[edge_key(u, v)]
        self.graph.remove_vertex(v)
        del self.c1[v]
        del self.c0[v]
        self.added.discard(v)

    def delete_vertices(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.delete_vertex(v)

    def add_gadget(self, u: int, v: int, c1, c0, cu, cv) -> int:
        """New vertex in A(G) adjacent to ``u`` and ``v``."""
        x = self.graph.add_vertex()
        self.graph.add_edge(u, x)
        self.graph.add_edge(v, x)
        self.c1[x] = Fraction(c1)
        self.c0[x] = Fraction(c0)
        self.set_edge_weight(u, x, cu)
        self.set_edge_weight(v, x, cv)
        self.added.add(x)
        return x

    def substate(self, keep: Iterable[int]) -> "State":
        """Induced sub-instance on ``keep`` with scalar 1."""
        keep = set(keep)
        g = self.graph.induced(keep)
        ce = {e: self.ce[e] for e in g.edges()}
        return State(
            g,
            {v: self.c1[v] for v in keep},
            {v: self.c0[v] for v in keep},
            ce,
            Fraction(1),
            self.added & keep,
        )

    def check_domains(self) -> None:
        g = self.graph
        verts = set(g)
        assert set(self.c1) == verts and set(self.c0) == verts, "vertex weight domain mismatch"
        assert set(self.ce) == set(g.edges()), "edge weight domain mismatch"
        assert self.added <= verts, "A(G) not contained in V(G)"
        assert self.scalar != 0, "zero scalar"

    def __repr__(self) -> str:
        return f"State({self.graph!r}, scalar={format_rational(self.scalar)}, added={sorted(self.added)})"


def trivial_cardinality(g: Graph, copy: bool = True) -> State:
    """All weights 1: the weighted total is then the number of independent sets."""
    one = Fraction(1)
    return State(
        g.copy() if copy else g,
        {v: one for v in g},
        {v: one for v in g},
        {e: one for e in g.edges()},
    )


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not (g.neighbors(v) & s) for v in s)


def weight_of_set(st: State, s: Iterable[int]) -> Fraction:
    """Weight of independent set ``s``, scalar included."""
    s = set(s)
    g = st.graph
    if not s <= set(g) or not is_independent(g, s):
        raise ValueError("not an independent set of the graph")
    w = st.scalar
    for v in g:
        w *= st.c1[v] if v in s else st.c0[v]
    for (a, b), c in st.ce.items():
        if a not in s and b not in s:
            w *= c
    return w


def is_proper(st: State) -> bool:
    g = st.graph
    if any(c <= 0 for c in st.c0.values()) or any(c <= 0 for c in st.ce.values()):
        return False
    for x in g:
        if x not in st.added and st.c1[x] <= 0:
            return False
        p = st.c0[x]
        for y in g.neighbors(x):
            p *= st.ce[edge_key(x, y)]
        if st.c1[x] + p <= 0:
            return False
    return True


def added_discipline(st: State) -> bool:
    """Every A(G) vertex has degree <= 2 and no two are adjacent."""
    g = st.graph
    return all(g.degree(x) <= 2 and not (g.neighbors(x) & st.added) for x in st.added)
