"""Weight-preserving rewrites of a (graph, cardinality) instance.

Every function here mutates the given :class:`State` in place and returns
it; the weighted total of the instance is unchanged. D0, D1 and D2 need
weighted totals of sub-instances, which they obtain through a ``count``
callable (the engine's recursive counter with empty partitions).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple

from .cardinality import State
from .graph import edge_key

Counter = Callable[[State], Fraction]


class DegenerateCut(ArithmeticError):
    """D2 would have to divide by zero for this separating pair."""


class PreconditionError(ValueError):
    pass


def _default_count(st: State) -> Fraction:
    from .engine import iscount

    return iscount(st)


def _bump(stats, key: str) -> None:
    if stats is not None:
        stats.bump(key)


def reduction(st: State, stats=None) -> State:
    """Remove isolated vertices (R1) and leaves (R2) while n > 2."""
    g = st.graph
    work = sorted((v for v in g if g.degree(v) < 2), reverse=True)
    while work and g.n > 2:
        v = work.pop()
        if v not in g or g.degree(v) >= 2:
            continue
        nbrs = g.neighbors(v)
        if not nbrs:
            st.scalar *= st.c0[v] + st.c1[v]
            st.delete_vertex(v)
            _bump(stats, "r1")
            continue
        (u,) = nbrs
        st.c0[u] *= st.c1[v] + st.c0[v] * st.ce[edge_key(u, v)]
        st.c1[u] *= st.c0[v]
        st.delete_vertex(v)
        _bump(stats, "r2")
        if g.degree(u) < 2:
            work.append(u)
    return st


def prop(st: State, v: int, eta: int) -> State:
    """Condition on ``v`` being outside (eta=0) or inside (eta=1) the set."""
    g = st.graph
    if v not in g:
        raise PreconditionError(f"vertex {v} not in graph")
    if eta == 0:
        c = st.c0[v]
        for u in g.neighbors(v):
            st.c0[u] *= st.ce[edge_key(u, v)]
        st.delete_vertex(v)
    elif eta == 1:
        nv = g.neighbors(v)
        c = st.c1[v]
        for u in nv:
            c *= st.c0[u]
        for u in nv:
            for w in g.neighbors(u):
                if w in nv and u < w:
                    c *= st.ce[(u, w)]
        closed = nv | {v}
        for u in nv:
            for w in g.neighbors(u):
                if w not in closed:
                    st.c0[w] *= st.ce[edge_key(u, w)]
        st.delete_vertices(sorted(closed))
    else:
        raise ValueError("eta must be 0 or 1")
    st.scalar *= c
    return st


def restricted_total(sub: State, fixed: Sequence[Tuple[int, int]], count: Counter) -> Fraction:
    """Weighted total of ``sub`` over sets honouring each ``(vertex, eta)``.

    Works on a copy. A vertex already removed by an earlier eta=1 step was
    forced out, so a later eta=1 request for it yields zero.
    """
    st = sub.copy()
    for w, eta in fixed:
        if w not in st.graph:
            if eta == 1:
                return Fraction(0)
            continue
        prop(st, w, eta)
    reduction(st)
    return count(st)


def d0(st: State, comp: Iterable[int], count: Optional[Counter] = None, stats=None) -> State:
    """Fold a whole connected component into the scalar."""
    count = count or _default_count
    comp = set(comp)
    g = st.graph
    if not comp or not comp <= set(g) or comp == set(g):
        raise PreconditionError("D0 needs a proper nonempty subset of the vertices")
    for x in comp:
        if not g.neighbors(x) <= comp:
            raise PreconditionError("D0 set is not a union of components")
    st.scalar *= count(st.substate(comp))
    st.delete_vertices(sorted(comp))
    _bump(stats, "d0")
    return st


def d1(st: State, v: int, side: Iterable[int], count: Optional[Counter] = None, stats=None) -> State:
    """Fold ``side - {v}`` (a union of components of G - v) into v's weights."""
    count = count or _default_count
    side = set(side)
    g = st.graph
    if v not in side or v not in g:
        raise PreconditionError("D1 side must contain the cut vertex")
    inner = side - {v}
    if not inner or not side <= set(g):
        raise PreconditionError("D1 side must contain vertices besides the cut vertex")
    for x in inner:
        if not g.neighbors(x) <= side:
            raise PreconditionError("D1 side is not closed in G - v")
    sub = st.substate(side)
    one = restricted_total(sub, [(v, 1)], count)
    zero = restricted_total(sub, [(v, 0)], count)
    st.c1[v] = one
    st.c0[v] = zero
    st.delete_vertices(sorted(inner))
    _bump(stats, "d1")
    return st


def d2(st: State, u: int, v: int, side: Iterable[int], count: Optional[Counter] = None, stats=None) -> State:
    """Replace ``side - {u, v}`` by at most one gadget vertex hanging on u and v.

    Raises :class:`DegenerateCut` (leaving ``st`` untouched) when a divisor
    vanishes.
    """
    count = count or _default_count
    side = set(side)
    g = st.graph
    if u == v or u not in side or v not in side or not side <= set(g):
        raise PreconditionError("D2 side must contain both cut vertices")
    inner = side - {u, v}
    if not inner:
        raise PreconditionError("D2 side must contain vertices besides the cut pair")
    for x in inner:
        if not g.neighbors(x) <= side:
            raise PreconditionError("D2 side is not closed in G - {u, v}")

    cu = (st.c0[u], st.c1[u])
    cv = (st.c0[v], st.c1[v])
    if 0 in cu or 0 in cv:
        raise DegenerateCut("zero weight on a cut vertex")
    sub = st.substate(side)
    r = [[restricted_total(sub, [(u, z), (v, e)], count) / (cu[z] * cv[e]) for e in (0, 1)] for z in (0, 1)]
    r00, r01, r10, r11 = r[0][0], r[0][1], r[1][0], r[1][1]

    if g.has_edge(u, v):
        st.c1[u] *= r10
        st.c1[v] *= r01
        st.set_edge_weight(u, v, r00)
        st.delete_vertices(sorted(inner))
    else:
        if r11 == 0:
            raise DegenerateCut("c(u1, v1) vanishes")
        if r00 * r11 == r01 * r10:
            st.c1[u] *= r11
            st.c0[u] *= r01
            st.c0[v] *= r10 / r11
            st.delete_vertices(sorted(inner))
        else:
            st.delete_vertices(sorted(inner))
            st.add_gadget(u, v, (r00 * r11 - r01 * r10) / r11, r11, r01 / r11, r10 / r11)
    _bump(stats, "d2")
    return st
