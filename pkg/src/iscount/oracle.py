"""Brute-force references. Deliberately naive: every independent set is
visited once, so these are only usable for small graphs."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .cardinality import State, weight_of_set
from .graph import Graph

MAX_N = 25


class OracleLimitExceeded(ValueError):
    pass


def _check(n: int, max_n: int) -> None:
    if max_n > 30:
        raise ValueError("oracle cap may not exceed 30")
    if n > max_n:
        raise OracleLimitExceeded(f"graph has {n} vertices; brute force is capped at {max_n}")


def independent_sets(g: Graph) -> Iterator[List[int]]:
    """Every independent set, by include/exclude over vertices in id order,
    abandoning a prefix as soon as it contains an edge."""
    order = g.vertices()
    chosen: List[int] = []

    def rec(i: int) -> Iterator[List[int]]:
        if i == len(order):
            yield list(chosen)
            return
        yield from rec(i + 1)
        v = order[i]
        if not any(u in g.neighbors(v) for u in chosen):
            chosen.append(v)
            yield from rec(i + 1)
            chosen.pop()

    return rec(0)


def count_is_bruteforce(g: Graph, max_n: int = MAX_N) -> int:
    _check(g.n, max_n)
    return sum(1 for _ in independent_sets(g))


def weighted_total_bruteforce(st: State, max_n: int = MAX_N) -> Fraction:
    _check(st.graph.n, max_n)
    return sum((weight_of_set(st, s) for s in independent_sets(st.graph)), Fraction(0))


def restricted_total_bruteforce(
    st: State, constraints: Sequence[Tuple[int, int]], max_n: int = MAX_N
) -> Fraction:
    """Sum over independent sets S with ``v in S`` iff ``eta == 1`` for each ``(v, eta)``."""
    _check(st.graph.n, max_n)
    want = {}
    for v, eta in constraints:
        if v not in st.graph:
            raise ValueError(f"vertex {v} not in graph")
        if want.get(v, eta) != eta:
            raise ValueError(f"inconsistent constraints on {v}")
        want[v] = eta
    total = Fraction(0)
    for s in independent_sets(st.graph):
        members = set(s)
        if all((v in members) == (eta == 1) for v, eta in want.items()):
            total += weight_of_set(st, members)
    return total
