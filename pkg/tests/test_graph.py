import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from iscount.generators import bowtie, complete, cycle, path
from iscount.graph import (
    Graph,
    GraphFormatError,
    components,
    cut_vertices,
    find_separating_pair,
    format_edgelist,
    parse_graph,
)

from .conftest import graphs


def test_parse_edgelist_path():
    g = parse_graph("3 2\n1 2\n2 3\n", "edgelist")
    assert g.vertices() == [1, 2, 3]
    assert g.m == 2
    assert g.edges() == [(1, 2), (2, 3)]


def test_parse_dimacs_matches_edgelist():
    text = "c a path\np edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_graph(text, "dimacs") == parse_graph("3 2\n1 2\n2 3\n")


def test_parse_keeps_isolated_vertices():
    g = parse_graph("4 1\n1 2\n")
    assert g.n == 4 and g.degree(4) == 0


@pytest.mark.parametrize(
    "text, fmt, lineno, needle",
    [
        ("3 2\n1 1\n2 3\n", "edgelist", 2, "self-loop"),
        ("3 2\n1 2\n2 1\n", "edgelist", 3, "duplicate"),
        ("3 1\n1 4\n", "edgelist", 2, "out of range"),
        ("3 1\n1 x\n", "edgelist", 2, "integers"),
        ("3 1\n1 2 3\n", "edgelist", 2, "two vertex"),
        ("p edge 2 1\nq 1 2\n", "dimacs", 2, "unknown line"),
        ("e 1 2\n", "dimacs", 1, "before problem"),
        ("3 2\n1 2\n", "edgelist", 2, "declares 2"),
    ],
)
def test_parse_errors_are_line_numbered(text, fmt, lineno, needle):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text, fmt)
    assert info.value.lineno == lineno
    assert needle in str(info.value)


@given(graphs())
def test_edgelist_round_trip(g):
    assert parse_graph(format_edgelist(g)) == g


def test_fresh_ids_are_never_reused():
    g = path(3)
    g.remove_vertex(3)
    assert g.add_vertex() == 4
    h = g.copy()
    h.remove_vertex(4)
    assert h.add_vertex() == 5


@given(graphs())
def test_remove_vertex_updates_adjacency(g):
    for v in g.vertices():
        h = g.copy()
        d = h.degree(v)
        m = h.m
        h.remove_vertex(v)
        assert all(v not in h.neighbors(u) for u in h)
        assert h.m == m - d


@given(graphs())
def test_adjacency_symmetric_and_counts(g):
    for u in g:
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert 2 * g.m == sum(g.degree(v) for v in g)
    assert sum(g.count_degree(i) for i in range(g.n + 1)) == g.n


def test_components_examples():
    assert [len(c) for c in components(path(3))] == [3]
    assert components(Graph(range(1, 5), [(1, 2), (3, 4)])) == [{1, 2}, {3, 4}]
    assert components(Graph()) == []


@given(graphs())
def test_components_partition_vertices(g):
    comps = components(g)
    assert sum(len(c) for c in comps) == g.n
    assert set().union(*comps) == set(g) if comps else g.n == 0
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    expected = sorted(sorted(c) for c in nx.connected_components(_nx(g)))
    assert sorted(sorted(c) for c in comps) == expected


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g)
    h.add_edges_from(g.edges())
    return h


def _brute_cut_vertices(g):
    base = len(components(g))
    return {v for v in g if len(components(g, (v,))) > base}


def test_cut_vertex_examples():
    assert cut_vertices(bowtie()) == {3}
    assert cut_vertices(cycle(5)) == set()
    assert cut_vertices(path(3)) == {2}


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_cut_vertices_match_brute_force(g):
    assert cut_vertices(g) == _brute_cut_vertices(g)
    assert cut_vertices(g) == set(nx.articulation_points(_nx(g)))


def _exhaustive_pairs(g, min_degree=3):
    out = []
    for u, v in itertools.combinations(g.vertices(), 2):
        comps = components(g, (u, v))
        if sum(1 for c in comps if any(g.degree(x) >= min_degree for x in c)) >= 2:
            out.append((u, v))
    return out


def _two_squares():
    # 4-cycles u-a-v-b and u-c-v-d sharing the antipodal pair (u, v) = (1, 2);
    # chords a-b and c-d lift the other vertices to degree 3 without cut vertices
    return Graph(range(1, 7), [(1, 3), (3, 2), (2, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 1), (3, 4), (5, 6)])


def test_separating_pair_examples():
    g = _two_squares()
    assert cut_vertices(g) == set()
    found = find_separating_pair(g)
    assert found is not None
    assert (found[0], found[1]) == _exhaustive_pairs(g)[0] == (1, 2)
    assert sorted(sorted(c) for c in found[2]) == [[3, 4], [5, 6]]
    assert find_separating_pair(complete(4)) is None
    assert find_separating_pair(cycle(6)) is None


@settings(max_examples=300)
@given(graphs(max_n=12, min_n=3))
def test_separating_pairs_match_exhaustive(g):
    if len(components(g)) != 1 or cut_vertices(g):
        return
    found = find_separating_pair(g)
    pairs = _exhaustive_pairs(g)
    assert (found is None) == (not pairs)
    if found:
        assert (found[0], found[1]) == pairs[0]


def test_forbidden_endpoints_are_skipped():
    g = _two_squares()
    found = find_separating_pair(g, forbidden={1})
    assert found is None or 1 not in found[:2]
