import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iscount.cardinality import trivial_cardinality
from iscount.engine import (
    RESTART,
    EngineConfig,
    ImproperState,
    SearchStats,
    alpha_beta,
    count_independent_sets,
    dense_subcubic_measure,
    iscount,
    measure,
    select_branch_vertex,
)
from iscount.generators import complete, cube, cycle, gnp, path, petersen, random_cubic, random_state
from iscount.graph import Graph
from iscount.oracle import count_is_bruteforce, weighted_total_bruteforce
from iscount.partition import EMPTY, Partition, cross_count, skeleton
from iscount.procedures import prop, reduction

from .conftest import graphs

LOW = EngineConfig(small_cutoff=2)

# degree-4 vertex 9 has neighbours of degree 2, 2, 4, 4 and the density is 16/5
MIXED_NEIGHBOURS = Graph(
    range(1, 11),
    [(1, 3), (1, 5), (1, 6), (1, 8), (2, 4), (2, 9), (3, 9), (4, 5), (4, 10), (5, 10),
     (6, 8), (6, 9), (6, 10), (7, 8), (7, 10), (8, 9)],
)
# degree-4 vertex 8 has four degree-3 neighbours and the density is 7/2
CUBIC_NEIGHBOURS = Graph(
    range(1, 9),
    [(1, 3), (1, 5), (1, 6), (1, 7), (2, 4), (2, 6), (2, 8), (3, 6), (3, 8), (4, 7),
     (4, 8), (5, 7), (5, 8), (6, 7)],
)


def test_count_examples():
    assert count_independent_sets(path(4)) == 8
    assert count_independent_sets(cycle(5)) == 11
    assert count_independent_sets(petersen()) == 76
    assert count_independent_sets(Graph()) == 1
    assert count_independent_sets(complete(6)) == 7


@pytest.mark.parametrize("cfg", [EngineConfig(), LOW, EngineConfig(small_cutoff=5)])
@settings(max_examples=120, deadline=None)
@given(g=graphs(max_n=13))
def test_unweighted_matches_bruteforce(cfg, g):
    assert count_independent_sets(g, cfg) == count_is_bruteforce(g)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=11), st.integers(0, 2**32), st.sampled_from([2, 4, 20]))
def test_weighted_matches_bruteforce(g, seed, cutoff):
    rng = random.Random(seed)
    s = random_state(g, rng, gadgets=rng.randint(0, 2))
    assert iscount(s, config=EngineConfig(small_cutoff=cutoff)) == weighted_total_bruteforce(s)


def test_input_state_untouched():
    s = random_state(petersen(), random.Random(1))
    before = (dict(s.c1), dict(s.c0), dict(s.ce), s.scalar, s.graph.edges())
    iscount(s, config=LOW)
    assert (dict(s.c1), dict(s.c0), dict(s.ce), s.scalar, s.graph.edges()) == before


def test_improper_state_rejected_on_request():
    s = trivial_cardinality(path(3))
    s.c0[2] = Fraction(-1)
    with pytest.raises(ImproperState):
        iscount(s, check=True)


def test_alpha_beta_examples():
    g = complete(5)
    assert alpha_beta(g, 1) == 4
    assert MIXED_NEIGHBOURS.density() == Fraction(16, 5)
    assert sorted(MIXED_NEIGHBOURS.degree(u) for u in MIXED_NEIGHBOURS.neighbors(9)) == [2, 2, 4, 4]
    assert alpha_beta(MIXED_NEIGHBOURS, 9) == 3
    assert CUBIC_NEIGHBOURS.density() == Fraction(7, 2)
    assert {CUBIC_NEIGHBOURS.degree(u) for u in CUBIC_NEIGHBOURS.neighbors(8)} == {3}
    assert alpha_beta(CUBIC_NEIGHBOURS, 8) == Fraction(24, 7)


@pytest.mark.parametrize("g", [MIXED_NEIGHBOURS, CUBIC_NEIGHBOURS])
def test_degree_four_rule_maximises_alpha_beta(g):
    v, p = select_branch_vertex(trivial_cardinality(g), EMPTY, LOW)
    scores = {u: alpha_beta(g, u) for u in g if g.degree(u) == 4}
    best = max(scores.values())
    assert scores[v] == best
    assert v == min(u for u, s in scores.items() if s == best)


def test_small_rule_takes_max_degree_vertex():
    v, p = select_branch_vertex(trivial_cardinality(petersen()), EMPTY, EngineConfig())
    assert v == 1 and p == EMPTY


def test_small_rule_skips_nonpositive_c1():
    s = trivial_cardinality(Graph([1, 2, 3, 4], [(1, 3), (1, 4), (2, 3), (2, 4)]))
    s.c1[1] = Fraction(0)
    v, _ = select_branch_vertex(s, EMPTY, EngineConfig())
    assert v == 2


def test_cubic_rule_picks_vertex_with_cubic_neighbourhood():
    g = cube()
    g.remove_vertex(1)
    # only the antipode of the removed corner keeps three degree-3 neighbours
    v, p = select_branch_vertex(trivial_cardinality(g), EMPTY, LOW)
    assert v == 8
    assert p == EMPTY


def subdivided(g):
    h = Graph(g.vertices())
    for a, b in g.edges():
        x = h.add_vertex()
        h.add_edge(a, x)
        h.add_edge(x, b)
    return h


def test_bisection_rule_picks_crossing_vertex():
    g = subdivided(cube())
    stats = SearchStats()
    v, p = select_branch_vertex(trivial_cardinality(g), EMPTY, LOW, stats)
    b = skeleton(g)
    assert not p.empty_side and stats.bisections == 1
    assert v in p.v0 | p.v1
    assert cross_count(p, b, v) >= 1
    big = p.v0 if len(p.v0) >= len(p.v1) else p.v1
    assert cross_count(p, b, v) >= 2 or v in big


def test_bisection_rule_restarts_without_crossing_chains():
    # two components, each side holds one of them: nothing crosses
    a = subdivided(complete(4))
    shift = max(a.vertices())
    g = Graph(
        a.vertices() + [v + shift for v in a.vertices()],
        a.edges() + [(x + shift, y + shift) for x, y in a.edges()],
    )
    p = Partition.of({1, 2, 3, 4}, {1 + shift, 2 + shift, 3 + shift, 4 + shift})
    v, q = select_branch_vertex(trivial_cardinality(g), p, LOW)
    assert v == RESTART and q == EMPTY


def test_high_degree_rule_prefers_mixed_neighbourhood():
    g = complete(6)
    g.add_edge(6, g.add_vertex())
    # 6 now has degree 6 and a leaf neighbour; the others have degree 5
    v, _ = select_branch_vertex(trivial_cardinality(g), EMPTY, LOW)
    assert v == 6
    h = complete(7)
    assert select_branch_vertex(trivial_cardinality(h), EMPTY, LOW)[0] == 1


def test_measure_examples():
    assert measure(petersen()) == Fraction("2.0001")
    assert measure(Graph()) == 0
    # triangular prism with its three rungs subdivided
    g = Graph(range(1, 10), [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6),
                              (1, 7), (7, 4), (2, 8), (8, 5), (3, 9), (9, 6)])
    assert g.count_degree(2) == 3 and g.count_degree(3) == 6
    assert dense_subcubic_measure(g) == Fraction("0.023855") * 3 + Fraction("0.188173") * 6


def test_measure_with_partition_and_dense_forms():
    g = cube()
    p = Partition.of({1, 2, 3, 4}, {5, 6, 7, 8})
    assert measure(g, p) == Fraction(1, 5) * 4 + Fraction(4, 100000) + Fraction(3, 5) * 4
    # K5 sits in the top density band, K6 uses the degree-5 high-degree weight
    assert measure(complete(5)) == Fraction("0.271922") * 5
    assert measure(complete(6)) == Fraction("0.298566") * 6
    assert measure(complete(8)) == 8


def test_determinism_and_stats():
    g = random_cubic(40, random.Random(11))
    runs = []
    for _ in range(2):
        stats = SearchStats()
        total = iscount(trivial_cardinality(g), config=EngineConfig(small_cutoff=4, rng_seed=3), stats=stats)
        runs.append((total, stats.to_json()))
    assert runs[0] == runs[1]
    assert runs[0][1]["branch_nodes"] >= 1
    assert set(runs[0][1]) == {"branch_nodes", "depth", "r1", "r2", "d0", "d1", "d2", "restarts", "bisections", "widths"}


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10, min_n=2), st.integers(0, 2**32))
def test_branch_identity(g, seed):
    rng = random.Random(seed)
    s = reduction(random_state(g, rng, gadgets=rng.randint(0, 1)))
    if s.graph.n < 2:
        return
    v, _ = select_branch_vertex(s, EMPTY, LOW)
    if v == RESTART:
        return
    parts = weighted_total_bruteforce(prop(s.copy(), v, 0)) + weighted_total_bruteforce(prop(s.copy(), v, 1))
    assert parts == weighted_total_bruteforce(s)


def test_descent_in_bisection_regime():
    stats = SearchStats()
    cfg = EngineConfig(small_cutoff=2, check_descent=True)
    for seed in range(3):
        g = random_cubic(20, random.Random(seed))
        assert iscount(trivial_cardinality(g), config=cfg, stats=stats) == count_is_bruteforce(g)
    assert stats.descent_checks > 0
    assert stats.descent_violations == 0


def test_recursion_depth_bounded_by_n():
    g = gnp(18, 0.3, random.Random(4))
    stats = SearchStats()
    count_independent_sets(g, LOW, stats)
    assert stats.max_depth <= g.n


def test_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        EngineConfig(small_cutoff=1)
    monkeypatch.setenv("ISCOUNT_CUTOFF", "7")
    assert EngineConfig.from_env().small_cutoff == 7
    assert EngineConfig.from_env(small_cutoff=3).small_cutoff == 3
