"""Recursive branch-and-reduce counter of weighted independent sets.

The driver alternates forced simplifications (degree <= 1 removal,
component / cut-vertex / separating-pair folding) with two-way branching
on a vertex chosen by a degree- and bisection-aware policy.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cardinality import State, is_proper
from .graph import Graph, components, cut_vertices, separating_pairs
from .partition import (
    EMPTY,
    Partition,
    bisect,
    cross_count,
    rebalance_heavy_vertices,
    restrict,
    skeleton,
    width,
)
from .procedures import DegenerateCut, d0, d1, d2, prop, reduction

DELTA = Fraction(1, 100000)
DEFAULT_CUTOFF = 20


class ImproperState(ValueError):
    pass


@dataclass
class EngineConfig:
    small_cutoff: int = DEFAULT_CUTOFF
    delta: Fraction = DELTA
    collect_stats: bool = True
    rng_seed: int = 0
    check_descent: bool = False

    def __post_init__(self) -> None:
        if self.small_cutoff < 2:
            raise ValueError("small_cutoff must be >= 2")
        if self.delta <= 0:
            raise ValueError("delta must be positive")

    @classmethod
    def from_env(cls, **kw) -> "EngineConfig":
        if "small_cutoff" not in kw and os.environ.get("ISCOUNT_CUTOFF"):
            kw["small_cutoff"] = int(os.environ["ISCOUNT_CUTOFF"])
        return cls(**kw)


@dataclass
class SearchStats:
    branch_nodes: int = 0
    max_depth: int = 0
    reductions: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(("r1", "r2", "d0", "d1", "d2"), 0))
    restarts: int = 0
    bisections: int = 0
    degenerate_cuts: int = 0
    widths: List[int] = field(default_factory=list)
    # (depth, measure) at every branch taken by the bisection policy
    measure_trace: List[Tuple[int, Fraction]] = field(default_factory=list)
    descent_checks: int = 0
    descent_violations: int = 0

    def bump(self, key: str) -> None:
        self.reductions[key] += 1

    def to_json(self) -> dict:
        r = self.reductions
        return {
            "branch_nodes": self.branch_nodes,
            "depth": self.max_depth,
            "r1": r["r1"],
            "r2": r["r2"],
            "d0": r["d0"],
            "d1": r["d1"],
            "d2": r["d2"],
            "restarts": self.restarts,
            "bisections": self.bisections,
            "widths": list(self.widths),
        }


# -- measure diagnostics -----------------------------------------------------------

# (lower, upper] density band -> weights for degrees 2, 3, 4
DENSITY_BANDS: List[Tuple[Fraction, Fraction, Tuple[Fraction, Fraction, Fraction]]] = [
    (Fraction(2), Fraction(3), (Fraction("0.023855"), Fraction("0.188173"), Fraction("0.331455"))),
    (Fraction(3), Fraction(16, 5), (Fraction("0.068596"), Fraction("0.188173"), Fraction("0.286715"))),
    (Fraction(16, 5), Fraction(76, 21), (Fraction("0.081402"), Fraction("0.190308"), Fraction("0.278178"))),
    (Fraction(76, 21), Fraction(15, 4), (Fraction("0.093788"), Fraction("0.194436"), Fraction("0.27405"))),
    (Fraction(15, 4), Fraction(4), (Fraction("0.108682"), Fraction("0.20082"), Fraction("0.271922"))),
]
# degrees 2..6
HIGH_DEGREE_WEIGHTS: Tuple[Fraction, ...] = tuple(
    Fraction(s) for s in ("0.113664", "0.200821", "0.27194", "0.298566", "0.30669")
)
DENSE_SUBCUBIC_WEIGHTS = (Fraction("0.023855"), Fraction("0.188173"))


@dataclass(frozen=True)
class MeasureWeights:
    delta: Fraction = DELTA
    ec_coeff: Fraction = Fraction(3, 5)
    dense_subcubic: Tuple[Fraction, Fraction] = DENSE_SUBCUBIC_WEIGHTS
    density_bands: Tuple = tuple(DENSITY_BANDS)
    high_band: Tuple[Fraction, ...] = HIGH_DEGREE_WEIGHTS

    @property
    def bp_coeff(self) -> Fraction:
        return Fraction(1, 5) + self.delta

    def band(self, k: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
        """Degree-2/3/4 weights of the (lower, upper] density band holding ``k``."""
        for lo, hi, w in self.density_bands:
            if lo < k <= hi:
                return w
        return self.density_bands[0][2] if k <= 2 else self.density_bands[-1][2]


def dense_subcubic_measure(g: Graph, w: Optional[MeasureWeights] = None) -> Fraction:
    """Linear degree-2/3 form for subcubic graphs denser than 8/3."""
    a, b = (w or MeasureWeights()).dense_subcubic
    return a * g.count_degree(2) + b * g.count_degree(3)


def _component_measure(g: Graph, w: MeasureWeights) -> Fraction:
    top = g.max_degree()
    if top <= 3:
        return w.bp_coeff * g.count_degree(3)
    if top == 4:
        w2, w3, w4 = w.band(g.density())
        return w2 * g.count_degree(2) + w3 * g.count_degree(3) + w4 * g.count_degree(4)
    if top <= 6:
        return sum((wi * g.count_degree(i) for i, wi in enumerate(w.high_band, start=2)), Fraction(0))
    return Fraction(g.n)


def measure(g: Graph, p: Partition = EMPTY, w: Optional[MeasureWeights] = None) -> Fraction:
    """Potential used to audit the search; never steers it.

    Subcubic graphs with both partition sides nonempty get
    ``(1/5 + delta) * bp + 3/5 * ec`` over the whole graph, and
    ``(1/5 + delta) * n3`` otherwise. Denser graphs sum a degree-weighted
    form over their components.
    """
    w = w or MeasureWeights()
    if g.n == 0:
        return Fraction(0)
    if g.max_degree() <= 3:
        b = skeleton(g)
        q = restrict(p, b)
        if not q.empty_side:
            return w.bp_coeff * q.bp + w.ec_coeff * width(q, b)
        return w.bp_coeff * len(b.vertices)
    return sum((_component_measure(g.induced(c), w) for c in components(g)), Fraction(0))


# -- selection -----------------------------------------------------------------------


def alpha_beta(g: Graph, v: int) -> Fraction:
    """Average-degree score alpha(v)/beta(v) against the graph density."""
    k = g.density()
    low = [g.degree(w) for w in g.neighbors(v) if g.degree(w) < k]
    alpha = g.degree(v) + len(low)
    beta = 1 + sum((Fraction(1, d) for d in low), Fraction(0))
    return alpha / beta


RESTART = "restart"


def _all_cubic_neighbourhood(g: Graph, v: int) -> bool:
    return g.degree(v) == 3 and all(g.degree(u) == 3 for u in g.neighbors(v))


def select_branch_vertex(st: State, p: Partition, cfg: EngineConfig, stats: Optional[SearchStats] = None):
    """Return ``(v, partition)`` for the next branching, or ``(RESTART, EMPTY)``."""
    v, p, _ = _select(st, p, cfg, stats)
    return v, p


def _select(st: State, p: Partition, cfg: EngineConfig, stats: Optional[SearchStats]):
    g = st.graph
    verts = g.vertices()
    top = g.max_degree()

    if g.count_degree_at_least(3) <= cfg.small_cutoff:
        best = [v for v in verts if g.degree(v) == top]
        positive = [v for v in best if st.c1[v] > 0]
        return (positive or best)[0], p, "small"

    if top == 3:
        dense = [v for v in verts if _all_cubic_neighbourhood(g, v)]
        if dense:
            return dense[0], p, "cubic"
        v, p = _bisection_choice(g, p, cfg, stats)
        return v, p, "bisection"

    if top == 4:
        scored = [(-alpha_beta(g, v), v) for v in verts if g.degree(v) == 4]
        return min(scored)[1], p, "degree4"

    maxdeg = [v for v in verts if g.degree(v) == top]
    mixed = [v for v in maxdeg if any(g.degree(u) < top for u in g.neighbors(v))]
    return (mixed or maxdeg)[0], p, "high"


def _bisection_choice(g: Graph, p: Partition, cfg: EngineConfig, stats: Optional[SearchStats]):
    b = skeleton(g)
    p = restrict(p, b)
    if p.empty_side:
        p = bisect(b, cfg.rng_seed)
        if stats is not None:
            stats.bisections += 1
            stats.widths.append(width(p, b))
    p = rebalance_heavy_vertices(p, b)

    crossing = [v for v in sorted(p.v0 | p.v1) if cross_count(p, b, v) >= 1]
    if not crossing:
        return RESTART, EMPTY
    for v in crossing:
        if cross_count(p, b, v) >= 2:
            return v, p
    big = len(p.v0) >= len(p.v1), len(p.v1) >= len(p.v0)
    for v in crossing:
        if big[0 if v in p.v0 else 1]:
            return v, p
    raise AssertionError("a crossing chain has an end on the larger side")


# -- driver --------------------------------------------------------------------------


def _smallest_heavy(comps, g: Graph, need_heavy: bool = False):
    best = None
    for c in comps:
        heavy = sum(1 for x in c if g.degree(x) >= 3)
        if need_heavy and heavy == 0:
            continue
        key = (heavy, min(c))
        if best is None or key < best[0]:
            best = (key, c)
    return None if best is None else best[1]


class _Run:
    def __init__(self, cfg: EngineConfig, stats: Optional[SearchStats]) -> None:
        self.cfg = cfg
        self.stats = stats

    def sub_count(self, st: State) -> Fraction:
        return self.count(st, EMPTY, 0)

    def decompose_once(self, st: State) -> bool:
        """Apply one of D0 / D1 / D2 if its trigger holds."""
        g = st.graph
        comps = components(g)
        if len(comps) > 1:
            d0(st, _smallest_heavy(comps, g), self.sub_count, self.stats)
            return True
        cuts = cut_vertices(g)
        if cuts:
            v = min(cuts)
            h = _smallest_heavy(components(g, (v,)), g)
            d1(st, v, h | {v}, self.sub_count, self.stats)
            return True
        # gadget vertices are kept out of cut pairs so A(G) stays independent
        for u, v, comps in separating_pairs(g, 3, st.added):
            h = _smallest_heavy(comps, g, need_heavy=True)
            try:
                d2(st, u, v, h | {u, v}, self.sub_count, self.stats)
            except DegenerateCut:
                if self.stats is not None:
                    self.stats.degenerate_cuts += 1
                continue
            return True
        return False

    def count(self, st: State, p: Partition, depth: int) -> Fraction:
        stats = self.stats
        if stats is not None and depth > stats.max_depth:
            stats.max_depth = depth
        while True:
            reduction(st, stats)
            g = st.graph
            if g.n == 0:
                return st.scalar
            if g.n == 1:
                (v,) = g
                return st.scalar * (st.c1[v] + st.c0[v])
            if p.empty_side and self.decompose_once(st):
                continue
            v, p, rule = _select(st, p, self.cfg, stats)
            if v is RESTART:
                if stats is not None:
                    stats.restarts += 1
                continue
            break

        if stats is not None:
            stats.branch_nodes += 1
        parent_mu = None
        if rule == "bisection" and stats is not None and self.cfg.check_descent:
            parent_mu = measure(g, p, MeasureWeights(self.cfg.delta))
            stats.measure_trace.append((depth, parent_mu))

        take = prop(st.copy(), v, 1)
        skip = prop(st, v, 0)
        if parent_mu is not None:
            for child in (take, skip):
                reduction(child)
                stats.descent_checks += 1
                if measure(child.graph, p, MeasureWeights(self.cfg.delta)) >= parent_mu:
                    stats.descent_violations += 1
        return self.count(take, p, depth + 1) + self.count(skip, p, depth + 1)


def iscount(
    st: State,
    partition: Partition = EMPTY,
    config: Optional[EngineConfig] = None,
    stats: Optional[SearchStats] = None,
    check: bool = False,
) -> Fraction:
    """Weighted number of independent sets of ``st`` (which is not modified).

    ``check=True`` verifies the cardinality function is proper first.
    """
    cfg = config or EngineConfig()
    if check and not is_proper(st):
        raise ImproperState("cardinality function is not proper")
    return _Run(cfg, stats).count(st.copy(), partition, 0)


def count_independent_sets(g: Graph, config: Optional[EngineConfig] = None, stats: Optional[SearchStats] = None) -> int:
    from .cardinality import trivial_cardinality

    total = iscount(trivial_cardinality(g, copy=False), config=config, stats=stats)
    assert total.denominator == 1
    return total.numerator
