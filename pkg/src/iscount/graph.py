"""Mutable simple undirected graph with stable vertex ids, plus the
structural queries the counting engine needs (components, cut vertices,
separating pairs) and the edge-list / DIMACS readers."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple


class GraphFormatError(ValueError):
    """Raised by :func:`parse_graph` for malformed input; carries the line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def edge_key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph keyed by integer ids.

    Ids are never reused: :meth:`add_vertex` without an explicit id hands out
    a value larger than every id this graph (or the graph it was copied
    from) has ever seen.
    """

    __slots__ = ("_adj", "_next_id")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()) -> None:
        self._adj: Dict[int, Set[int]] = {}
        self._next_id = 1
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # -- mutation ---------------------------------------------------------

    def add_vertex(self, v: Optional[int] = None) -> int:
        if v is None:
            v = self._next_id
        elif v in self._adj:
            raise ValueError(f"vertex {v} already present")
        self._adj[v] = set()
        if v >= self._next_id:
            self._next_id = v + 1
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if u not in self._adj or v not in self._adj:
            raise KeyError(f"edge {u}-{v} has an endpoint that is not a vertex")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge {u}-{v}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_vertex(self, v: int) -> None:
        for u in self._adj.pop(v):
            self._adj[u].discard(v)

    def remove_vertices(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.remove_vertex(v)

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g._adj = {v: set(nb) for v, nb in self._adj.items()}
        g._next_id = self._next_id
        return g

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; the id counter is inherited."""
        keep = set(keep)
        g = Graph.__new__(Graph)
        g._adj = {v: self._adj[v] & keep for v in keep}
        g._next_id = self._next_id
        return g

    # -- queries ----------------------------------------------------------

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def vertices(self) -> List[int]:
        return sorted(self._adj)

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def neighbors(self, v: int) -> Set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def count_degree(self, i: int) -> int:
        """n_i(G)."""
        return sum(1 for nb in self._adj.values() if len(nb) == i)

    def count_degree_at_least(self, i: int) -> int:
        """n_{>=i}(G)."""
        return sum(1 for nb in self._adj.values() if len(nb) >= i)

    def density(self):
        from fractions import Fraction

        if not self._adj:
            return Fraction(0)
        return Fraction(2 * self.m, self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- parsing ------------------------------------------------------------------


def _ints(lineno: int, parts: List[str]) -> List[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(lineno, f"expected integers, got {' '.join(parts)!r}") from None


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Read a graph in ``edgelist`` ("n m" header then "u v" lines) or
    ``dimacs`` ("p edge n m" header, "e u v" lines, "c" comments) form.

    Vertices are 1..n. Blank lines are skipped in both formats.
    """
    if fmt not in ("edgelist", "dimacs"):
        raise ValueError(f"unknown format {fmt!r}")
    n: Optional[int] = None
    declared_m = 0
    g = Graph()
    seen: Set[Tuple[int, int]] = set()
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        parts = raw.split()
        if not parts:
            continue
        if fmt == "dimacs":
            tag, rest = parts[0], parts[1:]
            if tag == "c":
                continue
            if tag == "p":
                if n is not None:
                    raise GraphFormatError(lineno, "second problem line")
                if len(rest) != 3 or rest[0] not in ("edge", "col"):
                    raise GraphFormatError(lineno, "expected 'p edge <n> <m>'")
                n, declared_m = _ints(lineno, rest[1:])
                _declare(g, n, lineno)
                continue
            if tag != "e":
                raise GraphFormatError(lineno, f"unknown line type {tag!r}")
            if n is None:
                raise GraphFormatError(lineno, "edge before problem line")
            fields = rest
        else:
            if n is None:
                if len(parts) != 2:
                    raise GraphFormatError(lineno, "expected header 'n m'")
                n, declared_m = _ints(lineno, parts)
                _declare(g, n, lineno)
                continue
            fields = parts

        if len(fields) != 2:
            raise GraphFormatError(lineno, "expected exactly two vertex indices")
        u, v = _ints(lineno, fields)
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphFormatError(lineno, f"vertex {x} out of range 1..{n}")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        key = edge_key(u, v)
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        g.add_edge(u, v)

    if n is None:
        raise GraphFormatError(last_line or 1, "missing header")
    if len(seen) != declared_m:
        raise GraphFormatError(last_line, f"header declares {declared_m} edges, found {len(seen)}")
    return g


def _declare(g: Graph, n: int, lineno: int) -> None:
    if n < 0:
        raise GraphFormatError(lineno, "negative vertex count")
    for v in range(1, n + 1):
        g.add_vertex(v)


def format_edgelist(g: Graph) -> str:
    """Inverse of ``parse_graph(.., 'edgelist')`` after relabelling ids to 1..n."""
    label = {v: i for i, v in enumerate(g.vertices(), start=1)}
    lines = [f"{g.n} {g.m}"]
    lines += [f"{label[u]} {label[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- structure ----------------------------------------------------------------


def components(g: Graph, removed: Iterable[int] = ()) -> List[Set[int]]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    removed = set(removed)
    seen = set(removed)
    out = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def cut_vertices(g: Graph, removed: Iterable[int] = ()) -> Set[int]:
    """Articulation points of ``g - removed`` (iterative Hopcroft-Tarjan)."""
    removed = set(removed)
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    cuts: Set[int] = set()
    timer = 0
    for root in g.vertices():
        if root in removed or root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y in removed or y == parent:
                    continue
                if y in disc:
                    if disc[y] < low[x]:
                        low[x] = disc[y]
                    continue
                disc[y] = low[y] = timer
                timer += 1
                stack.append((y, x, iter(sorted(g.neighbors(y)))))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[x] < low[parent]:
                low[parent] = low[x]
            if parent == root:
                root_children += 1
            elif low[x] >= disc[parent]:
                cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def separating_pairs(
    g: Graph, min_degree: int = 3, forbidden: Iterable[int] = ()
) -> Iterator[Tuple[int, int, List[Set[int]]]]:
    """Yield ``(u, v, comps)`` in lexicographic order for every pair whose
    removal leaves at least two components holding a vertex of degree
    ``>= min_degree`` in ``g``. ``comps`` lists all components of ``g - {u, v}``.

    Assumes ``g`` is connected without cut vertices, so the pairs are exactly
    ``{u, v}`` with ``v`` a cut vertex of ``g - u``.
    """
    forbidden = set(forbidden)
    for u in g.vertices():
        if u in forbidden:
            continue
        for v in sorted(cut_vertices(g, (u,))):
            if v <= u or v in forbidden:
                continue
            comps = components(g, (u, v))
            heavy = sum(1 for c in comps if any(g.degree(x) >= min_degree for x in c))
            if heavy >= 2:
                yield u, v, comps


def find_separating_pair(
    g: Graph, min_degree: int = 3, forbidden: Iterable[int] = ()
) -> Optional[Tuple[int, int, List[Set[int]]]]:
    return next(separating_pairs(g, min_degree, forbidden), None)
