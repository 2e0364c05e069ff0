"""Simple undirected graphs, the core graph H and the vertex vocabulary.

Vertex ids are opaque hashable, orderable values (ints in practice). Ids stay
stable when vertices are deleted, so anything keyed by vertex or edge survives
a deletion as long as the keyed objects themselves survive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

Vertex = Hashable
Edge = tuple

DEFAULT_DEGREE_CAP = 4


class GraphError(ValueError):
    """Raised on unknown vertices/edges, loops and parallel edges."""


def edge_key(u, v) -> Edge:
    """Canonical (sorted) form of the unordered pair ``{u, v}``."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Simple undirected graph backed by an adjacency dict of sets."""

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        self._adj: dict = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # construction / mutation

    def add_vertex(self, v: Vertex) -> None:
        self._adj.setdefault(v, set())

    def add_edge(self, u: Vertex, v: Vertex) -> Edge:
        if u == v:
            raise GraphError(f"loop at vertex {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        if v in self._adj[u]:
            raise GraphError(f"parallel edge {u!r}-{v!r}")
        self._adj[u].add(v)
        self._adj[v].add(u)
        return edge_key(u, v)

    def remove_edge(self, u: Vertex, v: Vertex) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"unknown edge {u!r}-{v!r}")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def remove_vertex(self, v: Vertex) -> list[Edge]:
        """Delete ``v`` and return the edges that were incident to it."""
        nbrs = self._nbrs(v)
        for w in nbrs:
            self._adj[w].discard(v)
        del self._adj[v]
        return [edge_key(v, w) for w in sorted(nbrs)]

    def copy(self) -> Graph:
        g = Graph()
        g._adj = {v: set(n) for v, n in self._adj.items()}
        return g

    def subgraph(self, keep: Iterable[Vertex]) -> Graph:
        """Induced subgraph on ``keep`` (unknown ids are ignored)."""
        keep = set(keep) & self._adj.keys()
        g = Graph()
        g._adj = {v: self._adj[v] & keep for v in keep}
        return g

    # queries

    def _nbrs(self, v: Vertex) -> set:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.order}, m={self.size})"

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def vertices(self) -> list:
        return sorted(self._adj)

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, n in self._adj.items() for v in n if u < v)

    def iter_edges(self) -> Iterator[Edge]:
        for u, n in self._adj.items():
            for v in n:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: Vertex) -> set:
        return set(self._nbrs(v))

    def degree(self, v: Vertex) -> int:
        return len(self._nbrs(v))

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def check_edge(self, e) -> Edge:
        u, v = e
        if not self.has_edge(u, v):
            raise GraphError(f"unknown edge {u!r}-{v!r}")
        return edge_key(u, v)

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(n) for n in self._adj.values()), default=0)

    def exceeds_cap(self, cap: int = DEFAULT_DEGREE_CAP) -> bool:
        return self.max_degree > cap

    def relabel(self, mapping: dict) -> Graph:
        return Graph((mapping[v] for v in self._adj), ((mapping[u], mapping[v]) for u, v in self.iter_edges()))


def degree(g: Graph, v: Vertex) -> int:
    return g.degree(v)


@dataclass
class CoreGraph:
    """The core graph H: ``source`` with its degree-1 vertices deleted once.

    Vertex ids are shared with the source graph, so the back-mapping of
    vertices and edges is the identity on whatever survived.
    """

    graph: Graph
    source: Graph
    removed: frozenset = field(default_factory=frozenset)

    def to_source(self, v: Vertex) -> Vertex:
        if v not in self.graph:
            raise GraphError(f"vertex {v!r} is not in the core graph")
        return v

    def degree(self, v: Vertex) -> int:
        return self.graph.degree(v)

    def source_degree(self, v: Vertex) -> int:
        return self.source.degree(v)

    def n_i(self, v: Vertex, i: int) -> int:
        """Number of neighbours of ``v`` that have degree ``i`` in the source graph."""
        return sum(1 for w in self.source.neighbors(v) if self.source.degree(w) == i)


def derive_core(g: Graph) -> CoreGraph:
    """Delete every vertex of degree exactly 1, in a single pass."""
    removed = frozenset(v for v in g.vertices() if g.degree(v) == 1)
    return CoreGraph(g.subgraph(v for v in g.vertices() if v not in removed), g, removed)


def peel_to_two_core(g: Graph) -> Graph:
    """Iteratively delete vertices of degree <= 1 (the 2-core).

    Not what :func:`derive_core` does; kept separate on purpose.
    """
    h = g.copy()
    stack = [v for v in h.vertices() if h.degree(v) <= 1]
    while stack:
        v = stack.pop()
        if v not in h or h.degree(v) > 1:
            continue
        for w in h.neighbors(v):
            if h.degree(w) == 2:
                stack.append(w)
        h.remove_vertex(v)
    return h


@dataclass(frozen=True)
class VertexClass:
    """A k_j class: degree k with j neighbours of degree 2.

    ``one_plus`` marks a 3_1 vertex whose 2-neighbour is itself a 2_1 vertex.
    """

    degree: int
    twos: int
    one_plus: bool = False

    @property
    def is_poor(self) -> bool:
        return self.degree == 3 and (self.twos == 2 or self.one_plus)

    @property
    def label(self) -> str:
        if self.one_plus:
            return "3_1+"
        return f"{self.degree}_{self.twos}"

    def is_(self, degree: int, twos: int) -> bool:
        return self.degree == degree and self.twos == twos

    def __str__(self) -> str:
        return self.label


def classify(h, v: Vertex) -> VertexClass:
    """Class of ``v`` with every degree measured in ``h`` (a Graph or CoreGraph)."""
    g = h.graph if isinstance(h, CoreGraph) else h
    nbrs = g.neighbors(v)
    two_nbrs = [w for w in nbrs if g.degree(w) == 2]
    one_plus = False
    if len(nbrs) == 3 and len(two_nbrs) == 1:
        (w,) = two_nbrs
        one_plus = sum(1 for x in g.neighbors(w) if g.degree(x) == 2) == 1
    return VertexClass(len(nbrs), len(two_nbrs), one_plus)


def classify_all(h) -> dict:
    g = h.graph if isinstance(h, CoreGraph) else h
    return {v: classify(g, v) for v in g.vertices()}


def is_light(g: Graph, e) -> bool:
    u, v = g.check_edge(e)
    return g.degree(u) == 2 and g.degree(v) == 2
