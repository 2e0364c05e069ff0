"""The "sees" relation between edges, colorings, and their validation.

Two distinct edges see each other when some third edge joins an endpoint of
one to an endpoint of the other. That single rule covers both the
distance-two case and the common-triangle case.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from injcolor.graph import Edge, Graph, GraphError, edge_key


def sees(g: Graph, e, f) -> bool:
    e = g.check_edge(e)
    f = g.check_edge(f)
    if e == f:
        raise GraphError(f"an edge does not see itself: {e!r}")
    for x in e:
        for y in f:
            if x != y and g.has_edge(x, y):
                h = edge_key(x, y)
                if h != e and h != f:
                    return True
    return False


def seen_by(g: Graph, e) -> set:
    """F(e): every edge that sees ``e``, by two-hop enumeration."""
    e = g.check_edge(e)
    out = set()
    for x in e:
        for y in g.neighbors(x):
            h = edge_key(x, y)
            if h == e:
                continue
            for z in g.neighbors(y):
                f = edge_key(y, z)
                if f != h and f != e:
                    out.add(f)
    return out


class ConflictGraph:
    """One node per edge of the source graph, adjacent when the edges see each other.

    Node ``i`` is ``edges[i]``; edges are in sorted order.
    """

    def __init__(self, g: Graph):
        self.source = g
        self.edges: list[Edge] = g.edges()
        self.index: dict = {e: i for i, e in enumerate(self.edges)}
        self.adj: list[list[int]] = [sorted(self.index[f] for f in seen_by(g, e)) for e in self.edges]

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"ConflictGraph(nodes={len(self.edges)}, conflicts={self.num_conflicts})"

    @property
    def num_conflicts(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def node(self, e) -> int:
        try:
            return self.index[edge_key(*e)]
        except KeyError:
            raise GraphError(f"unknown edge {e!r}") from None

    def conflicts(self, e) -> set:
        return {self.edges[j] for j in self.adj[self.node(e)]}

    def conflict_pairs(self):
        for i, nbrs in enumerate(self.adj):
            for j in nbrs:
                if i < j:
                    yield self.edges[i], self.edges[j]

    def degree(self, e) -> int:
        return len(self.adj[self.node(e)])

    def csr(self):
        indptr = [0]
        indices = []
        for nbrs in self.adj:
            indices.extend(nbrs)
            indptr.append(len(indices))
        return indptr, indices


def build_conflict_graph(g: Graph) -> ConflictGraph:
    return ConflictGraph(g)


class Coloring:
    """A partial map from edges to colors ``1..k``."""

    def __init__(self, k: int, colors: dict | None = None):
        if k < 0:
            raise ValueError("k must be non-negative")
        self.k = k
        self._c: dict = {}
        for e, c in (colors or {}).items():
            self[e] = c

    def __getitem__(self, e) -> int:
        return self._c[edge_key(*e)]

    def __setitem__(self, e, color: int) -> None:
        self._c[edge_key(*e)] = color

    def __contains__(self, e) -> bool:
        return edge_key(*e) in self._c

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(sorted(self._c))

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self.k == other.k and self._c == other._c

    def __repr__(self) -> str:
        return f"Coloring(k={self.k}, colored={len(self._c)}, used={self.num_colors})"

    def get(self, e, default=None):
        return self._c.get(edge_key(*e), default)

    def erase(self, e) -> None:
        self._c.pop(edge_key(*e), None)

    def items(self):
        return sorted(self._c.items())

    def copy(self) -> Coloring:
        c = Coloring(self.k)
        c._c = dict(self._c)
        return c

    def restrict(self, edges) -> Coloring:
        keep = {edge_key(*e) for e in edges}
        return Coloring(self.k, {e: c for e, c in self._c.items() if e in keep})

    @property
    def num_colors(self) -> int:
        return len(set(self._c.values()))

    def is_total(self, g: Graph) -> bool:
        return all(e in self._c for e in g.iter_edges())


def available_colors(cg: ConflictGraph, col: Coloring, e) -> set[int]:
    """Colors of ``1..k`` not used on any edge that sees ``e``."""
    used = {col.get(f) for f in cg.conflicts(e)}
    return set(range(1, col.k + 1)) - used


@dataclass
class ValidationReport:
    missing: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)
    unknown: list = field(default_factory=list)
    conflicts: list = field(default_factory=list)

    @property
    def total(self) -> bool:
        return not self.missing

    @property
    def valid(self) -> bool:
        return not (self.missing or self.out_of_range or self.unknown or self.conflicts)

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.missing:
            parts.append(f"{len(self.missing)} uncolored")
        if self.out_of_range:
            parts.append(f"{len(self.out_of_range)} out of range")
        if self.unknown:
            parts.append(f"{len(self.unknown)} unknown edges")
        if self.conflicts:
            parts.append(f"{len(self.conflicts)} conflicting pairs")
        return "invalid: " + ", ".join(parts)


def validate(cg: ConflictGraph, col: Coloring) -> ValidationReport:
    rep = ValidationReport()
    rep.missing = [e for e in cg.edges if e not in col]
    rep.unknown = [e for e in col if e not in cg.index]
    rep.out_of_range = [e for e, c in col.items() if not (isinstance(c, int) and 1 <= c <= col.k)]
    for e, f in cg.conflict_pairs():
        c = col.get(e)
        if c is not None and c == col.get(f):
            rep.conflicts.append((e, f))
    return rep
