"""Seeded random eligible graphs and one small gadget per configuration kind."""
from __future__ import annotations

import random
from dataclasses import dataclass

from injcolor.graph import Graph
from injcolor.mad import THRESHOLD, densest_subset
from injcolor.reduction import Kind

MAX_DEGREE = 4


def gen_random_graph(n: int, m: int, seed: int, max_degree: int = MAX_DEGREE) -> Graph:
    """Up to ``m`` random edges inserted without exceeding ``max_degree``."""
    rng = random.Random(seed)
    g = Graph(range(n))
    misses = 0
    while g.size < m and misses < 50 * (m + 1):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or g.has_edge(u, v) or g.degree(u) >= max_degree or g.degree(v) >= max_degree:
            misses += 1
            continue
        g.add_edge(u, v)
    return g


def gen_random_eligible(n: int, seed: int) -> Graph:
    """A random graph with max degree <= 4 and mad < 8/3.

    Edges are inserted at random under the degree cap, then while mad is at
    least 8/3 one edge inside the densest subgraph is deleted.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    m = rng.randint(max(n - 1, 0), (4 * n) // 3 + 1)
    g = gen_random_graph(n, m, rng.randrange(2**32))
    while g.size:
        value, witness = densest_subset(g)
        if value < THRESHOLD:
            break
        inside = [e for e in g.edges() if e[0] in witness and e[1] in witness]
        g.remove_edge(*rng.choice(inside))
    return g


@dataclass
class Gadget:
    kind: object
    graph: Graph
    roles: dict


class _Builder:
    def __init__(self):
        self.g = Graph()
        self._next = 0

    def new(self, count: int = 1):
        vs = list(range(self._next, self._next + count))
        self._next += count
        for v in vs:
            self.g.add_vertex(v)
        return vs[0] if count == 1 else vs

    def edge(self, u, v):
        self.g.add_edge(u, v)

    def path(self, *vs):
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def loop_end(self, d):
        """Give ``d`` a 3-vertex neighbour sitting on a 4-cycle."""
        t, c1, c2, c3 = self.new(4)
        self.path(t, c1, c2, c3, t)
        self.edge(d, t)
        return t

    def spoke(self, b):
        """Give ``b`` a 2-vertex neighbour whose other neighbour has degree 3."""
        s = self.new()
        self.edge(b, s)
        self.loop_end(s)
        return s

    def heavy_end(self, b):
        """Give ``b`` a 4-vertex neighbour whose other neighbours are 2_0-vertices."""
        t = self.new()
        self.edge(b, t)
        for _ in range(3):
            self.spoke(t)
        return t

    def two_one_chain(self, b):
        """Give ``b`` a 2_1 neighbour: b - u - x - (degree 3)."""
        u, x = self.new(2)
        self.path(b, u, x)
        self.loop_end(x)
        return u, x

    def three_two(self, b):
        """Give ``b`` a 3_2 neighbour whose 2-neighbours are 2_0."""
        u = self.new()
        self.edge(b, u)
        return u, self.spoke(u), self.spoke(u)


def _degree_one(b: _Builder):
    cyc = b.new(5)
    b.path(*cyc, cyc[0])
    leaf = b.new()
    b.edge(cyc[0], leaf)
    return {"v": leaf}


def _three_two_poor_triple(b: _Builder):
    v = b.new()
    roles = {"v": v}
    for i in (1, 2, 3):
        roles[f"v{i}"] = b.three_two(v)[0]
    return roles


def _poor_beside_poor(b: _Builder):
    v = b.new()
    u = b.three_two(v)[0]
    b.spoke(v)
    b.heavy_end(v)
    return {"v": v, "v1": u}


def _three_two_beside_two_one(b: _Builder):
    v = b.new()
    u, x = b.two_one_chain(v)
    b.spoke(v)
    b.heavy_end(v)
    return {"v": v, "v1": u, "x1": x}


def _triangle_pendant(b: _Builder):
    v, v1, v2 = b.new(3)
    b.path(v, v1, v2, v)
    b.heavy_end(v)
    return {"v": v, "v1": v1, "v2": v2}


def _all_small_neighbors(b: _Builder):
    v = b.new()
    ws = b.new(3)
    b.path(*ws, ws[0])
    roles = {"v": v}
    for i, w in enumerate(ws, 1):
        u = b.new()
        b.path(v, u, w)
        roles[f"v{i}"] = u
    return roles


def _double_three_two(b: _Builder):
    v = b.new()
    v1, x1, y1 = b.three_two(v)
    v2, x2, y2 = b.three_two(v)
    v3 = b.heavy_end(v)
    return {"v": v, "v1": v1, "v2": v2, "v3": v3, "x1": x1, "y1": y1, "x2": x2, "y2": y2}


def _three_two_and_three_one_plus(b: _Builder):
    v = b.new()
    v1 = b.three_two(v)[0]
    v2 = b.new()
    b.edge(v, v2)
    x2, x2p = b.two_one_chain(v2)
    b.heavy_end(v2)
    v3 = b.heavy_end(v)
    return {"v": v, "v1": v1, "v2": v2, "v3": v3, "x2": x2, "x2'": x2p}


def _four_with_two_one_and_two_small(b: _Builder, variant: str = "2_0"):
    v = b.new()
    v1, x1 = b.two_one_chain(v)
    if variant == "2_0":
        v2, v3 = b.spoke(v), b.spoke(v)
    elif variant == "3_2":
        v2, v3 = b.three_two(v)[0], b.three_two(v)[0]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    v4 = b.new()
    b.edge(v, v4)
    b.heavy_end(v4)
    b.heavy_end(v4)
    return {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1}


def _four_with_two_two_ones(b: _Builder):
    v = b.new()
    v1, x1 = b.two_one_chain(v)
    v2, x2 = b.two_one_chain(v)
    v3 = b.spoke(v)
    v4 = b.heavy_end(v)
    return {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1, "x2": x2}


_GADGETS = {
    Kind.DEGREE_ONE: _degree_one,
    Kind.THREE_TWO_POOR_TRIPLE: _three_two_poor_triple,
    Kind.POOR_BESIDE_POOR: _poor_beside_poor,
    Kind.THREE_TWO_BESIDE_TWO_ONE: _three_two_beside_two_one,
    Kind.TRIANGLE_PENDANT: _triangle_pendant,
    Kind.ALL_SMALL_NEIGHBORS: _all_small_neighbors,
    Kind.DOUBLE_THREE_TWO: _double_three_two,
    Kind.THREE_TWO_AND_THREE_ONE_PLUS: _three_two_and_three_one_plus,
    Kind.FOUR_WITH_TWO_ONE_AND_TWO_SMALL: _four_with_two_one_and_two_small,
    Kind.FOUR_WITH_TWO_TWO_ONES: _four_with_two_two_ones,
}


def gen_gadget(kind, variant: str | None = None) -> Gadget:
    """Small eligible graph holding exactly one witness of ``kind``.

    ``roles`` names the witness vertices. FourWithTwoOneAndTwoSmall takes
    ``variant`` "2_0" (default) or "3_2" for the two proof branches.
    """
    kind = Kind(kind)
    b = _Builder()
    if variant is not None:
        if kind is not Kind.FOUR_WITH_TWO_ONE_AND_TWO_SMALL:
            raise ValueError(f"{kind} has no variants")
        roles = _four_with_two_one_and_two_small(b, variant)
    else:
        roles = _GADGETS[kind](b)
    return Gadget(kind, b.g, roles)


CASE_GADGETS = ("two_one", "three_two", "four_two_two_ones")


def gen_case_gadget(name: str) -> Gadget:
    """Graphs where one vertex realizes a tight case of the charge analysis.

    two_one: a 2_1-vertex next to a 3+-vertex. three_two: a 3_2-vertex with
    two 2_0-neighbours and a 4-vertex neighbour. four_two_two_ones: a
    4-vertex with two 2_1-neighbours and two non-poor 4-neighbours.
    """
    b = _Builder()
    if name == "three_two":
        v = b.new()
        b.spoke(v)
        b.spoke(v)
        b.heavy_end(v)
        return Gadget(name, b.g, {"v": v})
    if name in ("two_one", "four_two_two_ones"):
        v = b.new()
        v1, x1 = b.two_one_chain(v)
        v2, x2 = b.two_one_chain(v)
        v3, v4 = b.heavy_end(v), b.heavy_end(v)
        roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1, "x2": x2}
        if name == "two_one":
            roles = {"v": v1, "w": v}
        return Gadget(name, b.g, roles)
    raise ValueError(f"unknown case gadget {name!r}")
