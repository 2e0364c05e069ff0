"""Brute-force references, written without touching the package internals."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import networkx as nx


def to_nx(g) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices())
    out.add_edges_from(g.edges())
    return out


def sees_line_graph(g) -> set:
    """Pairs of edges at line-graph distance 2, or adjacent inside a triangle."""
    G = to_nx(g)
    L = nx.line_graph(G)
    norm = {e: tuple(sorted(e)) for e in L.nodes}
    pairs = set()
    for e in L.nodes:
        dist = nx.single_source_shortest_path_length(L, e, cutoff=2)
        for f, d in dist.items():
            a, b = norm[e], norm[f]
            if a >= b:
                continue
            if d == 2:
                pairs.add((a, b))
            elif d == 1:
                (x,) = set(a) & set(b)
                p, q = (set(a) | set(b)) - {x}
                if G.has_edge(p, q):
                    pairs.add((a, b))
    return pairs


def chi_enumeration(g, max_k: int | None = None) -> int:
    """Smallest k such that some assignment in k^m is injective, by full enumeration."""
    edges = [tuple(sorted(e)) for e in g.edges()]
    m = len(edges)
    if m == 0:
        return 0
    idx = {e: i for i, e in enumerate(edges)}
    pairs = [(idx[a], idx[b]) for a, b in sees_line_graph(g)]
    for k in range(1, (max_k or m) + 1):
        for assign in product(range(k), repeat=m):
            if all(assign[i] != assign[j] for i, j in pairs):
                return k
    raise AssertionError("no coloring found")


def mad_subsets(g) -> Fraction:
    """max over nonempty vertex subsets of 2|E(S)|/|S|."""
    verts = g.vertices()
    edges = g.edges()
    best = Fraction(0)
    for r in range(1, len(verts) + 1):
        for sub in combinations(verts, r):
            s = set(sub)
            e = sum(1 for u, v in edges if u in s and v in s)
            best = max(best, Fraction(2 * e, r))
    return best
