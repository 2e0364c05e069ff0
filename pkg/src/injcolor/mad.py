"""Exact maximum average degree via densest subgraph and minimum cuts.

All values are :class:`fractions.Fraction`; nothing here touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from injcolor import kernels
from injcolor.graph import DEFAULT_DEGREE_CAP, Graph

THRESHOLD = Fraction(8, 3)
BRUTEFORCE_MAX_ORDER = 20


def induced_edge_count(g: Graph, subset) -> int:
    s = set(subset)
    return sum(1 for u, v in g.iter_edges() if u in s and v in s)


def average_degree(g: Graph, subset) -> Fraction:
    subset = set(subset)
    return Fraction(2 * induced_edge_count(g, subset), len(subset))


def _denser_than(g: Graph, verts: list, t: int, scale: int):
    """Vertex set with |E(S)|/|S| > t/scale, or None.

    Goldberg's network with every capacity multiplied by ``scale``.
    """
    n = len(verts)
    m = g.size
    idx = {v: i for i, v in enumerate(verts)}
    source, sink = n, n + 1
    tails, heads, caps = [], [], []
    for v in verts:
        i = idx[v]
        tails += [source, i]
        heads += [i, sink]
        caps += [m * scale, m * scale + 2 * t - g.degree(v) * scale]
    for u, v in g.iter_edges():
        tails += [idx[u], idx[v]]
        heads += [idx[v], idx[u]]
        caps += [scale, scale]
    value, side = kernels.max_flow(n + 2, source, sink, tails, heads, caps)
    if value >= m * n * scale:
        return None
    return [v for v in verts if side[idx[v]]]


def densest_subset(g: Graph) -> tuple[Fraction, frozenset]:
    """``(mad, witness)`` where the witness induces average degree ``mad``.

    Binary search over densities t/N with N = n^2 + 1; candidate densities
    with denominators <= n are more than 1/N apart, so once the bracket is
    one step wide its feasible end is the optimum.
    """
    verts = g.vertices()
    n = len(verts)
    if n == 0:
        raise ValueError("maximum average degree of the empty graph is undefined")
    if g.size == 0:
        return Fraction(0), frozenset(verts[:1])
    scale = n * n + 1
    best = frozenset(verts)
    best_density = Fraction(g.size, n)
    lo = best_density.numerator * scale // best_density.denominator
    hi = -(-g.max_degree * scale // 2)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        found = _denser_than(g, verts, mid, scale)
        if found is None:
            hi = mid
            continue
        d = Fraction(induced_edge_count(g, found), len(found))
        if d > best_density:
            best, best_density = frozenset(found), d
        lo = mid
    return 2 * best_density, best


def mad_exact(g: Graph) -> Fraction:
    return densest_subset(g)[0]


def mad_bruteforce(g: Graph) -> Fraction:
    """Exhaustive maximum over all nonempty vertex subsets (n <= 20)."""
    verts = g.vertices()
    n = len(verts)
    if n == 0:
        raise ValueError("maximum average degree of the empty graph is undefined")
    if n > BRUTEFORCE_MAX_ORDER:
        raise ValueError(f"brute force limited to {BRUTEFORCE_MAX_ORDER} vertices, got {n}")
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for u, v in g.iter_edges():
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    edges = [0] * (1 << n)
    best = Fraction(0)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        edges[s] = edges[rest] + (adj[low] & rest).bit_count()
        if edges[s] * best.denominator > best.numerator * s.bit_count():
            best = Fraction(edges[s], s.bit_count())
    return 2 * best


@dataclass(frozen=True)
class Eligibility:
    max_degree: int
    mad: Fraction
    witness: frozenset
    degree_cap: int = DEFAULT_DEGREE_CAP

    @property
    def eligible(self) -> bool:
        return self.max_degree <= self.degree_cap and self.mad < THRESHOLD

    def __bool__(self) -> bool:
        return self.eligible

    def explain(self) -> str:
        reasons = []
        if self.max_degree > self.degree_cap:
            reasons.append(f"max degree {self.max_degree} > {self.degree_cap}")
        if self.mad >= THRESHOLD:
            reasons.append(f"mad {self.mad} >= 8/3")
        return "; ".join(reasons) if reasons else "eligible"


def is_eligible(g: Graph, degree_cap: int = DEFAULT_DEGREE_CAP) -> Eligibility:
    if g.order == 0:
        return Eligibility(0, Fraction(0), frozenset(), degree_cap)
    value, witness = densest_subset(g)
    return Eligibility(g.max_degree, value, witness, degree_cap)
