"""Exact injective chromatic index: DSATUR branch and bound on the conflict graph."""
from __future__ import annotations

import time
from dataclasses import dataclass

from injcolor import kernels
from injcolor.conflict import Coloring, ConflictGraph, build_conflict_graph
from injcolor.graph import Graph

DEFAULT_BUDGET = 10**7


class BudgetExhausted(RuntimeError):
    """The search hit its node limit before reaching an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


def _as_coloring(cg: ConflictGraph, colors, k: int) -> Coloring:
    return Coloring(k, {e: c + 1 for e, c in zip(cg.edges, colors)})


def _search(cg: ConflictGraph, k: int, budget: int):
    indptr, indices = cg.csr()
    n = len(cg)
    degree = [len(a) for a in cg.adj]
    return kernels.color_search(indptr, indices, degree, [0] * n, [0] * (n * k), k, True, budget)


def color_with_k(cg: ConflictGraph, k: int, budget: int | None = DEFAULT_BUDGET) -> Coloring | None:
    """A valid coloring with at most ``k`` colors, or None if none exists.

    Raises :class:`BudgetExhausted` if the search is cut off.
    """
    if k < 1:
        raise ValueError("k must be positive")
    status, colors, nodes = _search(cg, k, -1 if budget is None else budget)
    if status == kernels.BUDGET:
        raise BudgetExhausted(nodes)
    if status == kernels.NONE:
        return None
    return _as_coloring(cg, colors, k)


def greedy_clique(cg: ConflictGraph) -> list[int]:
    """Clique grown greedily from every start node; the largest one found."""
    best: list[int] = []
    adj = [set(a) for a in cg.adj]
    for start in sorted(range(len(cg)), key=lambda i: (-len(adj[i]), i)):
        if len(adj[start]) + 1 <= len(best):
            break
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda i: (len(adj[i] & cand), -i))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def greedy_dsatur(cg: ConflictGraph) -> list[int]:
    """One DSATUR pass without backtracking; 0-based colors per node."""
    n = len(cg)
    color = [-1] * n
    seen = [set() for _ in range(n)]
    for _ in range(n):
        u = max(
            (i for i in range(n) if color[i] < 0),
            key=lambda i: (len(seen[i]), len(cg.adj[i]), -i),
        )
        c = 0
        while c in seen[u]:
            c += 1
        color[u] = c
        for w in cg.adj[u]:
            seen[w].add(c)
    return color


@dataclass
class ExactResult:
    lower: int
    upper: int
    witness: Coloring
    nodes: int
    seconds: float

    @property
    def complete(self) -> bool:
        return self.lower == self.upper

    @property
    def chi(self) -> int | None:
        return self.upper if self.complete else None


def chi_injective_exact(g: Graph, budget: int | None = DEFAULT_BUDGET, cg: ConflictGraph | None = None) -> ExactResult:
    """Minimum number of colors of an injective edge-coloring, with a witness.

    If the budget runs out the result brackets the answer in
    ``[lower, upper]`` and ``chi`` is None.
    """
    start = time.perf_counter()
    cg = cg or build_conflict_graph(g)
    if len(cg) == 0:
        return ExactResult(0, 0, Coloring(0), 0, time.perf_counter() - start)
    lower = len(greedy_clique(cg))
    colors = greedy_dsatur(cg)
    upper = max(colors) + 1
    witness = _as_coloring(cg, colors, upper)
    nodes = 0
    remaining = -1 if budget is None else budget
    k = upper - 1
    while k >= lower:
        status, found, used = _search(cg, k, remaining)
        nodes += used
        if remaining >= 0:
            remaining = max(remaining - used, 0)
        if status == kernels.BUDGET:
            break
        if status == kernels.NONE:
            lower = k + 1
            break
        upper = max(found) + 1
        witness = _as_coloring(cg, found, upper)
        k = upper - 1
    return ExactResult(lower, upper, witness, nodes, time.perf_counter() - start)
