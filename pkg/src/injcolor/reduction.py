"""Reducible configurations and the delete / recurse / extend coloring loop.

Every detector reads vertex classes off the core graph ``h``; only the
degree-at-most-one check and the ``d_G(v4) <= 3`` test of the
FourWithTwoOneAndTwoSmall kind look at ``g`` itself. In the coloring loop
pendant vertices are always removed first, so ``h == g`` whenever the other
kinds are consulted.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from itertools import combinations

from injcolor import kernels
from injcolor.conflict import Coloring, ConflictGraph, build_conflict_graph
from injcolor.graph import Graph, VertexClass, classify, derive_core, edge_key
from injcolor.mad import is_eligible

log = logging.getLogger(__name__)

COLORS = 7


class Kind(str, enum.Enum):
    DEGREE_ONE = "DegreeOne"
    THREE_TWO_POOR_TRIPLE = "ThreeTwoPoorTriple"
    POOR_BESIDE_POOR = "PoorBesidePoor"
    THREE_TWO_BESIDE_TWO_ONE = "ThreeTwoBesideTwoOne"
    TRIANGLE_PENDANT = "TrianglePendant"
    ALL_SMALL_NEIGHBORS = "AllSmallNeighbors"
    DOUBLE_THREE_TWO = "DoubleThreeTwo"
    THREE_TWO_AND_THREE_ONE_PLUS = "ThreeTwoAndThreeOnePlus"
    FOUR_WITH_TWO_ONE_AND_TWO_SMALL = "FourWithTwoOneAndTwoSmall"
    FOUR_WITH_TWO_TWO_ONES = "FourWithTwoTwoOnes"

    def __str__(self) -> str:
        return self.value

    @property
    def generic(self) -> bool:
        """True for kinds whose extension relies on the generic search only."""
        return self in _GENERIC


PRIORITY = list(Kind)
_GENERIC = {Kind.DEGREE_ONE, Kind.THREE_TWO_POOR_TRIPLE, Kind.POOR_BESIDE_POOR, Kind.THREE_TWO_BESIDE_TWO_ONE}


class ProofContractViolation(RuntimeError):
    """A step that must succeed did not: no configuration, or no extension."""


class NotEligible(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    roles: dict
    deletion: frozenset
    hints: frozenset = field(default_factory=frozenset)
    branch: str = ""

    @property
    def anchor(self):
        return self.roles["v"]

    def describe(self) -> str:
        roles = ", ".join(f"{k}={v}" for k, v in self.roles.items())
        extra = f" [{self.branch}]" if self.branch else ""
        return f"{self.kind}{extra}({roles}) delete {sorted(self.deletion)}"


class _Scan:
    """Classes and degrees of one (g, h) pair, computed once per scan."""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.cls: dict[object, VertexClass] = {v: classify(h, v) for v in h.vertices()}

    def deg(self, v) -> int:
        return self.cls[v].degree

    def nbrs(self, v) -> list:
        return sorted(self.h.neighbors(v))

    def two_nbrs(self, v) -> list:
        return [w for w in self.nbrs(v) if self.deg(w) == 2]

    def make(self, kind, roles, deletion, erase=(), branch="") -> Configuration:
        deletion = frozenset(deletion)
        return Configuration(kind, roles, deletion, frozenset(self._hints(deletion, erase)), branch)

    def _hints(self, deletion, erase):
        """Edges the proof erases, plus light edges within two steps of the missing ones."""
        g = self.g
        missing = {edge_key(v, w) for v in deletion for w in g.neighbors(v)}
        hints = {edge_key(*e) for e in erase if g.has_edge(*e)}
        for e in line_ball(g, missing, 2):
            u, w = e
            if g.degree(u) == 2 and g.degree(w) == 2:
                hints.add(e)
        return hints - missing


def line_ball(g: Graph, edges, radius: int) -> set:
    """Edges within line-graph distance ``radius`` of ``edges``."""
    ball = set(edges)
    frontier = set(edges)
    for _ in range(radius):
        nxt = set()
        for u, v in frontier:
            for x in (u, v):
                for y in g.neighbors(x):
                    f = edge_key(x, y)
                    if f not in ball:
                        nxt.add(f)
        ball |= nxt
        frontier = nxt
    return ball


# detectors: each yields the configurations anchored at ``v``


def _degree_one(s: _Scan, v):
    if v in s.g and s.g.degree(v) <= 1:
        yield s.make(Kind.DEGREE_ONE, {"v": v}, {v})


def _three_two_poor_triple(s: _Scan, v):
    if s.deg(v) != 3:
        return
    nb = s.nbrs(v)
    if all(s.cls[u].is_poor for u in nb):
        yield s.make(Kind.THREE_TWO_POOR_TRIPLE, {"v": v, "v1": nb[0], "v2": nb[1], "v3": nb[2]}, {nb[0]})


def _poor_beside_poor(s: _Scan, v):
    c = s.cls[v]
    if c.degree != 3 or c.twos not in (1, 2):
        return
    for u in s.nbrs(v):
        if s.cls[u].is_poor:
            yield s.make(Kind.POOR_BESIDE_POOR, {"v": v, "v1": u}, {u})


def _three_two_beside_two_one(s: _Scan, v):
    if not s.cls[v].is_(3, 2):
        return
    for u in s.nbrs(v):
        if s.cls[u].is_(2, 1):
            (x,) = s.two_nbrs(u)
            yield s.make(Kind.THREE_TWO_BESIDE_TWO_ONE, {"v": v, "v1": u, "x1": x}, {u})


def _triangle_pendant(s: _Scan, v):
    nb = s.nbrs(v)
    for a, b in combinations(nb, 2):
        if s.deg(a) == 2 and s.deg(b) == 2 and s.h.has_edge(a, b):
            rest = [u for u in nb if u not in (a, b)]
            if s.deg(v) != 4 or any(s.deg(u) < 3 for u in rest):
                yield s.make(Kind.TRIANGLE_PENDANT, {"v": v, "v1": a, "v2": b}, {a})


def _all_small_neighbors(s: _Scan, v):
    nb = s.nbrs(v)
    if nb and all(s.deg(u) <= 2 for u in nb):
        roles = {"v": v}
        roles.update({f"v{i}": u for i, u in enumerate(nb, 1)})
        yield s.make(Kind.ALL_SMALL_NEIGHBORS, roles, {v})


def _double_three_two(s: _Scan, v):
    if s.deg(v) != 3:
        return
    nb = s.nbrs(v)
    for v1, v2 in combinations([u for u in nb if s.cls[u].is_(3, 2)], 2):
        (v3,) = [u for u in nb if u not in (v1, v2)]
        x1, y1 = s.two_nbrs(v1)
        x2, y2 = s.two_nbrs(v2)
        roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "x1": x1, "y1": y1, "x2": x2, "y2": y2}
        yield s.make(Kind.DOUBLE_THREE_TWO, roles, {v1}, erase=[(v2, x2), (v2, y2)])


def _three_two_and_three_one_plus(s: _Scan, v):
    if s.deg(v) != 3:
        return
    nb = s.nbrs(v)
    for v1 in nb:
        if not s.cls[v1].is_(3, 2):
            continue
        for v2 in nb:
            if not s.cls[v2].one_plus:
                continue
            (v3,) = [u for u in nb if u not in (v1, v2)]
            (x2,) = s.two_nbrs(v2)
            (x2p,) = s.two_nbrs(x2)
            roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "x2": x2, "x2'": x2p}
            yield s.make(Kind.THREE_TWO_AND_THREE_ONE_PLUS, roles, {x2})


def _small(c: VertexClass) -> bool:
    return c.is_(2, 0) or c.is_(3, 2)


def _four_with_two_one_and_two_small(s: _Scan, v):
    if s.deg(v) != 4:
        return
    nb = s.nbrs(v)
    two_zero_branch, three_two_branch = [], []
    for v1 in nb:
        if not s.cls[v1].is_(2, 1):
            continue
        (x1,) = s.two_nbrs(v1)
        others = [u for u in nb if u != v1]
        for v2, v3 in combinations(others, 2):
            if not (_small(s.cls[v2]) and _small(s.cls[v3])):
                continue
            (v4,) = [u for u in others if u not in (v2, v3)]
            if s.g.degree(v4) > 3:
                continue
            if s.cls[v2].is_(2, 0) or s.cls[v3].is_(2, 0):
                if not s.cls[v2].is_(2, 0):
                    v2, v3 = v3, v2
                roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1}
                two_zero_branch.append(s.make(Kind.FOUR_WITH_TWO_ONE_AND_TWO_SMALL, roles, {v1}, branch="2_0"))
            else:
                roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1}
                three_two_branch.append(
                    s.make(Kind.FOUR_WITH_TWO_ONE_AND_TWO_SMALL, roles, {v2}, erase=[(v, v3), (v1, x1)], branch="3_2")
                )
    yield from two_zero_branch
    yield from three_two_branch


def _four_with_two_two_ones(s: _Scan, v):
    if s.deg(v) != 4:
        return
    nb = s.nbrs(v)
    for v1, v2 in combinations([u for u in nb if s.cls[u].is_(2, 1)], 2):
        (x1,) = s.two_nbrs(v1)
        (x2,) = s.two_nbrs(v2)
        others = [u for u in nb if u not in (v1, v2)]
        for v3 in others:
            if s.deg(v3) == 2 or s.cls[v3].is_poor:
                (v4,) = [u for u in others if u != v3]
                roles = {"v": v, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "x1": x1, "x2": x2}
                yield s.make(Kind.FOUR_WITH_TWO_TWO_ONES, roles, {v1}, erase=[(v2, x2)])


DETECTORS = {
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


def iter_configurations(g: Graph, h: Graph | None = None, kinds=None, anchors=None):
    """Configurations in priority order: by kind, then anchor id, then roles.

    ``h`` defaults to the core graph of ``g``. ``anchors`` restricts the
    anchor vertex ``v``.
    """
    if h is None:
        h = derive_core(g).graph
    s = _Scan(g, h)
    kinds = PRIORITY if kinds is None else [k for k in PRIORITY if k in set(kinds)]
    for kind in kinds:
        pool = g.vertices() if kind is Kind.DEGREE_ONE else h.vertices()
        if anchors is not None:
            pool = [v for v in pool if v in anchors]
        detect = DETECTORS[kind]
        for v in pool:
            yield from detect(s, v)


def find_configurations(g: Graph, h: Graph | None = None, kinds=None, anchors=None) -> list[Configuration]:
    return list(iter_configurations(g, h, kinds, anchors))


def find_reducible(g: Graph, h: Graph | None = None) -> Configuration | None:
    if h is None:
        # cheap pass first: any pendant or isolated vertex wins outright
        for v in g.vertices():
            if g.degree(v) <= 1:
                return next(_degree_one(_Scan(g, Graph()), v))
    return next(iter_configurations(g, h), None)


# extension


def _solve(g: Graph, cg: ConflictGraph, partial: Coloring, free: set, k: int) -> Coloring | None:
    order = sorted(free)
    local = {e: i for i, e in enumerate(order)}
    n = len(order)
    indptr, indices, degree, tier = [0], [], [], []
    forbidden = [0] * (n * k)
    for i, e in enumerate(order):
        node = cg.node(e)
        for j in cg.adj[node]:
            f = cg.edges[j]
            if f in local:
                indices.append(local[f])
            else:
                c = partial.get(f)
                if c is not None:
                    forbidden[i * k + c - 1] = 1
        indptr.append(len(indices))
        degree.append(len(cg.adj[node]))
        u, v = e
        tier.append(1 if g.degree(u) == 2 and g.degree(v) == 2 else 0)
    status, colors, _ = kernels.color_search(indptr, indices, degree, tier, forbidden, k, False, -1)
    if status != kernels.FOUND:
        return None
    out = Coloring(k, {e: c for e, c in partial.items() if e not in free})
    for e, c in zip(order, colors):
        out[e] = c + 1
    return out


def extend_with_level(g: Graph, cg: ConflictGraph, partial: Coloring, missing, recolor_hints, k: int = COLORS):
    """Extend ``partial`` to all of ``g``; returns ``(coloring, level)`` or ``(None, None)``.

    Level 0 recolors nothing; level 1 may also recolor ``recolor_hints``;
    level 2 may recolor every edge within line-graph distance 2 of the
    missing edges. Each level is an exhaustive search.
    """
    missing = {edge_key(*e) for e in missing} | {e for e in g.iter_edges() if e not in partial}
    if not missing:
        return partial.restrict(g.iter_edges()), 0
    hints = {edge_key(*e) for e in recolor_hints if g.has_edge(*e)}
    levels = [missing, missing | hints]
    levels.append(levels[1] | line_ball(g, missing, 2))
    tried = None
    for level, free in enumerate(levels):
        if free == tried:
            continue
        tried = free
        out = _solve(g, cg, partial, free, k)
        if out is not None:
            return out, level
    return None, None


def extend_coloring(g: Graph, cg: ConflictGraph, partial: Coloring, missing, recolor_hints, k: int = COLORS) -> Coloring | None:
    return extend_with_level(g, cg, partial, missing, recolor_hints, k)[0]


# the constructive loop


@dataclass
class Step:
    config: Configuration
    level: int | None = None


@dataclass
class ConstructiveResult:
    coloring: Coloring
    steps: list = field(default_factory=list)

    @property
    def num_colors(self) -> int:
        return self.coloring.num_colors

    def level_counts(self) -> dict:
        out: dict = {}
        for st in self.steps:
            out[st.level] = out.get(st.level, 0) + 1
        return out

    def escalations(self, kinds=None) -> list:
        """Steps that needed the level-2 fallback, optionally filtered by kind."""
        return [st for st in self.steps if st.level == 2 and (kinds is None or st.config.kind in kinds)]


def _delete(work: Graph, cfg: Configuration):
    removed = [(v, sorted(work.neighbors(v))) for v in sorted(cfg.deletion)]
    missing = set()
    for v in sorted(cfg.deletion):
        missing.update(work.remove_vertex(v))
    return removed, missing


def _restore(work: Graph, removed) -> None:
    for v, _ in removed:
        work.add_vertex(v)
    for v, nbrs in removed:
        for w in nbrs:
            if not work.has_edge(v, w):
                work.add_edge(v, w)


def _extend_step(work: Graph, col: Coloring, step: Step, missing, k: int) -> Coloring:
    cg = build_conflict_graph(work)
    out, level = extend_with_level(work, cg, col, missing, step.config.hints, k)
    if out is None:
        raise ProofContractViolation(f"could not extend after {step.config.describe()}")
    if level == 2 and not step.config.kind.generic:
        log.warning("level-2 fallback needed for %s", step.config.describe())
    step.level = level
    return out


def run_constructive(g: Graph, k: int = COLORS, check_eligibility: bool = True) -> ConstructiveResult:
    """Color ``g`` with at most ``k`` colors by repeated reduction.

    Requires max degree <= 4 and mad < 8/3 unless ``check_eligibility`` is
    off, in which case a missing configuration raises
    :class:`ProofContractViolation`.
    """
    if check_eligibility:
        elig = is_eligible(g)
        if not elig:
            raise NotEligible(elig.explain())
    work = g.copy()
    stack = []
    while work.size:
        cfg = find_reducible(work)
        if cfg is None:
            raise ProofContractViolation(f"no reducible configuration in a graph with {work.size} edges")
        removed, missing = _delete(work, cfg)
        stack.append((Step(cfg), removed, missing))
    col = Coloring(k)
    steps = []
    while stack:
        step, removed, missing = stack.pop()
        _restore(work, removed)
        if missing:
            col = _extend_step(work, col, step, missing, k)
        steps.append(step)
    return ConstructiveResult(col, steps)


def color_constructive(g: Graph, k: int = COLORS) -> Coloring:
    return run_constructive(g, k).coloring


def reduce_with(g: Graph, cfg: Configuration, k: int = COLORS) -> ConstructiveResult:
    """One explicit step: delete ``cfg``'s vertices, color the rest, extend."""
    work = g.copy()
    removed, missing = _delete(work, cfg)
    inner = run_constructive(work, k, check_eligibility=False)
    _restore(work, removed)
    step = Step(cfg)
    col = _extend_step(work, inner.coloring, step, missing, k) if missing else inner.coloring
    return ConstructiveResult(col, inner.steps + [step])
