"""Charges on the core graph, rules R1/R2, and the deficiency audit."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from injcolor.graph import CoreGraph, Graph, classify_all
from injcolor.mad import THRESHOLD, mad_exact
from injcolor.reduction import Configuration, find_reducible, iter_configurations

TWO_THIRDS = Fraction(2, 3)
ONE_THIRD = Fraction(1, 3)
ONE_SIXTH = Fraction(1, 6)
EXPLAIN_RADIUS = 2


def _graph(h) -> Graph:
    return h.graph if isinstance(h, CoreGraph) else h


def charges_initial(h) -> dict:
    g = _graph(h)
    return {v: Fraction(g.degree(v)) for v in g.vertices()}


@dataclass(frozen=True)
class Transfer:
    giver: object
    receiver: object
    amount: Fraction
    rule: str


@dataclass
class ChargeReport:
    initial: dict
    final: dict
    transfers: list
    classes: dict
    edges: int
    adjacency: dict

    @property
    def deficient(self) -> list:
        return [v for v, c in sorted(self.final.items()) if c < THRESHOLD]

    @property
    def conserved(self) -> bool:
        return sum(self.final.values()) == sum(self.initial.values()) == 2 * self.edges

    @property
    def min_final(self) -> Fraction | None:
        return min(self.final.values(), default=None)

    def sent(self, v) -> Fraction:
        return sum((t.amount for t in self.transfers if t.giver == v), Fraction(0))

    def received(self, v) -> Fraction:
        return sum((t.amount for t in self.transfers if t.receiver == v), Fraction(0))

    def s_value(self, v) -> int:
        """Number of 2_0 and 3_2 neighbours of ``v``."""
        return sum(1 for w in self.adjacency[v] if self.classes[w].label in ("2_0", "3_2"))


def apply_discharging(h) -> ChargeReport:
    """Charges after R1 and R2, all transfers computed from the initial classes.

    R1: a 3+-vertex gives 2/3 to each adjacent 2_1-vertex and 1/3 to each
    adjacent 2_0-vertex. R2: a non-poor 3-vertex or a 4-vertex gives 1/3 to
    each adjacent 3_2-vertex and 1/6 to each adjacent 3_1+-vertex.
    Degrees above 4 are treated like 4.
    """
    g = _graph(h)
    cls = classify_all(g)
    initial = charges_initial(g)
    transfers = []
    for v in g.vertices():
        cv = cls[v]
        r2 = cv.degree >= 4 or (cv.degree == 3 and not cv.is_poor)
        for w in sorted(g.neighbors(v)):
            cw = cls[w]
            if cv.degree >= 3:
                if cw.is_(2, 1):
                    transfers.append(Transfer(v, w, TWO_THIRDS, "R1"))
                elif cw.is_(2, 0):
                    transfers.append(Transfer(v, w, ONE_THIRD, "R1"))
            if r2:
                if cw.is_(3, 2):
                    transfers.append(Transfer(v, w, ONE_THIRD, "R2"))
                elif cw.one_plus:
                    transfers.append(Transfer(v, w, ONE_SIXTH, "R2"))
    final = dict(initial)
    for t in transfers:
        final[t.giver] -= t.amount
        final[t.receiver] += t.amount
    return ChargeReport(initial, final, transfers, cls, g.size, {v: sorted(g.neighbors(v)) for v in g.vertices()})


def ball(g: Graph, v, radius: int) -> set:
    seen = {v}
    frontier = {v}
    for _ in range(radius):
        frontier = {w for u in frontier for w in g.neighbors(u)} - seen
        seen |= frontier
    return seen


@dataclass
class AuditReport:
    charges: ChargeReport
    explanations: dict = field(default_factory=dict)
    completeness_violation: bool = False

    @property
    def deficient(self) -> list:
        return self.charges.deficient

    @property
    def unexplained(self) -> list:
        return [v for v, cfg in sorted(self.explanations.items()) if cfg is None]

    @property
    def bug(self) -> bool:
        return bool(self.unexplained) or not self.charges.conserved or self.completeness_violation


def explain(g: Graph, v, radius: int = EXPLAIN_RADIUS) -> Configuration | None:
    """First configuration (priority order) anchored within ``radius`` of ``v``.

    ``g`` is used as its own core graph.
    """
    return next(iter_configurations(g, g, anchors=ball(g, v, radius)), None)


def audit_charges(h, check_completeness: bool = True) -> AuditReport:
    """Pair every vertex with final charge below 8/3 with a nearby configuration.

    A deficiency with no configuration within radius 2 is a detector-coverage
    bug. With ``check_completeness`` a nonempty graph with mad < 8/3 and no
    configuration at all is flagged too.
    """
    g = _graph(h)
    if g.max_degree > 4:
        raise ValueError(f"audit needs max degree <= 4, got {g.max_degree}")
    report = AuditReport(apply_discharging(g))
    for v in report.charges.deficient:
        report.explanations[v] = explain(g, v)
    if check_completeness and g.size and find_reducible(g, g) is None:
        report.completeness_violation = mad_exact(g) < THRESHOLD
    return report
