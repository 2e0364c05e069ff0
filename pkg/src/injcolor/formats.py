"""Edge-list and coloring file formats.

Graph files::

    c comment
    p inj <n> <m>
    e <u> <v>        (m lines, 1-based vertex indices)

Coloring files hold one ``<u> <v> <color>`` line per edge, also 1-based.
Internally vertices are ``0..n-1``.
"""
from __future__ import annotations

import hashlib

from injcolor.conflict import Coloring
from injcolor.graph import Graph, edge_key


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {tok!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    g = None
    declared_m = 0
    header_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if g is not None:
                raise ParseError("second header", lineno)
            if len(tok) != 4 or tok[1] != "inj":
                raise ParseError(f"malformed header {line!r}, expected 'p inj <n> <m>'", lineno)
            n = _int(tok[2], lineno, "vertex count")
            declared_m = _int(tok[3], lineno, "edge count")
            if n < 0 or declared_m < 0:
                raise ParseError("negative count in header", lineno)
            g = Graph(range(n))
            header_line = lineno
        elif tok[0] == "e":
            if g is None:
                raise ParseError("edge before header", lineno)
            if len(tok) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            u, v = (_int(t, lineno, "vertex index") for t in tok[1:])
            for x in (u, v):
                if not 1 <= x <= g.order:
                    raise ParseError(f"vertex index {x} out of range 1..{g.order}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            if g.has_edge(u - 1, v - 1):
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            g.add_edge(u - 1, v - 1)
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if g is None:
        raise ParseError("missing 'p inj <n> <m>' header")
    if g.size != declared_m:
        raise ParseError(f"header declares {declared_m} edges, found {g.size}", header_line)
    return g


def emit_edge_list(g: Graph, comments=()) -> str:
    """Inverse of :func:`parse_edge_list` for graphs on ``0..n-1``."""
    verts = g.vertices()
    if verts != list(range(len(verts))):
        idx = {v: i for i, v in enumerate(verts)}
        g = g.relabel(idx)
    lines = [f"c {c}" for c in comments]
    lines.append(f"p inj {g.order} {g.size}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(emit_edge_list(g).encode()).hexdigest()[:16]


def parse_coloring(text: str, k: int | None = None) -> Coloring:
    """Read ``<u> <v> <color>`` lines; ``k`` defaults to the largest color."""
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        tok = line.split()
        if len(tok) != 3:
            raise ParseError(f"expected '<u> <v> <color>', got {line!r}", lineno)
        u, v, c = (_int(t, lineno, "field") for t in tok)
        if u < 1 or v < 1:
            raise ParseError("vertex indices are 1-based", lineno)
        e = edge_key(u - 1, v - 1)
        if e in colors:
            raise ParseError(f"edge {u} {v} listed twice", lineno)
        colors[e] = c
    if k is None:
        k = max(colors.values(), default=0)
    col = Coloring(max(k, 0))
    for e, c in colors.items():
        col[e] = c
    return col


def emit_coloring(col: Coloring) -> str:
    return "".join(f"{u + 1} {v + 1} {c}\n" for (u, v), c in col.items())
