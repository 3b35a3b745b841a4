"""The line-based text format for graphs and assignments.

    # comment
    v <name> [<pebbles>]
    e <from> <to>

``#`` starts a comment, ``v`` declares a vertex in order (with an optional
pebble count, absent meaning zero), ``e`` declares an oriented edge.  Parse
errors carry the offending line number.  Writers emit vertices first, then
edges, in declaration order; assignment writers always emit explicit counts.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import OrientedGraph
from .pebbling import Assignment


def parse_graph_text(text: str) -> tuple[OrientedGraph, Assignment]:
    """Parse the text format into a graph plus assignment (counts default 0)."""
    names: list[str] = []
    counts: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    declared: set[str] = set()
    edge_pairs: set[tuple[str, str]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) not in (2, 3):
                raise ParseError(lineno, f"vertex line needs a name and optional count: {raw!r}")
            name = parts[1]
            if name in declared:
                raise ParseError(lineno, f"duplicate vertex {name!r}")
            declared.add(name)
            names.append(name)
            if len(parts) == 3:
                try:
                    count = int(parts[2])
                except ValueError:
                    raise ParseError(lineno, f"pebble count {parts[2]!r} is not an integer") from None
                if count < 0:
                    raise ParseError(lineno, f"pebble count must be non-negative, got {count}")
                counts[name] = count
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(lineno, f"edge line needs two endpoints: {raw!r}")
            u, w = parts[1], parts[2]
            if u not in declared:
                raise ParseError(lineno, f"edge endpoint {u!r} is not a declared vertex")
            if w not in declared:
                raise ParseError(lineno, f"edge endpoint {w!r} is not a declared vertex")
            if u == w:
                raise ParseError(lineno, f"self-loop on vertex {u!r}")
            if (w, u) in edge_pairs:
                raise ParseError(lineno, f"edge {u!r} -> {w!r} opposes an earlier edge")
            edge_pairs.add((u, w))
            edges.append((u, w))
        else:
            raise ParseError(lineno, f"unknown directive {parts[0]!r}")

    graph = OrientedGraph(names, dict.fromkeys(edges))
    return graph, Assignment(graph, counts)


def format_graph(g: OrientedGraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"


def format_assignment(a: Assignment) -> str:
    g = a.graph
    lines = [f"v {v} {a[v]}" for v in g.vertices]
    lines += [f"e {u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"
