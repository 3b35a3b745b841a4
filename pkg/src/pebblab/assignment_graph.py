"""State graphs of the pebbling process.

The state graph of (graph, assignment) has one vertex per distinct pebble
distribution reachable by pebbling moves and one labeled edge per legal move
between recorded states.  Every move drops the pebble total by exactly one,
so the result is a graded DAG with a single source (the initial assignment)
and a bipartite undirected shadow.

State identity is the exact pebble distribution, never the move history:
independent moves applied in either order reach one state.
"""

from __future__ import annotations

from .errors import StateBudgetExceededError
from .graphs import OrientedGraph
from .pebbling import Assignment

DEFAULT_STATE_BUDGET = 10**6


class AssignmentGraph:
    """Immutable state graph; state 0 is always the initial assignment."""

    __slots__ = ("graph", "states", "edges")

    def __init__(
        self,
        graph: OrientedGraph,
        states: tuple[tuple[int, ...], ...],
        edges: tuple[tuple[int, int, int], ...],
    ):
        # edges are (from_state, to_state, index into graph.edges)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "edges", edges)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("AssignmentGraph is immutable")

    def __repr__(self) -> str:
        return f"AssignmentGraph({len(self.states)} states, {len(self.edges)} edges)"

    @property
    def root(self) -> int:
        return 0

    def assignment(self, state_id: int) -> Assignment:
        return Assignment(self.graph, self.states[state_id])

    def state_label(self, state_id: int) -> str:
        """Pebble vector in vertex order, e.g. ``"2,1,0"``."""
        return ",".join(map(str, self.states[state_id]))

    def move_label(self, edge_index: int) -> tuple[str, str]:
        return self.graph.edges[edge_index]

    def labeled_edges(self) -> tuple[tuple[int, int, tuple[str, str]], ...]:
        return tuple((f, t, self.graph.edges[e]) for f, t, e in self.edges)

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.states]
        for f, t, _ in self.edges:
            out[f].append(t)
        return out

    def traversal_counts(self) -> dict[tuple[str, str], int]:
        """How many state transitions each edge of the base graph labels."""
        counts = dict.fromkeys(self.graph.edges, 0)
        for _, _, e in self.edges:
            counts[self.graph.edges[e]] += 1
        return counts

    def is_fully_traversable(self) -> bool:
        """True iff the base graph has an edge and every edge labels at
        least one transition."""
        if not self.graph.edges:
            return False
        return all(c >= 1 for c in self.traversal_counts().values())

    def as_oriented_graph(self) -> OrientedGraph:
        """Forget labels and pebble contents; state ids become names."""
        names = [str(i) for i in range(len(self.states))]
        return OrientedGraph(names, ((str(f), str(t)) for f, t, _ in self.edges))

    def to_dot(self) -> str:
        """Byte-stable DOT text: nodes in state order, edges sorted by
        (from, to, label)."""
        lines = ["digraph assignment_graph {"]
        for i in range(len(self.states)):
            lines.append(f'  s{i} [label="{self.state_label(i)}"];')
        rows = sorted((f, t, f"{u}->{w}") for f, t, (u, w) in self.labeled_edges())
        for f, t, label in rows:
            lines.append(f'  s{f} -> s{t} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.graph.vertices),
            "graph_edges": [list(e) for e in self.graph.edges],
            "root": 0,
            "states": [list(s) for s in self.states],
            "edges": [[f, t, list(self.graph.edges[e])] for f, t, e in self.edges],
        }


def build(
    graph: OrientedGraph,
    start: Assignment,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> AssignmentGraph:
    """Breadth-first closure of ``start`` under pebbling moves.

    States are deduplicated by exact pebble distribution; moves are tried in
    the graph's edge order, so state numbering (discovery order) and the
    edge list are deterministic.  Raises StateBudgetExceededError instead of
    returning a truncated graph.
    """
    if start.graph != graph:
        raise ValueError("assignment is bound to a different graph")
    if state_budget < 1:
        raise ValueError("state budget must be at least 1")

    index = graph.index
    edge_pairs = [(index(u), index(w)) for u, w in graph.edges]
    root = start.counts
    ids: dict[tuple[int, ...], int] = {root: 0}
    states: list[tuple[int, ...]] = [root]
    edges: list[tuple[int, int, int]] = []

    i = 0
    while i < len(states):
        counts = states[i]
        for ei, (f, t) in enumerate(edge_pairs):
            if counts[f] >= 2:
                child = list(counts)
                child[f] -= 2
                child[t] += 1
                key = tuple(child)
                sid = ids.get(key)
                if sid is None:
                    if len(states) >= state_budget:
                        raise StateBudgetExceededError(state_budget)
                    sid = len(states)
                    ids[key] = sid
                    states.append(key)
                edges.append((i, sid, ei))
        i += 1
    return AssignmentGraph(graph, tuple(states), tuple(edges))


def traversal_counts(ag: AssignmentGraph) -> dict[tuple[str, str], int]:
    return ag.traversal_counts()


def is_fully_traversable(
    graph: OrientedGraph,
    start: Assignment,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> bool:
    return build(graph, start, state_budget).is_fully_traversable()


def find_downward_4_cycle(g: OrientedGraph) -> tuple[str, str, str, str] | None:
    """First (A, B, C, D) with edges A->B, A->C, B->D, C->D and B != C,
    scanning vertices in declaration order; ``None`` if no such subgraph."""
    for a in g.vertices:
        children = g.out_neighbors(a)
        for i, b in enumerate(children):
            b_out = set(g.out_neighbors(b))
            for c in children[i + 1 :]:
                for d in g.out_neighbors(c):
                    if d in b_out:
                        return (a, b, c, d)
    return None
