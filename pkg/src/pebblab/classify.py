"""Desk-scale exhaustive scans over assignment spaces.

Scans fix every valence-zero vertex at zero pebbles and report it as "any":
pebbles on a valence-zero vertex never enable or change a move, so each
finding stands for the whole infinite family over sink counts.  Instance
spaces are partitioned into independent shards (decoded from a running
index, so any shard count yields the same instances) and results merge
deterministically by that index.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .assignment_graph import build
from .errors import StateBudgetExceededError
from .generate import enumerate_oriented_graphs
from .graphs import OrientedGraph, downward_cycle
from .iso import IsoMapping, automorphisms, canonical_labeling, digraph_isomorphic
from .pebbling import Assignment
from .textio import format_graph


def state_graph_isomorphism(g: OrientedGraph, a: Assignment) -> IsoMapping | None:
    """Witness that ``g`` is isomorphic to its own state graph under ``a``,
    or ``None`` (a definite no).

    Uses sound early exits: the state graph has exactly one in-degree-zero
    vertex (its root) whose out-degree is the number of initially legal
    moves, and more than |V(g)| states already rules the isomorphism out,
    so the builder runs with |V(g)| as its cap.
    """
    n = len(g.vertices)
    if n == 0:
        return None
    sources = g.sources()
    if len(sources) != 1:
        return None
    if len(a.legal_moves()) != g.valence(sources[0]):
        return None
    try:
        ag = build(g, a, state_budget=n)
    except StateBudgetExceededError:
        return None
    if len(ag.states) != n or len(ag.edges) != len(g.edges):
        return None
    return digraph_isomorphic(g, ag.as_oriented_graph())


def iter_count_vectors(
    length: int, cap: int, shard: int = 0, shards: int = 1
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (index, vector) over all count vectors in [0, cap]^length,
    striding by ``shards`` starting at ``shard``."""
    base = cap + 1
    total = base**length
    for idx in range(shard, total, shards):
        x = idx
        vec = []
        for _ in range(length):
            vec.append(x % base)
            x //= base
        yield idx, tuple(vec)


def _scan_one_graph(
    g: OrientedGraph,
    pebble_cap: int,
    shard: int,
    shards: int,
    ft_filter: bool | None,
) -> tuple[list[tuple[int, tuple[int, ...], bool]], int]:
    """Hits are (index, full count vector, fully_traversable) for every
    assignment whose state graph is isomorphic to the graph."""
    n = len(g.vertices)
    non_sink = [i for i, v in enumerate(g.vertices) if g.valence(v) > 0]
    hits: list[tuple[int, tuple[int, ...], bool]] = []
    scanned = 0
    for idx, vec in iter_count_vectors(len(non_sink), pebble_cap, shard, shards):
        scanned += 1
        counts = [0] * n
        for pos, c in zip(non_sink, vec):
            counts[pos] = c
        a = Assignment(g, counts)
        if state_graph_isomorphism(g, a) is None:
            continue
        ft = build(g, a, state_budget=n).is_fully_traversable()
        if ft_filter is None or ft == ft_filter:
            hits.append((idx, tuple(counts), ft))
    return hits, scanned


def _scan_shard_worker(args) -> tuple[list[tuple[int, tuple[int, ...], bool]], int]:
    vertices, edges, pebble_cap, shard, shards, ft_filter = args
    g = OrientedGraph(vertices, edges)
    return _scan_one_graph(g, pebble_cap, shard, shards, ft_filter)


def scan_graph_assignments(
    g: OrientedGraph,
    pebble_cap: int,
    ft_filter: bool | None = None,
    shards: int = 1,
) -> tuple[list[tuple[int, tuple[int, ...], bool]], int]:
    if shards <= 1:
        return _scan_one_graph(g, pebble_cap, 0, 1, ft_filter)
    args = [
        (g.vertices, g.edges, pebble_cap, s, shards, ft_filter) for s in range(shards)
    ]
    with ProcessPoolExecutor(max_workers=shards) as pool:
        parts = list(pool.map(_scan_shard_worker, args))
    hits = sorted((h for part in parts for h in part[0]), key=lambda h: h[0])
    return hits, sum(part[1] for part in parts)


def reduce_modulo_automorphisms(
    g: OrientedGraph, vectors: list[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Keep one lexicographically-least representative per automorphism
    orbit, in first-seen order."""
    perms = [
        tuple(g.index(m.apply(v)) for v in g.vertices) for m in automorphisms(g)
    ]
    seen: set[tuple[int, ...]] = set()
    kept: list[tuple[int, ...]] = []
    for vec in vectors:
        rep = min(tuple(vec[p[i]] for i in range(len(vec))) for p in perms)
        if rep not in seen:
            seen.add(rep)
            kept.append(rep)
    return kept


def canonical_pair_key(
    g: OrientedGraph, counts: tuple[int, ...]
) -> tuple[bytes, tuple[int, ...]]:
    """A key equal across (graph, assignment) pairs exactly when some
    digraph isomorphism carries one assignment to the other."""
    form, order_names = canonical_labeling(g)
    by_name = dict(zip(g.vertices, counts))
    best = None
    for m in automorphisms(g):
        vec = tuple(by_name[m.apply(name)] for name in order_names)
        if best is None or vec < best:
            best = vec
    return form, best if best is not None else ()


@dataclass(frozen=True)
class ClassifiedPair:
    """A graph plus one assignment (valence-zero vertices normalized to a
    symbolic "any") whose state graph is isomorphic to the graph."""

    graph: OrientedGraph
    counts: tuple[int, ...]
    fully_traversable: bool

    def counts_by_vertex(self) -> dict[str, int]:
        return dict(zip(self.graph.vertices, self.counts))

    def to_json_obj(self) -> dict:
        sinks = set(self.graph.sinks())
        return {
            "graph": format_graph(self.graph),
            "assignment": {
                v: ("any" if v in sinks else c)
                for v, c in zip(self.graph.vertices, self.counts)
            },
            "fully_traversable": self.fully_traversable,
        }

    def table_row(self) -> str:
        sinks = set(self.graph.sinks())
        cells = " ".join(
            f"{v}={'any' if v in sinks else c}"
            for v, c in zip(self.graph.vertices, self.counts)
        )
        shape = f"{len(self.graph.vertices)}v/{len(self.graph.edges)}e"
        ft = "ft" if self.fully_traversable else "not-ft"
        return f"{shape} {ft}  {cells}"


@dataclass
class ClassificationResult:
    pebble_cap: int
    vertex_cap: int | None
    pairs: list[ClassifiedPair]
    scanned: int
    stats: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        bounds: dict = {"pebble_cap": self.pebble_cap}
        if self.vertex_cap is not None:
            bounds["vertex_cap"] = self.vertex_cap
        return {
            "bounds": bounds,
            "scanned": self.scanned,
            "pairs": [p.to_json_obj() for p in self.pairs],
            "stats": self.stats,
        }

    def table(self) -> str:
        lines = [f"{len(self.pairs)} isomorphic pairs ({self.scanned} assignments scanned)"]
        lines += [f"  {p.table_row()}" for p in self.pairs]
        return "\n".join(lines) + "\n"


def classify_downward_4_cycle(
    pebble_cap: int, shards: int = 1
) -> ClassificationResult:
    """Every assignment on the downward 4-cycle (non-sink counts up to
    ``pebble_cap``, sink symbolic) whose state graph is isomorphic to the
    cycle, reduced modulo the cycle's order-2 symmetry."""
    if pebble_cap < 4:
        raise ValueError(f"pebble cap must be at least 4 to be convincing, got {pebble_cap}")
    g = downward_cycle(4)
    hits, scanned = scan_graph_assignments(g, pebble_cap, ft_filter=None, shards=shards)
    ft_by_vec = {vec: ft for _, vec, ft in hits}
    reduced = reduce_modulo_automorphisms(g, [vec for _, vec, _ in hits])
    pairs = [ClassifiedPair(g, vec, ft_by_vec[vec]) for vec in reduced]
    return ClassificationResult(pebble_cap, None, pairs, scanned)


def search_isomorphic_pairs(
    vertex_cap: int,
    pebble_cap: int,
    ft_filter: bool | None = None,
    shards: int = 1,
) -> ClassificationResult:
    """Scan every oriented graph up to ``vertex_cap`` vertices (one per
    isomorphism class) against every assignment with non-sink counts up to
    ``pebble_cap`` and keep the pairs isomorphic to their state graph."""
    pairs: list[ClassifiedPair] = []
    scanned = 0
    graphs = enumerate_oriented_graphs(vertex_cap)
    for g in graphs:
        hits, n_scanned = scan_graph_assignments(g, pebble_cap, ft_filter, shards)
        scanned += n_scanned
        ft_by_vec = {vec: ft for _, vec, ft in hits}
        for vec in reduce_modulo_automorphisms(g, [vec for _, vec, _ in hits]):
            pairs.append(ClassifiedPair(g, vec, ft_by_vec[vec]))
    result = ClassificationResult(pebble_cap, vertex_cap, pairs, scanned)
    result.stats["graph_classes"] = len(graphs)
    return result


def classify_fully_traversable(
    vertex_cap: int, pebble_cap: int, shards: int = 1
) -> ClassificationResult:
    """The fully traversable pairs among `search_isomorphic_pairs`."""
    return search_isomorphic_pairs(vertex_cap, pebble_cap, ft_filter=True, shards=shards)
