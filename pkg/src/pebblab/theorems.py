"""Executable verification of the classification results.

Each checker computes a verdict for one claim id: ``holds`` when the claimed
statement checks out on the instance, ``counterexample`` when it fails,
``hypothesis-not-met`` when the instance does not satisfy the claim's
premises, and ``budget-exceeded`` when a search or build cap stopped the
computation first.  Reports embed the instance in the shared text format so
every verdict can be replayed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .assignment_graph import DEFAULT_STATE_BUDGET, AssignmentGraph, build, find_downward_4_cycle
from .classify import (
    ClassificationResult,
    canonical_pair_key,
    classify_downward_4_cycle,
    classify_fully_traversable,
    iter_count_vectors,
    scan_graph_assignments,
    state_graph_isomorphism,
)
from .errors import (
    EmbeddingNotFoundError,
    GraphError,
    StateBudgetExceededError,
    UnknownClaimError,
)
from .generate import enumerate_downward_trees, random_downward_tree
from .graphs import OrientedGraph, downward_cycle, oriented_complete_bipartite, oriented_path
from .iso import (
    DEFAULT_EXPANSION_BUDGET,
    digraph_isomorphic,
    find_induced_undirected_embedding,
    undirected_isomorphic,
)
from .pebbling import (
    Assignment,
    heavy_step_assignment,
    near_sink_assignment,
    product_assignment,
    simple_assignment,
    tree_assignment,
)
from .textio import format_assignment, parse_graph_text

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
BUDGET_EXCEEDED = "budget-exceeded"

CLAIM_IDS = (
    "prop-1.1",
    "cor-1.1",
    "cor-1.2",
    "thm-2.1",
    "thm-2.2",
    "cor-2.1",
    "thm-3.1",
    "thm-4.1",
    "thm-5.1",
    "sec-6",
    "thm-7.1",
    "lem-7.1",
    "lem-7.2",
    "cor-7.1",
    "thm-7.2",
    "thm-8.1",
)

DOWNWARD_4_CYCLE_FAMILIES = frozenset(
    {(0, 2, 2), (1, 2, 2), (0, 2, 3), (1, 2, 3), (0, 3, 3), (1, 3, 3)}
)


@dataclass
class VerificationReport:
    claim: str
    instance: str
    verdict: str
    witness: dict | None = None
    stats: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    instance_text: str | None = None
    params: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj: dict = {
            "claim": self.claim,
            "instance": self.instance,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.stats:
            obj["stats"] = self.stats
        if self.notes:
            obj["notes"] = list(self.notes)
        if self.instance_text is not None:
            obj["instance_text"] = self.instance_text
        if self.params:
            obj["params"] = self.params
        return obj

    def table(self) -> str:
        lines = [
            f"claim:    {self.claim}",
            f"instance: {self.instance}",
            f"verdict:  {self.verdict}",
        ]
        for key in sorted(self.stats):
            lines.append(f"  {key}: {self.stats[key]}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


def _describe(a: Assignment) -> str:
    g = a.graph
    counts = ",".join(f"{v}={a[v]}" for v in g.vertices)
    return f"{len(g.vertices)}v/{len(g.edges)}e graph with pebbles {counts}"


def _budget_report(claim: str, a: Assignment, budget: int) -> VerificationReport:
    return VerificationReport(
        claim,
        _describe(a),
        BUDGET_EXCEEDED,
        stats={"state_budget": budget},
        instance_text=format_assignment(a),
        params={"input": format_assignment(a)},
    )


def _instance_report(claim: str, a: Assignment, verdict: str, **kwargs) -> VerificationReport:
    return VerificationReport(
        claim,
        _describe(a),
        verdict,
        instance_text=format_assignment(a),
        params={"input": format_assignment(a)},
        **kwargs,
    )


# -- section 1: traversal counting ------------------------------------------


def verify_prop_1_1(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """Fully traversable and isomorphic to the state graph implies every
    edge is traversed exactly once."""
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("prop-1.1", a, state_budget)
    ft = ag.is_fully_traversable()
    iso = digraph_isomorphic(g, ag.as_oriented_graph())
    stats = {"states": len(ag.states), "fully_traversable": ft, "isomorphic": iso is not None}
    if not ft or iso is None:
        return _instance_report("prop-1.1", a, HYPOTHESIS_NOT_MET, stats=stats)
    counts = ag.traversal_counts()
    offenders = {f"{u}->{w}": c for (u, w), c in counts.items() if c != 1}
    if offenders:
        return _instance_report(
            "prop-1.1", a, COUNTEREXAMPLE, stats=stats, witness={"traversal_counts": offenders}
        )
    return _instance_report("prop-1.1", a, HOLDS, stats=stats)


def verify_cor_1_1(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """On more than one vertex, fully traversable and isomorphic implies no
    vertex holds more than three pebbles."""
    if len(g.vertices) <= 1:
        return _instance_report(
            "cor-1.1", a, HYPOTHESIS_NOT_MET, stats={"reason": "graph has one vertex"}
        )
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("cor-1.1", a, state_budget)
    ft = ag.is_fully_traversable()
    iso = digraph_isomorphic(g, ag.as_oriented_graph())
    stats = {"states": len(ag.states), "fully_traversable": ft, "isomorphic": iso is not None}
    if not ft or iso is None:
        return _instance_report("cor-1.1", a, HYPOTHESIS_NOT_MET, stats=stats)
    offenders = {v: a[v] for v in g.vertices if a[v] > 3}
    if not offenders:
        return _instance_report("cor-1.1", a, HOLDS, stats=stats)
    notes = ()
    if all(g.valence(v) == 0 for v in offenders):
        notes = (
            "every offending vertex has valence zero, so the surplus pebbles "
            "can never move; the literal statement fails only on such inert vertices",
        )
    return _instance_report(
        "cor-1.1", a, COUNTEREXAMPLE, stats=stats, witness={"pebbles": offenders}, notes=notes
    )


def verify_cor_1_2(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """Not fully traversable yet isomorphic implies some edge is traversed
    more than once.  Gated on the graph having an edge: an edgeless graph
    has nothing to traverse and satisfies the premises vacuously."""
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("cor-1.2", a, state_budget)
    ft = ag.is_fully_traversable()
    iso = digraph_isomorphic(g, ag.as_oriented_graph())
    stats = {"states": len(ag.states), "fully_traversable": ft, "isomorphic": iso is not None}
    if not g.edges or ft or iso is None:
        return _instance_report("cor-1.2", a, HYPOTHESIS_NOT_MET, stats=stats)
    counts = ag.traversal_counts()
    top = max(counts.values())
    stats["max_traversal"] = top
    if top >= 2:
        repeated = {f"{u}->{w}": c for (u, w), c in counts.items() if c >= 2}
        return _instance_report("cor-1.2", a, HOLDS, stats=stats, witness={"repeated": repeated})
    return _instance_report(
        "cor-1.2",
        a,
        COUNTEREXAMPLE,
        stats=stats,
        witness={"traversal_counts": {f"{u}->{w}": c for (u, w), c in counts.items()}},
    )


# -- section 2: the downward 4-cycle criterion -------------------------------


def _diamond_rooted_states(ag: AssignmentGraph) -> list[bool]:
    """For each state: do two distinct children share a child?"""
    succs = ag.successors()
    out = [False] * len(ag.states)
    for sid, children in enumerate(succs):
        if len(children) < 2:
            continue
        seen: dict[int, int] = {}
        found = False
        for b in children:
            for d in succs[b]:
                prev = seen.get(d)
                if prev is None:
                    seen[d] = b
                elif prev != b:
                    found = True
                    break
            if found:
                break
        out[sid] = found
    return out


def _movable_side_states(ag: AssignmentGraph) -> list[bool]:
    """For each state: two movable vertices, or a 2-movable vertex holding
    at least four pebbles?"""
    g = ag.graph
    valences = [g.valence(v) for v in g.vertices]
    out = []
    for counts in ag.states:
        movable = 0
        heavy = False
        for c, val in zip(counts, valences):
            if c >= 2 and val >= 1:
                movable += 1
                if c >= 4 and val >= 2:
                    heavy = True
        out.append(movable >= 2 or heavy)
    return out


def check_thm_2_1(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """The diamond criterion, checked state by state: a state is the top of
    a downward 4-cycle in the state graph exactly when it has two movable
    vertices or a 2-movable vertex with at least four pebbles.

    The per-state form is the executable content of the criterion; the
    assignment evolves as moves are played, so the movability side must be
    evaluated at each reachable state, not only at the start.
    """
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("thm-2.1", a, state_budget)
    diamond = _diamond_rooted_states(ag)
    movable = _movable_side_states(ag)
    stats = {
        "states": len(ag.states),
        "edges": len(ag.edges),
        "contains_downward_4_cycle": any(diamond),
    }
    for sid, (lhs, rhs) in enumerate(zip(diamond, movable)):
        if lhs != rhs:
            return _instance_report(
                "thm-2.1",
                a,
                COUNTEREXAMPLE,
                stats=stats,
                witness={
                    "state": ag.state_label(sid),
                    "diamond_rooted_here": lhs,
                    "movable_condition_here": rhs,
                },
            )
    return _instance_report("thm-2.1", a, HOLDS, stats=stats)


def verify_thm_2_2(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """A graph containing a downward 4-cycle with a fully traversable
    assignment is never isomorphic to its state graph."""
    pattern = find_downward_4_cycle(g)
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("thm-2.2", a, state_budget)
    ft = ag.is_fully_traversable()
    stats = {"states": len(ag.states), "has_downward_4_cycle": pattern is not None, "fully_traversable": ft}
    if pattern is None or not ft:
        return _instance_report("thm-2.2", a, HYPOTHESIS_NOT_MET, stats=stats)
    iso = digraph_isomorphic(g, ag.as_oriented_graph())
    if iso is None:
        return _instance_report("thm-2.2", a, HOLDS, stats=stats)
    return _instance_report(
        "thm-2.2", a, COUNTEREXAMPLE, stats=stats, witness=iso.to_json_obj()
    )


def verify_cor_2_1(
    pebble_cap: int = 6, shards: int = 1
) -> tuple[VerificationReport, ClassificationResult]:
    """Rediscover the six assignment families on the downward 4-cycle whose
    state graph is isomorphic to the cycle."""
    result = classify_downward_4_cycle(pebble_cap, shards=shards)
    families = sorted(pair.counts[:3] for pair in result.pairs)
    expected = sorted(DOWNWARD_4_CYCLE_FAMILIES)
    verdict = HOLDS if families == expected else COUNTEREXAMPLE
    report = VerificationReport(
        "cor-2.1",
        f"downward 4-cycle, non-sink counts up to {pebble_cap}, sink symbolic",
        verdict,
        witness={"families": [list(f) for f in families]},
        stats={"scanned": result.scanned, "families": len(families)},
        params={"cap": pebble_cap},
    )
    return report, result


# -- sections 3 and 4: larger cycles -----------------------------------------


def verify_thm_3_1(
    k: int, pebble_cap: int, shards: int = 1
) -> VerificationReport:
    """No assignment on a downward k-cycle, k > 4, is isomorphic to its
    state graph (non-sink counts scanned up to the cap, sink normalized)."""
    if k <= 4 or k % 2:
        raise GraphError(f"k must be even and greater than 4, got {k}")
    g = downward_cycle(k)
    hits, scanned = _scan_cycle(g, pebble_cap, shards)
    stats = {"k": k, "pebble_cap": pebble_cap, "scanned": scanned, "isomorphic_found": len(hits)}
    if hits:
        counts = hits[0]
        a = Assignment(g, counts)
        return VerificationReport(
            "thm-3.1",
            f"downward {k}-cycle, counts up to {pebble_cap}",
            COUNTEREXAMPLE,
            witness={"assignment": a.as_dict()},
            stats=stats,
            instance_text=format_assignment(a),
            params={"k": k, "cap": pebble_cap},
        )
    return VerificationReport(
        "thm-3.1",
        f"downward {k}-cycle, counts up to {pebble_cap}",
        HOLDS,
        stats=stats,
        params={"k": k, "cap": pebble_cap},
    )


def _scan_cycle(g: OrientedGraph, pebble_cap: int, shards: int):
    hits, scanned = scan_graph_assignments(g, pebble_cap, ft_filter=None, shards=shards)
    return [vec for _, vec, _ in hits], scanned


def verify_thm_4_1(
    g: OrientedGraph, a: Assignment, state_budget: int = DEFAULT_STATE_BUDGET
) -> VerificationReport:
    """A fully traversable graph whose shadow contains a cycle is never
    isomorphic to its state graph."""
    try:
        ag = build(g, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("thm-4.1", a, state_budget)
    ft = ag.is_fully_traversable()
    cyclic = g.underlying_has_cycle()
    stats = {"states": len(ag.states), "fully_traversable": ft, "underlying_cycle": cyclic}
    if not ft or not cyclic:
        return _instance_report("thm-4.1", a, HYPOTHESIS_NOT_MET, stats=stats)
    iso = digraph_isomorphic(g, ag.as_oriented_graph())
    if iso is None:
        return _instance_report("thm-4.1", a, HOLDS, stats=stats)
    return _instance_report("thm-4.1", a, COUNTEREXAMPLE, stats=stats, witness=iso.to_json_obj())


# -- section 5: downward trees ------------------------------------------------


def verify_thm_5_1(
    tree: OrientedGraph,
    root_pebbles: int = 2,
    leaf_pebbles: dict[str, int] | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> VerificationReport:
    """A downward tree with two or three pebbles on the root, one on every
    other non-zero-valence vertex, and anything on the leaves is isomorphic
    to its state graph.

    Besides the searched witness, cross-checks the explicit map sending
    each vertex v to the state reached by pebbling along the unique
    root-to-v path.
    """
    a = tree_assignment(tree, root_pebbles, leaf_pebbles)
    try:
        ag = build(tree, a, state_budget)
    except StateBudgetExceededError:
        return _budget_report("thm-5.1", a, state_budget)
    iso = digraph_isomorphic(tree, ag.as_oriented_graph())
    explicit_ok = _explicit_tree_map_is_isomorphism(tree, a, ag)
    stats = {
        "states": len(ag.states),
        "isomorphic": iso is not None,
        "explicit_map_verified": explicit_ok,
    }
    if iso is not None and explicit_ok:
        return _instance_report("thm-5.1", a, HOLDS, stats=stats, witness=iso.to_json_obj())
    return _instance_report("thm-5.1", a, COUNTEREXAMPLE, stats=stats)


def _explicit_tree_map_is_isomorphism(
    tree: OrientedGraph, a: Assignment, ag: AssignmentGraph
) -> bool:
    state_ids = {counts: i for i, counts in enumerate(ag.states)}
    index = tree.index
    psi: dict[str, int] = {}
    for v in tree.vertices:
        path = [v]
        while True:
            parents = tree.in_neighbors(path[-1])
            if not parents:
                break
            path.append(parents[0])
        path.reverse()
        counts = list(a.counts)
        for x, y in zip(path, path[1:]):
            counts[index(x)] -= 2
            counts[index(y)] += 1
            if counts[index(x)] < 0:
                return False
        sid = state_ids.get(tuple(counts))
        if sid is None:
            return False
        psi[v] = sid
    if len(set(psi.values())) != len(ag.states) or len(psi) != len(tree.vertices):
        return False
    ag_edges = {(f, t) for f, t, _ in ag.edges}
    tree_edges = {(psi[u], psi[w]) for u, w in tree.edges}
    return tree_edges <= ag_edges and len(tree.edges) == len(ag.edges)


def verify_thm_5_1_batch(
    trees: int,
    max_vertices: int,
    seed: int,
    leaf_cap: int = 9,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> VerificationReport:
    """Seeded batch: random downward trees with random leaf counts; the
    isomorphism must hold and every traversal count must equal one."""
    rng = random.Random(seed)
    states_total = 0
    for i in range(trees):
        n = rng.randint(2, max_vertices)
        tree = random_downward_tree(rng, n)
        root_pebbles = rng.choice((2, 3))
        leaves = {v: rng.randint(0, leaf_cap) for v in tree.sinks()}
        report = verify_thm_5_1(tree, root_pebbles, leaves, state_budget)
        states_total += report.stats.get("states", 0)
        if report.verdict != HOLDS:
            report.stats["batch_index"] = i
            return report
        traversal = verify_prop_1_1(tree, tree_assignment(tree, root_pebbles, leaves), state_budget)
        if traversal.verdict != HOLDS:
            traversal.stats["batch_index"] = i
            traversal.claim = "thm-5.1"
            return traversal
    return VerificationReport(
        "thm-5.1",
        f"{trees} random downward trees on up to {max_vertices} vertices (seed {seed})",
        HOLDS,
        stats={"instances": trees, "states_total": states_total},
        params={"random_trees": trees, "max_vertices": max_vertices, "seed": seed},
    )


# -- section 6: full classification -------------------------------------------


def verify_sec_6(
    vertex_cap: int, pebble_cap: int, shards: int = 1
) -> tuple[VerificationReport, ClassificationResult]:
    """The fully traversable pairs isomorphic to their state graph are
    exactly the downward trees carrying the root-2-or-3 assignment."""
    result = classify_fully_traversable(vertex_cap, pebble_cap, shards=shards)
    found = {canonical_pair_key(p.graph, p.counts) for p in result.pairs}
    expected = set()
    for tree in enumerate_downward_trees(vertex_cap):
        if not tree.edges:
            continue
        for root_pebbles in (2, 3):
            a = tree_assignment(tree, root_pebbles)
            expected.add(canonical_pair_key(tree, a.counts))
    verdict = HOLDS if found == expected else COUNTEREXAMPLE
    report = VerificationReport(
        "sec-6",
        f"all oriented graphs up to {vertex_cap} vertices, counts up to {pebble_cap}",
        verdict,
        stats={
            "scanned": result.scanned,
            "found_pairs": len(found),
            "expected_pairs": len(expected),
            "graph_classes": result.stats.get("graph_classes", 0),
        },
        params={"vertex_cap": vertex_cap, "pebble_cap": pebble_cap},
    )
    if verdict == COUNTEREXAMPLE:
        report.stats["unexpected"] = len(found - expected)
        report.stats["missing"] = len(expected - found)
    return report, result


# -- section 7: products of paths ---------------------------------------------


def _aggregate(claim: str, instance: str, reports: list[VerificationReport], params: dict) -> VerificationReport:
    tally = Counter(r.verdict for r in reports)
    stats = {
        "instances": len(reports),
        "holds": tally[HOLDS],
        "hypothesis_not_met": tally[HYPOTHESIS_NOT_MET],
        "counterexamples": tally[COUNTEREXAMPLE],
        "budget_exceeded": tally[BUDGET_EXCEEDED],
    }
    report = VerificationReport(claim, instance, HOLDS, stats=stats, params=params)
    if tally[COUNTEREXAMPLE]:
        first = next(r for r in reports if r.verdict == COUNTEREXAMPLE)
        report.verdict = COUNTEREXAMPLE
        report.witness = first.witness
        report.instance_text = first.instance_text
    elif tally[BUDGET_EXCEEDED]:
        report.verdict = BUDGET_EXCEEDED
    elif not tally[HOLDS]:
        report.verdict = HYPOTHESIS_NOT_MET
    return report


def verify_thm_7_1(
    lengths: list[int],
    source_pebbles: list[int],
    sink_pebbles: list[int] | None = None,
) -> VerificationReport:
    """A product of paths with a simple pebbling is isomorphic to its state
    graph."""
    sinks = sink_pebbles or [0] * len(lengths)
    factors = []
    for n, sp, sk in zip(lengths, source_pebbles, sinks):
        path = oriented_path(n)
        factors.append((path, simple_assignment(path, sp, sk)))
    g, a = product_assignment(factors)
    iso = state_graph_isomorphism(g, a)
    stats = {"vertices": len(g.vertices), "edges": len(g.edges)}
    params = {"lengths": list(lengths), "pebbles": list(source_pebbles), "sinks": list(sinks)}
    verdict = HOLDS if iso is not None else COUNTEREXAMPLE
    return VerificationReport(
        "thm-7.1",
        "product of paths " + " x ".join(f"P{n}({sp})" for n, sp in zip(lengths, source_pebbles)),
        verdict,
        witness=iso.to_json_obj() if iso else None,
        stats=stats,
        instance_text=format_assignment(a),
        params=params,
    )


def verify_thm_7_1_sweep(max_factors: int = 3, max_length: int = 4) -> VerificationReport:
    options = [(n, sp) for n in range(2, max_length + 1) for sp in (2, 3)]
    reports = []
    for r in range(1, max_factors + 1):
        for combo in combinations_with_replacement(options, r):
            lengths = [n for n, _ in combo]
            pebbles = [sp for _, sp in combo]
            reports.append(verify_thm_7_1(lengths, pebbles))
    return _aggregate(
        "thm-7.1",
        f"all products of up to {max_factors} paths with lengths up to {max_length}, both source counts",
        reports,
        {"sweep": True, "max_factors": max_factors, "max_length": max_length},
    )


def verify_lemma_7_1(
    n: int, k: int, sink_pebbles: int = 0, fill: int | dict[str, int] = 1
) -> VerificationReport:
    """k pebbles beside the sink: the state graph is a path of
    floor(k/2) + 1 states, so the path is isomorphic to it exactly when its
    length matches; gated on n = floor(k/2) + 1."""
    params = {"n": n, "k": k, "sink": sink_pebbles, "fill": fill if isinstance(fill, int) else dict(fill)}
    path = oriented_path(n)
    a = near_sink_assignment(path, k, sink_pebbles, fill)
    if n != k // 2 + 1:
        report = _instance_report(
            "lem-7.1", a, HYPOTHESIS_NOT_MET, stats={"required_length": k // 2 + 1}
        )
        report.params = params
        return report
    iso = state_graph_isomorphism(path, a)
    report = _instance_report(
        "lem-7.1",
        a,
        HOLDS if iso is not None else COUNTEREXAMPLE,
        stats={"n": n, "k": k},
        witness=iso.to_json_obj() if iso else None,
    )
    report.params = params
    return report


def verify_lemma_7_1_sweep(max_k: int = 8) -> VerificationReport:
    reports = []
    for k in range(2, max_k + 1):
        n = k // 2 + 1
        free = max(n - 2, 0)
        for bits in product((0, 1), repeat=free):
            fill = {f"a{i + 1}": b for i, b in enumerate(bits)}
            reports.append(verify_lemma_7_1(n, k, fill=fill))
    return _aggregate(
        "lem-7.1",
        f"k from 2 to {max_k} with the matching path length, all fill choices",
        reports,
        {"sweep": True, "max_k": max_k},
    )


def verify_lemma_7_2(
    n: int,
    position: int,
    heavy: int,
    sink_pebbles: int = 0,
    fill: int | dict[str, int] = 0,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> VerificationReport:
    """Four or five pebbles followed by an empty vertex: gated on exactly
    n - 2 edges being traversed (computed from the build, never assumed)."""
    params = {
        "n": n,
        "position": position,
        "heavy": heavy,
        "sink": sink_pebbles,
        "fill": fill if isinstance(fill, int) else dict(fill),
    }
    path = oriented_path(n)
    a = heavy_step_assignment(path, position, heavy, sink_pebbles, fill)
    ag = build(path, a, state_budget)
    traversed = sum(1 for c in ag.traversal_counts().values() if c >= 1)
    stats = {"n": n, "position": position, "heavy": heavy, "traversed_edges": traversed}
    if traversed != n - 2:
        report = _instance_report("lem-7.2", a, HYPOTHESIS_NOT_MET, stats=stats)
        report.params = params
        return report
    iso = None
    if len(ag.states) == n and len(ag.edges) == n - 1:
        iso = digraph_isomorphic(path, ag.as_oriented_graph())
    report = _instance_report(
        "lem-7.2",
        a,
        HOLDS if iso is not None else COUNTEREXAMPLE,
        stats=stats,
        witness=iso.to_json_obj() if iso else None,
    )
    report.params = params
    return report


def verify_lemma_7_2_sweep(max_n: int = 6) -> VerificationReport:
    reports = []
    for n in range(3, max_n + 1):
        order = [f"a{i}" for i in range(1, n + 1)]
        for position in range(1, n - 1):
            for heavy in (4, 5):
                free = [
                    v
                    for i, v in enumerate(order[:-1], start=1)
                    if i not in (position, position + 1)
                ]
                for bits in product((0, 1), repeat=len(free)):
                    fill = dict(zip(free, bits))
                    reports.append(verify_lemma_7_2(n, position, heavy, fill=fill))
    return _aggregate(
        "lem-7.2",
        f"paths up to {max_n} vertices, every heavy placement and fill choice",
        reports,
        {"sweep": True, "max_n": max_n},
    )


def verify_cor_7_1(
    factors: list[tuple[OrientedGraph, Assignment]],
    factor_specs: list[str] | None = None,
) -> VerificationReport:
    """Products of paths with almost simple pebblings: gated on each factor
    being isomorphic to its own state graph."""
    params = {"factors": list(factor_specs or [])}
    gates = [state_graph_isomorphism(path, a) is not None for path, a in factors]
    if not all(gates):
        return VerificationReport(
            "cor-7.1",
            f"product of {len(factors)} pebbled paths",
            HYPOTHESIS_NOT_MET,
            stats={"factor_isomorphic": gates},
            params=params,
        )
    g, a = product_assignment(factors)
    iso = state_graph_isomorphism(g, a)
    return VerificationReport(
        "cor-7.1",
        f"product of {len(factors)} pebbled paths",
        HOLDS if iso is not None else COUNTEREXAMPLE,
        witness=iso.to_json_obj() if iso else None,
        stats={"vertices": len(g.vertices), "edges": len(g.edges)},
        instance_text=format_assignment(a),
        params=params,
    )


def verify_thm_7_2(
    n: int,
    m: int,
    source_pebbles: int = 2,
    search_cap: int = 4,
    state_budget: int = DEFAULT_STATE_BUDGET,
    scan_budget: int = DEFAULT_EXPANSION_BUDGET,
) -> VerificationReport:
    """Build the state graph of the oriented complete bipartite graph with
    two or three pebbles per source, then (a) find the bipartite pattern as
    an oriented subgraph of it and (b) search bounded assignments making it
    isomorphic to its own state graph.

    The assignment search is best effort: exhausting the cap without a
    finding is reported as budget-exceeded, not as a refutation.
    """
    params = {"n": n, "m": m, "pebbles": source_pebbles, "search_cap": search_cap}
    k_graph = oriented_complete_bipartite(n, m)
    a_k = Assignment(k_graph, {f"a{i}": source_pebbles for i in range(1, n + 1)})
    try:
        ag = build(k_graph, a_k, state_budget)
    except StateBudgetExceededError:
        return VerificationReport(
            "thm-7.2", f"K({n},{m})", BUDGET_EXCEEDED, stats={"state_budget": state_budget}, params=params
        )
    g = ag.as_oriented_graph()
    stats = {"construction_vertices": len(g.vertices), "construction_edges": len(g.edges)}
    submap = _find_oriented_subgraph(k_graph, g)
    if submap is None:
        return VerificationReport(
            "thm-7.2",
            f"K({n},{m}) inside its own state graph",
            COUNTEREXAMPLE,
            stats=stats,
            notes=("the bipartite pattern does not occur as an oriented subgraph",),
            params=params,
        )
    non_sink = [i for i, v in enumerate(g.vertices) if g.valence(v) > 0]
    scanned = 0
    for _, vec in iter_count_vectors(len(non_sink), search_cap):
        scanned += 1
        if scanned > scan_budget:
            stats["assignments_scanned"] = scanned - 1
            return VerificationReport(
                "thm-7.2", f"K({n},{m}) construction", BUDGET_EXCEEDED, stats=stats, params=params
            )
        counts = [0] * len(g.vertices)
        for pos, c in zip(non_sink, vec):
            counts[pos] = c
        candidate = Assignment(g, counts)
        iso = state_graph_isomorphism(g, candidate)
        if iso is not None:
            stats["assignments_scanned"] = scanned
            return VerificationReport(
                "thm-7.2",
                f"K({n},{m}) inside its own state graph",
                HOLDS,
                witness={
                    "subgraph": submap,
                    "assignment": candidate.as_dict(),
                    "isomorphism": iso.to_json_obj()["map"],
                },
                stats=stats,
                instance_text=format_assignment(candidate),
                params=params,
            )
    stats["assignments_scanned"] = scanned
    return VerificationReport(
        "thm-7.2",
        f"K({n},{m}) inside its own state graph",
        BUDGET_EXCEEDED,
        stats=stats,
        notes=(f"no isomorphic assignment with counts up to {search_cap}; absence beyond the cap unproven",),
        params=params,
    )


def _find_oriented_subgraph(pattern: OrientedGraph, host: OrientedGraph) -> dict[str, str] | None:
    """Injective vertex map carrying every pattern edge to a host edge."""
    p_order = sorted(
        pattern.vertices, key=lambda v: -(pattern.valence(v) + pattern.in_degree(v))
    )
    used: set[str] = set()
    image: dict[str, str] = {}

    def rec(d: int) -> bool:
        if d == len(p_order):
            return True
        v = p_order[d]
        for x in host.vertices:
            if x in used:
                continue
            if host.valence(x) < pattern.valence(v) or host.in_degree(x) < pattern.in_degree(v):
                continue
            ok = True
            for u in p_order[:d]:
                if pattern.has_edge(u, v) and not host.has_edge(image[u], x):
                    ok = False
                    break
                if pattern.has_edge(v, u) and not host.has_edge(x, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = x
                used.add(x)
                if rec(d + 1):
                    return True
                used.discard(x)
                del image[v]
        return False

    if not rec(0):
        return None
    return {v: image[v] for v in pattern.vertices}


# -- section 8: undirected isomorphism ----------------------------------------


def construct_thm_8_1(
    g: OrientedGraph,
    a: Assignment,
    state_budget: int = DEFAULT_STATE_BUDGET,
    expansion_budget: int = DEFAULT_EXPANSION_BUDGET,
) -> tuple[OrientedGraph, Assignment, VerificationReport]:
    """When the graph embeds as an induced undirected subgraph of its state
    graph's shadow, reorient that shadow into a host graph: copy the
    original orientation onto the embedded copy, point every edge touching
    exactly one copy vertex toward the copy, orient the rest from lower to
    higher state id, and pebble only the copy.

    The host's state graph then has exactly the original's states, and the
    host is isomorphic to it as undirected graphs.
    """
    ag = build(g, a, state_budget)
    state_graph = ag.as_oriented_graph()
    embedding = find_induced_undirected_embedding(g, state_graph, expansion_budget)
    if embedding is None:
        raise EmbeddingNotFoundError(
            "the graph is not an induced undirected subgraph of its state graph"
        )
    into_copy = {target: source for source, target in embedding.pairs}

    edges = []
    for x, y in state_graph.edges:
        gx, gy = into_copy.get(x), into_copy.get(y)
        if gx is not None and gy is not None:
            edges.append((x, y) if g.has_edge(gx, gy) else (y, x))
        elif gx is not None:
            edges.append((y, x))
        elif gy is not None:
            edges.append((x, y))
        else:
            edges.append((x, y) if int(x) < int(y) else (y, x))
    host = OrientedGraph(state_graph.vertices, edges)
    host_counts = {target: a[source] for source, target in embedding.pairs}
    host_assignment = Assignment(host, host_counts)

    ag_host = build(host, host_assignment, state_budget)
    shadow_iso = undirected_isomorphic(host, ag_host.as_oriented_graph())
    same_states = len(ag_host.states) == len(ag.states)
    verdict = HOLDS if (shadow_iso is not None and same_states) else COUNTEREXAMPLE
    report = VerificationReport(
        "thm-8.1",
        _describe(a),
        verdict,
        witness={
            "embedding": embedding.to_json_obj()["map"],
            "undirected_isomorphism": shadow_iso.to_json_obj()["map"] if shadow_iso else None,
        },
        stats={
            "original_states": len(ag.states),
            "host_states": len(ag_host.states),
            "host_vertices": len(host.vertices),
        },
        instance_text=format_assignment(a),
        params={"input": format_assignment(a)},
    )
    return host, host_assignment, report


# -- claim registry -----------------------------------------------------------


def parse_path_spec(spec: str) -> tuple[OrientedGraph, Assignment]:
    """Build a pebbled path from a spec like ``simple:n=3,src=2,sink=0``,
    ``nearsink:n=3,k=4`` or ``heavystep:n=4,p=1,heavy=4``."""
    kind, _, rest = spec.partition(":")
    try:
        kv = {k: int(v) for k, v in (item.split("=", 1) for item in rest.split(",") if item)}
    except ValueError as exc:
        raise GraphError(f"bad path spec {spec!r}: {exc}") from None
    path = oriented_path(kv.get("n", 0))
    if kind == "simple":
        return path, simple_assignment(path, kv.get("src", 2), kv.get("sink", 0))
    if kind == "nearsink":
        return path, near_sink_assignment(path, kv.get("k", 0), kv.get("sink", 0), kv.get("fill", 1))
    if kind == "heavystep":
        return path, heavy_step_assignment(
            path, kv.get("p", 1), kv.get("heavy", 4), kv.get("sink", 0), kv.get("fill", 1)
        )
    raise GraphError(f"unknown path spec kind {kind!r}")


def run_claim(
    claim: str,
    params: dict,
    state_budget: int = DEFAULT_STATE_BUDGET,
    search_budget: int = DEFAULT_EXPANSION_BUDGET,
    shards: int = 1,
) -> tuple[VerificationReport, object | None]:
    """Run one claim checker from JSON-able parameters.

    Returns the report plus an optional extra artifact (a classification
    result, or the constructed host graph and assignment).
    """
    if claim not in CLAIM_IDS:
        raise UnknownClaimError(
            f"unknown claim {claim!r}; valid ids: {', '.join(CLAIM_IDS)}"
        )

    def instance() -> tuple[OrientedGraph, Assignment]:
        if "input" not in params:
            raise UnknownClaimError(f"claim {claim!r} needs an instance file")
        return parse_graph_text(params["input"])

    if claim == "prop-1.1":
        return verify_prop_1_1(*instance(), state_budget), None
    if claim == "cor-1.1":
        return verify_cor_1_1(*instance(), state_budget), None
    if claim == "cor-1.2":
        return verify_cor_1_2(*instance(), state_budget), None
    if claim == "thm-2.1":
        return check_thm_2_1(*instance(), state_budget), None
    if claim == "thm-2.2":
        return verify_thm_2_2(*instance(), state_budget), None
    if claim == "cor-2.1":
        report, result = verify_cor_2_1(params.get("cap", 6), shards=shards)
        return report, result
    if claim == "thm-3.1":
        return verify_thm_3_1(params["k"], params.get("cap", 4), shards=shards), None
    if claim == "thm-4.1":
        return verify_thm_4_1(*instance(), state_budget), None
    if claim == "thm-5.1":
        if "random_trees" in params:
            return (
                verify_thm_5_1_batch(
                    params["random_trees"],
                    params.get("max_vertices", 12),
                    params.get("seed", 0),
                    state_budget=state_budget,
                ),
                None,
            )
        g, a = instance()
        decomposed = _tree_instance(g, a)
        if isinstance(decomposed, str):
            return (
                _instance_report("thm-5.1", a, HYPOTHESIS_NOT_MET, stats={"reason": decomposed}),
                None,
            )
        root_pebbles, leaves = decomposed
        return verify_thm_5_1(g, root_pebbles, leaves, state_budget), None
    if claim == "sec-6":
        report, result = verify_sec_6(
            params.get("vertex_cap", 4), params.get("pebble_cap", 4), shards=shards
        )
        return report, result
    if claim == "thm-7.1":
        if params.get("sweep"):
            return (
                verify_thm_7_1_sweep(params.get("max_factors", 3), params.get("max_length", 4)),
                None,
            )
        return (
            verify_thm_7_1(params["lengths"], params["pebbles"], params.get("sinks")),
            None,
        )
    if claim == "lem-7.1":
        if params.get("sweep"):
            return verify_lemma_7_1_sweep(params.get("max_k", 8)), None
        return (
            verify_lemma_7_1(params["n"], params["k"], params.get("sink", 0), params.get("fill", 1)),
            None,
        )
    if claim == "lem-7.2":
        if params.get("sweep"):
            return verify_lemma_7_2_sweep(params.get("max_n", 6)), None
        return (
            verify_lemma_7_2(
                params["n"],
                params["position"],
                params["heavy"],
                params.get("sink", 0),
                params.get("fill", 0),
                state_budget,
            ),
            None,
        )
    if claim == "cor-7.1":
        specs = params["factors"]
        factors = [parse_path_spec(spec) for spec in specs]
        return verify_cor_7_1(factors, specs), None
    if claim == "thm-7.2":
        return (
            verify_thm_7_2(
                params["n"],
                params["m"],
                params.get("pebbles", 2),
                params.get("search_cap", 4),
                state_budget,
                search_budget,
            ),
            None,
        )
    if claim == "thm-8.1":
        g, a = instance()
        try:
            host, host_assignment, report = construct_thm_8_1(g, a, state_budget, search_budget)
        except EmbeddingNotFoundError as exc:
            return (
                _instance_report("thm-8.1", a, HYPOTHESIS_NOT_MET, stats={"reason": str(exc)}),
                None,
            )
        return report, (host, host_assignment)
    raise UnknownClaimError(f"claim {claim!r} has no runner")  # pragma: no cover


def _tree_instance(g: OrientedGraph, a: Assignment) -> tuple[int, dict[str, int]] | str:
    root = g.is_downward_tree()
    if root is None:
        return "not a downward directed rooted tree"
    if a[root] not in (2, 3):
        return f"root holds {a[root]} pebbles, needs 2 or 3"
    for v in g.vertices:
        if v != root and g.valence(v) >= 1 and a[v] != 1:
            return f"non-root vertex {v!r} with outgoing edges holds {a[v]} pebbles, needs 1"
    leaves = {v: a[v] for v in g.sinks() if v != root}
    return a[root], leaves


def replay(report: VerificationReport, **kwargs) -> VerificationReport:
    """Re-run the checker on the instance embedded in a report."""
    return run_claim(report.claim, report.params, **kwargs)[0]
