from __future__ import annotations

import random

import pytest

from pebblab import (
    Assignment,
    EmbeddingNotFoundError,
    GraphError,
    UnknownClaimError,
    build,
    canonical_pair_key,
    check_thm_2_1,
    classify_downward_4_cycle,
    construct_thm_8_1,
    downward_cycle,
    new_graph,
    oriented_complete_bipartite,
    oriented_path,
    replay,
    run_claim,
    search_isomorphic_pairs,
    simple_assignment,
    tree_assignment,
    verify_cor_1_1,
    verify_cor_1_2,
    verify_cor_2_1,
    verify_cor_7_1,
    verify_lemma_7_1,
    verify_lemma_7_2,
    verify_prop_1_1,
    verify_sec_6,
    verify_thm_2_2,
    verify_thm_3_1,
    verify_thm_4_1,
    verify_thm_5_1,
    verify_thm_7_1,
    verify_thm_7_2,
)
from pebblab.pebbling import near_sink_assignment
from pebblab.theorems import (
    BUDGET_EXCEEDED,
    COUNTEREXAMPLE,
    HOLDS,
    HYPOTHESIS_NOT_MET,
)
from conftest import star_tree


# -- prop 1.1 and its corollaries ---------------------------------------------


def test_prop_1_1_holds_on_trees():
    star = star_tree(3)
    report = verify_prop_1_1(star, tree_assignment(star, 2))
    assert report.verdict == HOLDS


def test_prop_1_1_gates_on_full_traversability():
    c4 = downward_cycle(4)
    report = verify_prop_1_1(c4, Assignment(c4, {"l1": 2, "r1": 2}))
    assert report.verdict == HYPOTHESIS_NOT_MET
    assert report.stats["fully_traversable"] is False


def test_prop_1_1_heavy_source_path_not_isomorphic():
    # (4,0,m) on a 3-path: the chain of states is one longer than the path,
    # so the isomorphism gate fails even though both edges get traversed
    p3 = oriented_path(3)
    a = Assignment(p3, {"a1": 4, "a3": 1})
    ag = build(p3, a)
    assert len(ag.states) == 4
    assert ag.is_fully_traversable()
    report = verify_prop_1_1(p3, a)
    assert report.verdict == HYPOTHESIS_NOT_MET
    assert report.stats["isomorphic"] is False


def test_cor_1_1_holds_and_gates():
    p3 = oriented_path(3)
    assert verify_cor_1_1(p3, tree_assignment(p3, 3)).verdict == HOLDS
    single = new_graph(["a"])
    report = verify_cor_1_1(single, Assignment(single, {"a": 5}))
    assert report.verdict == HYPOTHESIS_NOT_MET


def test_cor_1_1_heavy_leaf_discrepancy_is_flagged():
    star = star_tree(2)
    a = tree_assignment(star, 2, {"leaf1": 9})
    report = verify_cor_1_1(star, a)
    assert report.verdict == COUNTEREXAMPLE
    assert report.witness == {"pebbles": {"leaf1": 9}}
    assert report.notes  # inert-vertex discrepancy note


def test_cor_1_2_holds_on_side_family():
    c4 = downward_cycle(4)
    report = verify_cor_1_2(c4, Assignment(c4, {"l1": 2, "r1": 3}))
    assert report.verdict == HOLDS
    assert report.stats["max_traversal"] >= 2


def test_cor_1_2_gates():
    single = new_graph(["a"])
    assert verify_cor_1_2(single, Assignment(single, {"a": 5})).verdict == HYPOTHESIS_NOT_MET
    p3 = oriented_path(3)
    assert verify_cor_1_2(p3, tree_assignment(p3, 2)).verdict == HYPOTHESIS_NOT_MET


# -- thm 2.1 / 2.2 ------------------------------------------------------------


def test_thm_2_1_examples():
    c4 = downward_cycle(4)
    report = check_thm_2_1(c4, Assignment(c4, {"top": 4}))
    assert report.verdict == HOLDS
    assert report.stats["contains_downward_4_cycle"] is True

    p5 = oriented_path(5)
    report = check_thm_2_1(p5, simple_assignment(p5, 2))
    assert report.verdict == HOLDS
    assert report.stats["contains_downward_4_cycle"] is False

    two_paths = new_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    report = check_thm_2_1(two_paths, Assignment(two_paths, {"a": 2, "c": 2}))
    assert report.verdict == HOLDS
    assert report.stats["contains_downward_4_cycle"] is True


def test_thm_2_1_movability_evolves_along_moves():
    # (4,1,0) on a 3-path: only one vertex is movable at the start, but the
    # reachable state (2,2,0) has two, and the diamond appears there
    p3 = oriented_path(3)
    report = check_thm_2_1(p3, Assignment(p3, {"a1": 4, "a2": 1}))
    assert report.verdict == HOLDS
    assert report.stats["contains_downward_4_cycle"] is True


def test_thm_2_1_budget():
    c6 = downward_cycle(6)
    report = check_thm_2_1(c6, Assignment(c6, {"top": 6, "l1": 6, "r1": 6}), state_budget=5)
    assert report.verdict == BUDGET_EXCEEDED


def test_thm_2_2_holds_and_gates():
    c4 = downward_cycle(4)
    # (2,1,1,0) is fully traversable: both branches appear across the state graph
    report = verify_thm_2_2(c4, Assignment(c4, {"top": 2, "l1": 1, "r1": 1}))
    assert report.verdict == HOLDS
    assert report.stats["fully_traversable"] is True
    assert verify_thm_2_2(c4, Assignment(c4, {"l1": 2, "r1": 2})).verdict == HYPOTHESIS_NOT_MET
    # no downward 4-cycle subgraph: the bipartite sinks have no out-edges
    k22 = oriented_complete_bipartite(2, 2)
    gated = verify_thm_2_2(k22, Assignment(k22, {"a1": 2, "a2": 2}))
    assert gated.verdict == HYPOTHESIS_NOT_MET
    assert gated.stats["has_downward_4_cycle"] is False


# -- cor 2.1 ------------------------------------------------------------------


def test_classification_families_cap_4_and_6():
    for cap in (4, 6):
        result = classify_downward_4_cycle(cap)
        families = sorted(p.counts[:3] for p in result.pairs)
        assert families == [
            (0, 2, 2),
            (0, 2, 3),
            (0, 3, 3),
            (1, 2, 2),
            (1, 2, 3),
            (1, 3, 3),
        ]


def test_classification_families_have_no_movable_root():
    result = classify_downward_4_cycle(4)
    g = downward_cycle(4)
    for pair in result.pairs:
        assert not Assignment(g, pair.counts).is_movable("top")
        assert not pair.fully_traversable


def test_classification_rejects_small_cap():
    with pytest.raises(ValueError):
        classify_downward_4_cycle(3)


def test_cor_2_1_report():
    report, result = verify_cor_2_1(4)
    assert report.verdict == HOLDS
    assert len(result.pairs) == 6


# -- thm 3.1 ------------------------------------------------------------------


def test_thm_3_1_rejects_k_4_and_odd():
    with pytest.raises(GraphError):
        verify_thm_3_1(4, 4)
    with pytest.raises(GraphError):
        verify_thm_3_1(5, 4)


def test_thm_3_1_small():
    report = verify_thm_3_1(6, 3)
    assert report.verdict == HOLDS
    assert report.stats["isomorphic_found"] == 0
    assert report.stats["scanned"] == 4**5


# -- thm 4.1 ------------------------------------------------------------------


def test_thm_4_1_holds_on_bipartite_sources():
    k22 = oriented_complete_bipartite(2, 2)
    report = verify_thm_4_1(k22, Assignment(k22, {"a1": 2, "a2": 2}))
    assert report.verdict == HOLDS
    assert report.stats["fully_traversable"] is True


def test_thm_4_1_gates():
    p3 = oriented_path(3)
    assert verify_thm_4_1(p3, tree_assignment(p3, 2)).verdict == HYPOTHESIS_NOT_MET
    c4 = downward_cycle(4)
    assert verify_thm_4_1(c4, Assignment(c4, {"l1": 2, "r1": 2})).verdict == HYPOTHESIS_NOT_MET


# -- thm 5.1 ------------------------------------------------------------------


def test_thm_5_1_examples():
    p3 = oriented_path(3)
    report = verify_thm_5_1(p3, 2)
    assert report.verdict == HOLDS
    assert report.stats["explicit_map_verified"] is True
    star = star_tree(4)
    assert verify_thm_5_1(star, 3).verdict == HOLDS


def test_thm_5_1_random_tree():
    rng = random.Random(12)
    from pebblab import random_downward_tree

    tree = random_downward_tree(rng, 12)
    leaves = {v: rng.randint(0, 9) for v in tree.sinks()}
    assert verify_thm_5_1(tree, 2, leaves).verdict == HOLDS


# -- sec 6 --------------------------------------------------------------------


def test_sec_6_tiny_caps():
    report, result = verify_sec_6(2, 4)
    assert report.verdict == HOLDS
    # exactly the one-edge trees with source 2 or 3
    assert sorted(p.counts for p in result.pairs) == [(2, 0), (3, 0)]

    report, result = verify_sec_6(1, 4)
    assert report.verdict == HOLDS
    assert result.pairs == []


def test_search_any_includes_edgeless_and_paths():
    result = search_isomorphic_pairs(2, 4, ft_filter=None)
    keys = {(len(p.graph.vertices), len(p.graph.edges), p.counts) for p in result.pairs}
    assert keys == {(1, 0, (0,)), (2, 1, (2, 0)), (2, 1, (3, 0))}


def test_search_not_fully_traversable_excludes_trees():
    result = search_isomorphic_pairs(2, 4, ft_filter=False)
    # only the edgeless single vertex: its one-state graph has nothing to traverse
    keys = {(len(p.graph.vertices), len(p.graph.edges), p.counts) for p in result.pairs}
    assert keys == {(1, 0, (0,))}


# -- section 7 ----------------------------------------------------------------


def test_thm_7_1_examples():
    assert verify_thm_7_1([2, 2], [2, 2]).verdict == HOLDS
    assert verify_thm_7_1([2, 2], [3, 3]).verdict == HOLDS
    report = verify_thm_7_1([2, 2, 2], [2, 2, 2])
    assert report.verdict == HOLDS
    assert report.stats == {"vertices": 8, "edges": 12}
    assert verify_thm_7_1([4], [2]).verdict == HOLDS


def test_lemma_7_1_examples():
    report = verify_lemma_7_1(3, 4, fill=1)
    assert report.verdict == HOLDS
    assert verify_lemma_7_1(2, 2).verdict == HOLDS
    assert verify_lemma_7_1(4, 4).verdict == HYPOTHESIS_NOT_MET  # length mismatch


def test_lemma_7_1_state_chain():
    # frozen from hand simulation: (1,4,m) -> (1,2,m+1) -> (1,0,m+2)
    p3 = oriented_path(3)
    a = near_sink_assignment(p3, 4, sink_pebbles=0, fill=1)
    ag = build(p3, a)
    assert ag.states == ((1, 4, 0), (1, 2, 1), (1, 0, 2))


def test_lemma_7_2_examples():
    report = verify_lemma_7_2(4, 1, 4, fill=0)
    assert report.verdict == HOLDS
    assert report.stats["traversed_edges"] == 2
    # stalls early: only 2 of 4 edges traversed, gate needs 3
    report = verify_lemma_7_2(5, 1, 4, fill=0)
    assert report.verdict == HYPOTHESIS_NOT_MET


def test_lemma_7_2_state_chain():
    # frozen from hand simulation: (4,0,0,m) -> (2,1,0,m) -> (0,2,0,m) -> (0,0,1,m)
    p4 = oriented_path(4)
    from pebblab import heavy_step_assignment

    ag = build(p4, heavy_step_assignment(p4, 1, 4, fill=0))
    assert ag.states == ((4, 0, 0, 0), (2, 1, 0, 0), (0, 2, 0, 0), (0, 0, 1, 0))


def test_cor_7_1_gating_and_holds():
    p3 = oriented_path(3)
    p2 = oriented_path(2)
    good = [(p3, near_sink_assignment(p3, 4, fill=1)), (p2, simple_assignment(p2, 2))]
    assert verify_cor_7_1(good).verdict == HOLDS
    bad = [(p3, near_sink_assignment(p3, 2, fill=1))]  # state chain too short
    assert verify_cor_7_1(bad).verdict == HYPOTHESIS_NOT_MET


def test_thm_7_2_small_cases():
    for n, m in ((1, 1), (1, 2), (1, 3), (2, 1)):
        report = verify_thm_7_2(n, m)
        assert report.verdict == HOLDS, (n, m)
        assert report.witness["subgraph"]
    report = verify_thm_7_2(2, 1)
    # the construction is the downward 4-cycle; a side family certifies it
    counts = report.witness["assignment"]
    assert sorted(counts.values()) == [0, 0, 2, 2]


def test_thm_7_2_budget_paths():
    report = verify_thm_7_2(2, 2, search_cap=0)
    assert report.verdict == BUDGET_EXCEEDED
    report = verify_thm_7_2(2, 2, scan_budget=5)
    assert report.verdict == BUDGET_EXCEEDED


# -- thm 8.1 ------------------------------------------------------------------


def test_thm_8_1_identity_cases():
    p3 = oriented_path(3)
    host, host_a, report = construct_thm_8_1(p3, simple_assignment(p3, 2))
    assert report.verdict == HOLDS
    assert len(host.vertices) == 3
    p2 = oriented_path(2)
    _, _, report = construct_thm_8_1(p2, simple_assignment(p2, 2))
    assert report.verdict == HOLDS


def test_thm_8_1_four_cycle():
    c4 = downward_cycle(4)
    host, host_a, report = construct_thm_8_1(c4, Assignment(c4, {"top": 4}))
    assert report.verdict == HOLDS
    assert len(host.vertices) == 7
    assert report.stats["original_states"] == report.stats["host_states"] == 7
    # the embedded copy carries the original pebbles, everything else zero
    assert sorted(host_a.counts) == [0, 0, 0, 0, 0, 0, 4]


def test_thm_8_1_embedding_not_found():
    triangle = new_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(EmbeddingNotFoundError):
        construct_thm_8_1(triangle, Assignment(triangle, {"a": 4}))


# -- claim runner and replay ---------------------------------------------------


def test_run_claim_unknown():
    with pytest.raises(UnknownClaimError) as err:
        run_claim("thm-9.9", {})
    assert "thm-5.1" in str(err.value)


def test_run_claim_instance_roundtrip():
    from pebblab import format_assignment

    c4 = downward_cycle(4)
    text = format_assignment(Assignment(c4, {"top": 4}))
    report, _ = run_claim("thm-2.1", {"input": text})
    assert report.verdict == HOLDS


def test_run_claim_tree_decomposition_gates():
    g = oriented_path(3)
    text = "v a 2\nv b 2\nv c 0\ne a b\ne b c\n"
    report, _ = run_claim("thm-5.1", {"input": text})
    assert report.verdict == HYPOTHESIS_NOT_MET
    good = "v a 2\nv b 1\nv c 5\ne a b\ne b c\n"
    report, _ = run_claim("thm-5.1", {"input": good})
    assert report.verdict == HOLDS


def test_run_claim_thm_8_1_embedding_gate():
    text = "v a 4\nv b 0\nv c 0\ne a b\ne b c\ne c a\n"
    report, _ = run_claim("thm-8.1", {"input": text})
    assert report.verdict == HYPOTHESIS_NOT_MET


def test_replay_reproduces_verdicts():
    star = star_tree(2)
    reports = [
        verify_cor_1_1(star, tree_assignment(star, 2, {"leaf1": 9})),
        verify_prop_1_1(star, tree_assignment(star, 2)),
        verify_thm_3_1(6, 3),
        verify_lemma_7_1(3, 4),
        verify_lemma_7_2(4, 1, 4, fill=0),
        verify_thm_7_2(2, 1),
    ]
    for report in reports:
        assert replay(report).verdict == report.verdict, report.claim


def test_canonical_pair_key_relabel_invariance():
    rng = random.Random(9)
    star = star_tree(3)
    counts = tree_assignment(star, 2, {"leaf2": 0}).counts
    key = canonical_pair_key(star, counts)
    for _ in range(20):
        names = list(star.vertices)
        shuffled = names[:]
        rng.shuffle(shuffled)
        mapping = dict(zip(names, shuffled))
        relabeled = star.relabel(mapping)
        moved = tuple(
            dict(zip([mapping[v] for v in star.vertices], counts))[v]
            for v in relabeled.vertices
        )
        assert canonical_pair_key(relabeled, moved) == key
    other = canonical_pair_key(star, tree_assignment(star, 3).counts)
    assert other != key


def test_cor_1_2_holds_on_every_classified_family():
    # not fully traversable + isomorphic forces a repeated edge
    g = downward_cycle(4)
    for pair in classify_downward_4_cycle(4).pairs:
        report = verify_cor_1_2(g, Assignment(g, pair.counts))
        assert report.verdict == HOLDS, pair.counts


def test_no_fully_traversable_pair_contains_a_downward_4_cycle():
    from pebblab import find_downward_4_cycle

    result = search_isomorphic_pairs(4, 4, ft_filter=True)
    assert result.pairs
    for pair in result.pairs:
        assert find_downward_4_cycle(pair.graph) is None


def test_shards_give_identical_results():
    single = classify_downward_4_cycle(4, shards=1)
    sharded = classify_downward_4_cycle(4, shards=2)
    assert [(p.counts, p.fully_traversable) for p in single.pairs] == [
        (p.counts, p.fully_traversable) for p in sharded.pairs
    ]
    assert single.scanned == sharded.scanned
