from __future__ import annotations

import random

from pebblab import (
    canonical_form,
    enumerate_downward_trees,
    enumerate_oriented_graphs,
    random_assignment,
    random_downward_tree,
    random_oriented_graph,
)
from oracles import brute_isomorphisms


def _brute_class_count(graphs):
    reps = []
    for g in graphs:
        if not any(brute_isomorphisms(g, r) for r in reps):
            reps.append(g)
    return len(reps)


def test_enumerate_oriented_graph_counts():
    # class counts cross-checked by pairwise brute-force isomorphism
    for n, expected in ((1, 1), (2, 2), (3, 7)):
        exact = enumerate_oriented_graphs(n, min_vertices=n)
        assert len(exact) == expected
        assert _brute_class_count(exact) == len(exact)
    assert len(enumerate_oriented_graphs(4, min_vertices=4)) == 42
    assert len(enumerate_oriented_graphs(4)) == 52


def test_enumeration_has_no_duplicates():
    graphs = enumerate_oriented_graphs(4)
    forms = [canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(forms)


def test_enumerate_downward_trees_counts():
    for n, expected in ((1, 1), (2, 1), (3, 2), (4, 4), (5, 9)):
        trees = enumerate_downward_trees(n, min_vertices=n)
        assert len(trees) == expected
        for t in trees:
            assert t.is_downward_tree() is not None
        if n <= 4:
            assert _brute_class_count(trees) == len(trees)


def test_trees_are_a_subset_of_the_enumeration():
    tree_forms = {canonical_form(t) for t in enumerate_downward_trees(4)}
    all_forms = {canonical_form(g) for g in enumerate_oriented_graphs(4)}
    assert tree_forms <= all_forms


def test_random_downward_tree_is_a_tree():
    rng = random.Random(3)
    for _ in range(50):
        t = random_downward_tree(rng, rng.randint(1, 12))
        assert t.is_downward_tree() is not None


def test_random_oriented_graph_is_oriented():
    rng = random.Random(4)
    for _ in range(50):
        g = random_oriented_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
        for u, w in g.edges:
            assert not g.has_edge(w, u)


def test_random_assignment_bounds():
    rng = random.Random(5)
    g = random_oriented_graph(rng, 6)
    for _ in range(20):
        a = random_assignment(rng, g, 6)
        assert all(0 <= c <= 6 for c in a.counts)


def test_generators_are_seed_deterministic():
    g1 = random_oriented_graph(random.Random(42), 7, 0.4)
    g2 = random_oriented_graph(random.Random(42), 7, 0.4)
    assert g1 == g2
    t1 = random_downward_tree(random.Random(42), 9)
    t2 = random_downward_tree(random.Random(42), 9)
    assert t1 == t2
