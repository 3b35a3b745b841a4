"""Instance generators: exhaustive enumeration up to isomorphism and seeded
random families for property batches."""

from __future__ import annotations

import random
from itertools import combinations, product

from .graphs import OrientedGraph
from .iso import canonical_form
from .pebbling import Assignment


def enumerate_oriented_graphs(max_vertices: int, min_vertices: int = 1) -> list[OrientedGraph]:
    """All oriented graphs with ``min_vertices`` to ``max_vertices``
    vertices, one representative per isomorphism class.

    Generates every orientation choice (absent, forward, backward) per
    vertex pair and deduplicates by canonical form; feasible up to five or
    so vertices.
    """
    out: list[OrientedGraph] = []
    for n in range(min_vertices, max_vertices + 1):
        names = [f"v{i}" for i in range(n)]
        pairs = list(combinations(range(n), 2))
        seen: set[bytes] = set()
        for choice in product((0, 1, 2), repeat=len(pairs)):
            edges = []
            for (i, j), c in zip(pairs, choice):
                if c == 1:
                    edges.append((names[i], names[j]))
                elif c == 2:
                    edges.append((names[j], names[i]))
            g = OrientedGraph(names, edges)
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def enumerate_downward_trees(max_vertices: int, min_vertices: int = 1) -> list[OrientedGraph]:
    """All downward directed rooted trees up to isomorphism.

    Built from parent arrays (vertex i > 0 attaches below some vertex j < i)
    rather than from orientation enumeration, so this is an independent
    source of the tree family.
    """
    out: list[OrientedGraph] = []
    for n in range(min_vertices, max_vertices + 1):
        names = [f"t{i}" for i in range(n)]
        seen: set[bytes] = set()
        for parents in product(*(range(i) for i in range(1, n))):
            g = OrientedGraph(names, ((names[p], names[i + 1]) for i, p in enumerate(parents)))
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def random_oriented_graph(
    rng: random.Random,
    n: int,
    edge_probability: float = 0.5,
) -> OrientedGraph:
    names = [f"v{i}" for i in range(n)]
    edges = []
    for i, j in combinations(range(n), 2):
        if rng.random() < edge_probability:
            if rng.random() < 0.5:
                edges.append((names[i], names[j]))
            else:
                edges.append((names[j], names[i]))
    return OrientedGraph(names, edges)


def random_downward_tree(rng: random.Random, n: int) -> OrientedGraph:
    names = [f"t{i}" for i in range(n)]
    edges = [(names[rng.randrange(i)], names[i]) for i in range(1, n)]
    return OrientedGraph(names, edges)


# Skewed toward small counts so random state graphs stay desk-sized.
_COUNT_POOL = (0, 0, 0, 0, 1, 1, 2, 2, 3, 4, 5, 6)


def random_assignment(rng: random.Random, g: OrientedGraph, max_count: int = 6) -> Assignment:
    counts = [min(rng.choice(_COUNT_POOL), max_count) for _ in g.vertices]
    return Assignment(g, counts)
