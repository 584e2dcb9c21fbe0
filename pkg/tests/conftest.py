"""Shared graph specimens and random samplers for the test suite."""

import random

import pytest

from pathhom import DiGraph


def fig14():
    """Six vertices, eight edges; dim H = (1, 1, 0)."""
    return DiGraph(range(6), [(0, 1), (0, 2), (1, 3), (1, 4),
                              (2, 3), (2, 4), (5, 3), (5, 4)])


def fig19():
    """14 vertices, 23 edges; reduces to the directed hexagon 0..5."""
    V = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, "A", "B", "C", "D"]
    E = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
         (1, 7), (7, 2), (3, 6), (6, 4), (5, 8), (8, 0),
         (9, 0), (9, 1), ("B", 2), ("B", 3), ("C", 4), ("C", 5),
         ("A", 3), ("A", 4), ("D", 5), ("D", 0), ("D", 8)]
    return DiGraph(V, E)


def octahedron():
    """Sus(Sus({0,1} edgeless)): the 2-sphere graph with dim H_2 = 1."""
    return DiGraph(range(6), [(0, 2), (0, 3), (0, 4), (0, 5),
                              (1, 2), (1, 3), (1, 4), (1, 5),
                              (2, 4), (2, 5), (3, 4), (3, 5)])


def fig6a():
    """12 vertices, 32 edges; reduces to the octahedron."""
    V = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, "A", "B"]
    extra = [("A", 0), ("A", 2), ("A", 4), ("A", 5),
             ("B", 1), ("B", 3), ("B", 4), ("B", 5),
             (8, 2), (8, 4), (8, 5), (9, 3), (9, 4), (9, 5),
             (0, 6), (1, 6), (4, 6), (2, 7), (3, 7), (5, 7)]
    return DiGraph(V, list(octahedron().edges) + extra)


def fig33():
    """Monotone perfect digraph on 0..8; reduces to a star."""
    E = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8),
         (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
    return DiGraph(range(9), E)


def fig5b(m, n):
    """m left feeders into b -> c, n right collectors."""
    verts = [f"L{k}" for k in range(m)] + ["b", "c"] + [f"R{k}" for k in range(n)]
    E = [("b", "c")]
    for k in range(m):
        E += [(f"L{k}", "b"), (f"L{k}", "c")]
    for k in range(n):
        E += [("b", f"R{k}"), ("c", f"R{k}")]
    return DiGraph(verts, E)


def antisnake(k):
    """k chained triangle/bypass units; dim H_1 = k."""
    edges = [(1, 2), (2, 3), (3, 1), (2, 4), (4, 3)]
    x, y = 3, 4
    for j in range(2, k + 1):
        a, b = 2 * j + 1, 2 * j + 2
        edges += [(x, a), (a, y), (a, b), (b, y)]
        x, y = y, b
    return DiGraph(range(1, 2 * k + 3), edges)


def transitive_triangle():
    return DiGraph("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def source_sink_square():
    """a -> b -> c and a -> b' -> c."""
    return DiGraph(range(4), [(0, 1), (1, 2), (0, 3), (3, 2)])


def two_cycle():
    return DiGraph([0, 1], [(0, 1), (1, 0)])


def octahedron_triangulation_data():
    facets = [(0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5),
              (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
    signs = [1, -1, -1, 1, -1, 1, 1, -1]
    return facets, signs


def random_digraph(rng: random.Random, n_max: int, p: float,
                   allow_two_cycles: bool = True, n_min: int = 1) -> DiGraph:
    n = rng.randint(n_min, n_max)
    edges = []
    present = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if not allow_two_cycles and (j, i) in present:
                continue
            if rng.random() < p:
                edges.append((i, j))
                present.add((i, j))
    return DiGraph(range(n), edges)


@pytest.fixture
def rng():
    return random.Random(20240803)
