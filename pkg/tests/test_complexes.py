import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fig14, fig19, fig33, octahedron, random_digraph, transitive_triangle, two_cycle
from pathhom import (DiGraph, InputError, ResourceLimitError, SimplicialComplex,
                     allowed_basis, connected_components, explicit_complex,
                     from_digraph, from_simplicial, parse_digraph, parse_simplicial,
                     semi_edges, structural_report)
from pathhom.complexes import count_squares, count_triangles
from pathhom.functors import disjoint_union, snake_digraph


def test_digraph_validation():
    with pytest.raises(InputError):
        DiGraph([0], [(0, 0)])
    with pytest.raises(InputError):
        DiGraph([0, 1], [(0, 1), (0, 1)])
    with pytest.raises(InputError):
        DiGraph([0], [(0, 1)])


def test_from_digraph_examples():
    p = from_digraph(transitive_triangle())
    assert allowed_basis(p, 2) == (("a", "b", "c"),)

    p33 = from_digraph(fig33())
    assert allowed_basis(p33, 3) == ((0, 3, 4, 5), (0, 6, 7, 8))
    assert set(allowed_basis(p33, 2)) == {
        (0, 1, 2), (0, 3, 4), (0, 3, 5), (0, 4, 5), (0, 6, 7), (0, 6, 8),
        (0, 7, 8), (3, 4, 5), (6, 7, 8)}

    p2 = from_digraph(two_cycle())
    assert allowed_basis(p2, 3) == ((0, 1, 0, 1), (1, 0, 1, 0))
    assert len(allowed_basis(p2, 5)) == 2


def test_from_simplicial_examples():
    s = SimplicialComplex([0, 1, 2], [(0, 1, 2)])
    p = from_simplicial(s)
    assert allowed_basis(p, 2) == ((0, 1, 2),)
    assert allowed_basis(p, 1) == ((0, 1), (0, 2), (1, 2))

    # the two-triangle-fan complex with a solid tetrahedron-like top simplex
    pic32 = SimplicialComplex(range(9), [(0, 3, 4, 5), (0, 1, 2), (6, 7, 8),
                                         (0, 6), (0, 7), (0, 8)])
    p32 = from_simplicial(pic32)
    assert allowed_basis(p32, 3) == ((0, 3, 4, 5),)
    assert len(allowed_basis(p32, 1)) == 15

    empty = from_simplicial(SimplicialComplex([], []))
    assert allowed_basis(empty, -1) == ((),)
    assert allowed_basis(empty, 0) == ()
    assert allowed_basis(empty, 2) == ()


def test_explicit_complex_two_cycle_prefix():
    paths = {0: [(0,), (1,)], 1: [(0, 1), (1, 0)], 2: [(0, 1, 0), (1, 0, 1)]}
    p = explicit_complex(paths)
    assert p.is_allowed((0, 1, 0))
    assert not p.is_allowed((0, 1, 1))
    with pytest.raises(InputError):
        explicit_complex({0: [(0,)], 1: [(0, 1)]})  # vertex 1 missing at grade 0
    with pytest.raises(InputError):
        explicit_complex({0: [(0,), (1,), (2,)], 1: [(0, 1)], 2: [(0, 1, 2)]})


def test_truncation_closure_spot_check(rng):
    for _ in range(25):
        g = random_digraph(rng, 6, 0.35)
        p = from_digraph(g)
        for n in range(1, 4):
            for path in allowed_basis(p, n):
                assert p.is_allowed(path[:-1]) and p.is_allowed(path[1:])


def test_allowed_basis_counts(rng):
    p = from_digraph(fig14())
    assert allowed_basis(p, 2) == ((0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4))
    for _ in range(25):
        g = random_digraph(rng, 7, 0.3)
        p = from_digraph(g)
        assert len(allowed_basis(p, 0)) == len(g.vertices)
        assert len(allowed_basis(p, 1)) == len(g.edges)


def test_semi_edges_examples():
    found = semi_edges(fig14())
    assert [(s.tail, s.head) for s in found] == [(0, 3), (0, 4)]
    assert set(found[0].bridges) == {1, 2}
    assert semi_edges(octahedron()) == []
    assert semi_edges(transitive_triangle()) == []


def test_structural_report_examples():
    rep = structural_report(from_digraph(two_cycle()), depth=3)
    assert rep.regular and not rep.strictly_regular and not rep.monotone

    rep33 = structural_report(from_digraph(fig33()), depth=3)
    assert rep33.monotone and rep33.perfect_up_to_depth

    # snake(3) has squares: 0->1->3 and 0->2->3 share endpoints
    snake = structural_report(from_digraph(snake_digraph(3)), depth=3)
    assert snake.triangles == 2
    assert snake.squares == 1


def test_census_counts():
    assert count_triangles(snake_digraph(2)) == 1
    assert count_squares(snake_digraph(2)) == 0
    # cross-check the octahedron square count by brute force
    g = octahedron()
    brute = 0
    for a in g.vertices:
        for b in g.vertices:
            for b2 in g.vertices:
                if b2 <= b:
                    continue
                for c in g.vertices:
                    if len({a, b, b2, c}) == 4 and g.has_edge(a, b) \
                            and g.has_edge(a, b2) and g.has_edge(b, c) and g.has_edge(b2, c):
                        brute += 1
    assert count_squares(g) == brute


def test_perfect_iff_transitive(rng):
    for _ in range(40):
        g = random_digraph(rng, 5, 0.4)
        p = from_digraph(g)
        transitive = all(g.has_edge(i, k)
                         for (i, j) in g.edges for k in g.out_map()[j] if i != k)
        assert p.perfect_up_to(3) == transitive


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_simplicial_is_perfect_and_strictly_regular(data):
    n = data.draw(st.integers(1, 6))
    simplices = data.draw(st.lists(
        st.sets(st.integers(0, n - 1), min_size=1, max_size=4), min_size=1, max_size=4))
    s = SimplicialComplex(range(n), [tuple(sorted(x)) for x in simplices])
    p = from_simplicial(s)
    rep = structural_report(p, depth=3)
    assert rep.strictly_regular
    assert rep.perfect_up_to_depth
    assert rep.monotone


def test_connected_components():
    two_triangles = disjoint_union(transitive_triangle(), transitive_triangle())
    assert len(connected_components(from_digraph(two_triangles))) == 2
    assert len(connected_components(from_digraph(fig19()))) == 1
    assert len(connected_components(from_digraph(DiGraph([0, 1], [])))) == 2


def test_path_cap():
    g = two_cycle()
    p = from_digraph(g)
    p.max_paths = 3
    p._cache.clear()
    assert len(p.paths(2)) == 2
    with pytest.raises(ResourceLimitError):
        # the cap counts per grade; force it low enough to trip
        p.max_paths = 1
        p._cache.clear()
        p.paths(2)


def test_digraph_text_round_trip():
    g = fig14()
    text = g.to_text()
    assert parse_digraph(text).edges == g.edges
    g_iso = DiGraph([0, 1, 2], [(0, 1)])
    again = parse_digraph(g_iso.to_text())
    assert again.vertices == g_iso.vertices
    with pytest.raises(InputError):
        parse_digraph("0 1 2\n")


def test_simplicial_text():
    s = parse_simplicial("0 1 2\n3 4\n# comment\n")
    assert s.maximal_simplices == ((0, 1, 2), (3, 4))
