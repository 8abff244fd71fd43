import pytest

from pseudotri import (
    GeomGraph,
    NotPointedInput,
    PointSet,
    canonical_ppt,
    complete_to_ppt,
    validate,
)
from pseudotri.randgen import random_point_set

from conftest import SQUARE, TRIANGLE, TRIANGLE_PLUS_INTERIOR


def test_canonical_triangle():
    t = canonical_ppt(TRIANGLE)
    assert t.graph.edges == ((0, 1), (0, 2), (1, 2))
    assert len(t.faces) == 1


def test_canonical_four_points_frozen():
    # lexicographic sweep: triangle on the first three sorted points, then
    # the fourth attaches to the two hull tangents
    ps = PointSet(((0, 0), (1, 1), (4, 0), (0, 4)))
    t = canonical_ppt(ps)
    assert t.graph.edges == ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3))
    assert len(t.faces) == 2
    assert t.is_pointed


def test_canonical_n10_counts():
    ps = random_point_set(10, 42)
    t = canonical_ppt(ps)
    assert len(t.graph.edges) == 17
    assert len(t.faces) == 8


def test_canonical_validates_pointed_over_random_sizes():
    for n in range(3, 31, 3):
        for trial in range(3):
            ps = random_point_set(n, 1000 * n + trial)
            t = canonical_ppt(ps)
            rep = t.report
            assert rep.is_pseudo_triangulation and rep.is_pointed
            assert rep.face_count == n - 2
            assert rep.edge_count == 2 * n - 3


def test_canonical_is_deterministic():
    ps = random_point_set(12, 7)
    assert canonical_ppt(ps).graph.edges == canonical_ppt(ps).graph.edges


def test_complete_convex_quad_adds_short_lex_diagonal():
    g = GeomGraph(SQUARE, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = complete_to_ppt(g)
    # both diagonals tie on length; the (0, 2) one wins by index order
    assert t.graph.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))


def test_complete_from_empty_edge_set():
    for n, seed in ((5, 1), (8, 2), (12, 3)):
        ps = random_point_set(n, seed)
        t = complete_to_ppt(GeomGraph(ps, []))
        assert t.is_pointed
        assert len(t.graph.edges) == 2 * n - 3


def test_complete_preserves_an_open_chain():
    ps = random_point_set(5, 505)
    order = sorted(range(5), key=lambda i: ps[i])
    chain = [(order[i], order[i + 1]) for i in range(4)]
    # visiting points in lexicographic order never self-crosses
    t = complete_to_ppt(GeomGraph(ps, chain))
    have = set(t.graph.edges)
    assert all(tuple(sorted(e)) in have for e in chain)
    assert t.is_pointed
    assert len(t.graph.edges) == 7


def test_complete_is_idempotent_on_ppts():
    ps = random_point_set(9, 99)
    t = canonical_ppt(ps)
    again = complete_to_ppt(t.graph)
    assert again.graph.edges == t.graph.edges


def test_complete_is_monotone():
    ps = random_point_set(8, 88)
    t = canonical_ppt(ps)
    partial = GeomGraph(ps, t.graph.edges[:5])
    out = complete_to_ppt(partial)
    assert set(partial.edges) <= set(out.graph.edges)


def test_complete_rejects_non_pointed_input():
    spokes = GeomGraph(TRIANGLE_PLUS_INTERIOR, [(0, 3), (1, 3), (2, 3)])
    with pytest.raises(NotPointedInput):
        complete_to_ppt(spokes)


def test_complete_allows_isolated_vertices():
    ps = random_point_set(6, 66)
    t = complete_to_ppt(GeomGraph(ps, [tuple(sorted(ps.hull[:2]))]))
    assert t.is_pointed
    assert validate(t.graph).violations == []
