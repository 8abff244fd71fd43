import itertools

import pytest

from pseudotri import (
    InvalidPointSet,
    Point,
    PointSet,
    convex_hull,
    is_pointed_at,
    orientation,
    segments_cross,
)
from pseudotri.randgen import SplitMix64, random_point_set

from oracles import hull_vertex_set, pointed_oracle


P = Point


def test_orientation_ccw():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1


def test_orientation_collinear():
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) == 0


def test_orientation_cw():
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1


def test_orientation_antisymmetric_under_swaps():
    rng = SplitMix64(7)
    for _ in range(300):
        a = P(rng.randrange(50), rng.randrange(50))
        b = P(rng.randrange(50), rng.randrange(50))
        c = P(rng.randrange(50), rng.randrange(50))
        o = orientation(a, b, c)
        assert orientation(b, a, c) == -o
        assert orientation(a, c, b) == -o
        assert orientation(c, b, a) == -o


def test_orientation_huge_coordinates_exact():
    big = 10**30
    assert orientation(P(0, 0), P(big, 1), P(2 * big, 2)) == 0
    assert orientation(P(0, 0), P(big, 1), P(2 * big, 3)) == 1


def test_segments_cross_x():
    assert segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))


def test_segments_cross_shared_endpoint_only():
    assert not segments_cross(P(0, 0), P(1, 0), P(1, 0), P(2, 1))


def test_segments_cross_collinear_overlap():
    assert segments_cross(P(0, 0), P(2, 0), P(1, 0), P(3, 0))


def test_segments_cross_more_cases():
    # endpoint interior to the other segment (T junction)
    assert segments_cross(P(0, 0), P(4, 0), P(2, 0), P(2, 3))
    # collinear but disjoint
    assert not segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
    # collinear, endpoint-to-endpoint only
    assert not segments_cross(P(0, 0), P(1, 0), P(1, 0), P(3, 0))
    # shared endpoint with collinear continuation the other way
    assert not segments_cross(P(0, 0), P(2, 0), P(0, 0), P(0, 2))
    # fully separated
    assert not segments_cross(P(0, 0), P(1, 1), P(3, 0), P(4, 1))
    # one segment contains the other
    assert segments_cross(P(0, 0), P(5, 0), P(1, 0), P(2, 0))


def test_convex_hull_square_with_center():
    ps = PointSet(((0, 0), (2, 0), (2, 2), (0, 2), (1, 1)))
    assert convex_hull(ps) == [0, 1, 2, 3]


def test_convex_hull_triangle():
    ps = PointSet(((0, 0), (4, 0), (0, 4)))
    assert convex_hull(ps) == [0, 1, 2]


def test_convex_hull_seven_points_frozen():
    # expected computed with the triangle-containment oracle
    ps = PointSet(((0, 0), (10, 1), (4, 4), (6, 9), (1, 8), (9, 7), (5, 2)))
    hull = convex_hull(ps)
    assert hull == [0, 1, 5, 3, 4]
    assert set(hull) == hull_vertex_set([(p.x, p.y) for p in ps])


def test_convex_hull_matches_oracle_on_random_sets():
    for n in range(3, 13):
        for t in range(4):
            ps = random_point_set(n, 300 * n + t)
            hull = convex_hull(ps)
            assert set(hull) == hull_vertex_set([(p.x, p.y) for p in ps])
            # counterclockwise and starting at the lexicographically smallest point
            assert hull[0] == min(range(n), key=lambda i: ps[i])
            m = len(hull)
            for i in range(m):
                a, b, c = hull[i], hull[(i + 1) % m], hull[(i + 2) % m]
                assert orientation(ps[a], ps[b], ps[c]) == 1


def test_is_pointed_at_interior_vertex():
    assert not is_pointed_at(P(1, 1), [P(0, 0), P(4, 0), P(0, 4)])


def test_is_pointed_at_quadrant():
    assert is_pointed_at(P(0, 0), [P(1, 0), P(0, 1)])


def test_is_pointed_at_three_directions_frozen():
    # gaps are 135, 90 and 135 degrees; the oracle agrees nothing exceeds pi
    dirs = [(1, 0), (-1, 1), (-1, -1)]
    assert pointed_oracle(dirs) is False
    assert not is_pointed_at(P(0, 0), [P(*d) for d in dirs])


def test_is_pointed_at_exactly_opposite_is_not_pointed():
    assert not is_pointed_at(P(0, 0), [P(1, 0), P(-1, 0)])
    assert not is_pointed_at(P(0, 0), [P(1, 0), P(0, 1), P(-1, 0)])


def test_is_pointed_at_single_neighbor():
    assert is_pointed_at(P(5, 5), [P(6, 9)])


def test_is_pointed_at_duplicate_ray():
    assert is_pointed_at(P(0, 0), [P(1, 2), P(2, 4), P(3, 6)])


def test_is_pointed_at_scaling_invariance():
    rng = SplitMix64(17)
    for _ in range(200):
        k = 2 + rng.randrange(3)
        dirs = []
        while len(dirs) < k:
            d = (rng.randrange(21) - 10, rng.randrange(21) - 10)
            if d != (0, 0):
                dirs.append(d)
        base = is_pointed_at(P(0, 0), [P(*d) for d in dirs])
        scaled = [P(d[0] * (1 + rng.randrange(9)), d[1] * (1 + rng.randrange(9))) for d in dirs]
        # scale each direction independently, then rebuild exact multiples
        scaled = [P(d[0] * s, d[1] * s) for d, s in zip(dirs, [1 + rng.randrange(9) for _ in dirs])]
        assert is_pointed_at(P(0, 0), scaled) == base


def test_is_pointed_at_matches_halfplane_oracle():
    rng = SplitMix64(23)
    for _ in range(400):
        k = 1 + rng.randrange(5)
        dirs = []
        while len(dirs) < k:
            d = (rng.randrange(13) - 6, rng.randrange(13) - 6)
            if d != (0, 0):
                dirs.append(d)
        got = is_pointed_at(P(0, 0), [P(*d) for d in dirs])
        assert got == pointed_oracle(dirs)


def test_is_pointed_at_rejects_bad_input():
    with pytest.raises(ValueError):
        is_pointed_at(P(0, 0), [])
    with pytest.raises(ValueError):
        is_pointed_at(P(3, 3), [P(3, 3)])


def test_point_requires_integers():
    with pytest.raises(TypeError):
        Point(1.5, 2)  # type: ignore[arg-type]


def test_pointset_rejects_too_few():
    with pytest.raises(InvalidPointSet):
        PointSet(((0, 0), (1, 1)))


def test_pointset_rejects_duplicates():
    with pytest.raises(InvalidPointSet):
        PointSet(((0, 0), (1, 1), (0, 0)))


def test_pointset_rejects_collinear():
    with pytest.raises(InvalidPointSet):
        PointSet(((0, 0), (1, 1), (2, 2), (5, 0)))


def test_pointset_accepts_tuples_and_is_hashable():
    ps = PointSet(((0, 0), (3, 1), (1, 3)))
    assert ps.n == 3
    assert ps[1] == Point(3, 1)
    assert hash(ps) == hash(PointSet((Point(0, 0), Point(3, 1), Point(1, 3))))
