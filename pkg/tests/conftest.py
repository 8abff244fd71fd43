import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pseudotri import PointSet
from pseudotri.enumeration import enumerate_ppt, enumerate_triangulations
from pseudotri.randgen import SplitMix64, random_point_set


def moment_polygon(k: int) -> PointSet:
    """k points on the parabola: convex position, never three collinear."""
    return PointSet(tuple((i, i * i) for i in range(k)))


def triangle_cluster(n: int, seed: int) -> PointSet:
    """A big triangle with n-3 points clustered strictly inside, near the middle."""
    rng = SplitMix64(seed)
    pts = [(0, 0), (4000, 0), (0, 4000)]
    while len(pts) < n:
        x = 900 + rng.randrange(1200)
        y = 900 + rng.randrange(1200)
        if x + y >= 4000:
            continue
        ok = (x, y) not in pts
        if ok:
            for i in range(len(pts)):
                xi, yi = pts[i]
                for j in range(i + 1, len(pts)):
                    xj, yj = pts[j]
                    if (xj - xi) * (y - yi) == (yj - yi) * (x - xi):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            pts.append((x, y))
    return PointSet(tuple(pts))


TRIANGLE = PointSet(((0, 0), (4, 0), (0, 4)))
TRIANGLE_PLUS_INTERIOR = PointSet(((0, 0), (4, 0), (0, 4), (1, 1)))
SQUARE = PointSet(((0, 0), (2, 0), (2, 2), (0, 2)))


def small_suite():
    """Fixed n <= 6 inputs for the minimality criterion (>= 20 sets)."""
    sets = [
        ("triangle", TRIANGLE),
        ("triangle+interior", TRIANGLE_PLUS_INTERIOR),
        ("convex4", moment_polygon(4)),
        ("convex5", moment_polygon(5)),
        ("convex6", moment_polygon(6)),
        ("cluster5", triangle_cluster(5, 101)),
        ("cluster6", triangle_cluster(6, 102)),
    ]
    for n in (4, 5, 6):
        for t in range(5):
            sets.append((f"rand{n}-{t}", random_point_set(n, 5000 * n + t)))
    return sets


def medium_suite():
    """Fixed n <= 7 inputs for oracle-equivalence, rigidity and flip criteria."""
    sets = [
        ("triangle", TRIANGLE),
        ("triangle+interior", TRIANGLE_PLUS_INTERIOR),
        ("convex4", moment_polygon(4)),
        ("convex5", moment_polygon(5)),
        ("convex6", moment_polygon(6)),
        ("convex7", moment_polygon(7)),
        ("cluster6", triangle_cluster(6, 102)),
        ("cluster7", triangle_cluster(7, 103)),
        ("rand5", random_point_set(5, 71005)),
        ("rand6", random_point_set(6, 71006)),
        ("rand7a", random_point_set(7, 71007)),
        ("rand7b", random_point_set(7, 71017)),
    ]
    return sets


def degree_suite():
    """Fixed n <= 8 inputs for the degree-bound criterion."""
    sets = medium_suite() + [
        ("convex8", moment_polygon(8)),
        ("cluster8", triangle_cluster(8, 104)),
        ("rand8a", random_point_set(8, 81008)),
        ("rand8b", random_point_set(8, 81018)),
        ("rand8c", random_point_set(8, 81028)),
    ]
    return sets


def sweep_suite():
    """100 seeded random sets with n in [4, 8] plus structured inputs."""
    sets = [
        ("triangle+interior", TRIANGLE_PLUS_INTERIOR),
        ("convex4", moment_polygon(4)),
        ("convex5", moment_polygon(5)),
        ("convex6", moment_polygon(6)),
        ("convex7", moment_polygon(7)),
        ("convex8", moment_polygon(8)),
        ("cluster5", triangle_cluster(5, 101)),
        ("cluster6", triangle_cluster(6, 102)),
        ("cluster7", triangle_cluster(7, 103)),
        ("cluster8", triangle_cluster(8, 104)),
    ]
    for n in (4, 5, 6, 7, 8):
        for t in range(20):
            sets.append((f"rand{n}-{t}", random_point_set(n, 9000 * n + t)))
    return sets


@pytest.fixture(scope="session")
def enum_cache():
    """Session-wide cache so the acceptance criteria enumerate each set once."""
    cache: dict = {}

    def get(ps: PointSet, kind: str):
        key = (ps, kind)
        if key not in cache:
            if kind == "ppt":
                cache[key] = enumerate_ppt(ps)
            elif kind == "tri":
                cache[key] = enumerate_triangulations(ps)
            else:
                raise ValueError(kind)
        return cache[key]

    return get
