"""Self-contained cross-checking helpers for the tests.

Everything here recomputes its answer from first principles with its own
arithmetic on plain coordinate tuples, deliberately sharing no code with the
package under test.
"""

import itertools
from math import comb


def sign(x):
    return (x > 0) - (x < 0)


def cross3(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def point_in_triangle_strict(p, a, b, c):
    s1 = sign(cross3(a, b, p))
    s2 = sign(cross3(b, c, p))
    s3 = sign(cross3(c, a, p))
    return s1 == s2 == s3 != 0


def hull_vertex_set(pts):
    """Indices on the convex hull: points not strictly inside any triangle of others."""
    n = len(pts)
    out = set()
    for i in range(n):
        others = [k for k in range(n) if k != i]
        inside = any(
            point_in_triangle_strict(pts[i], pts[a], pts[b], pts[c])
            for a, b, c in itertools.combinations(others, 3)
        )
        if not inside:
            out.add(i)
    return out


def hull_edge_set(pts):
    """Pairs (i, j) with every other point strictly on one side of line ij."""
    n = len(pts)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            signs = {sign(cross3(pts[i], pts[j], pts[k])) for k in range(n) if k not in (i, j)}
            if len(signs) == 1 and 0 not in signs:
                out.add((i, j))
    return out


def origin_in_closed_hull(dirs):
    """Whether (0, 0) lies in the closed convex hull of the direction vectors."""
    ds = list(dirs)
    for d in ds:
        if d == (0, 0):
            return True
    for a, b in itertools.combinations(ds, 2):
        if a[0] * b[1] - a[1] * b[0] == 0 and a[0] * b[0] + a[1] * b[1] <= 0:
            return True
    for a, b, c in itertools.combinations(ds, 3):
        s = [sign(cross3(a, b, (0, 0))), sign(cross3(b, c, (0, 0))), sign(cross3(c, a, (0, 0)))]
        if any(s) and (all(x >= 0 for x in s) or all(x <= 0 for x in s)):
            return True
    return False


def pointed_oracle(dirs):
    """All direction vectors fit in an open halfplane iff the origin is outside their closed hull."""
    return not origin_in_closed_hull(dirs)


def pointed_vertex_oracle(pts, v, neighbor_indices):
    dirs = [(pts[u][0] - pts[v][0], pts[u][1] - pts[v][1]) for u in neighbor_indices]
    return pointed_oracle(dirs)


def proper_cross(p, q, r, s):
    """Open-segment crossing for segments with four distinct endpoints in general position."""
    if p in (r, s) or q in (r, s):
        return False
    return (
        sign(cross3(p, q, r)) != sign(cross3(p, q, s))
        and sign(cross3(r, s, p)) != sign(cross3(r, s, q))
    )


def _edges_noncrossing(pts, edges):
    es = list(edges)
    for x in range(len(es)):
        i, j = es[x]
        for y in range(x + 1, len(es)):
            k, l = es[y]
            if proper_cross(pts[i], pts[j], pts[k], pts[l]):
                return False
    return True


def _all_pointed(pts, edges, n):
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for v in range(n):
        if adj[v] and not pointed_vertex_oracle(pts, v, adj[v]):
            return False
    return True


def count_by_subsets(pts, pointed):
    """Count triangulations (pointed=False) or pointed pseudo-triangulations
    (pointed=True) by exhausting edge subsets of the characteristic size.

    A non-crossing graph containing the hull with 3n-h-3 edges is maximal
    non-crossing, hence a triangulation; a pointed non-crossing graph caps
    at 2n-3 edges and reaches that exactly for the pointed
    pseudo-triangulations.  Feasible for n <= 6.
    """
    n = len(pts)
    hull = sorted(hull_edge_set(pts))
    h = len(hull)
    target = (2 * n - 3) if pointed else (3 * n - h - 3)
    need = target - h
    free = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in set(hull)
    ]
    count = 0
    for combo in itertools.combinations(free, need):
        edges = hull + list(combo)
        if not _edges_noncrossing(pts, edges):
            continue
        if pointed and not _all_pointed(pts, edges, n):
            continue
        count += 1
    return count
