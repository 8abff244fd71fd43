"""Producing pointed pseudo-triangulations: a deterministic sweep construction
and greedy completion of an arbitrary pointed non-crossing graph."""

from __future__ import annotations

from .errors import NotPointedInput
from .geometry import Edge, PointSet, is_pointed_at, orientation, segments_cross
from .subdivision import GeomGraph, PseudoTriangulation, edge_key, is_pointed_vertex

__all__ = ["canonical_ppt", "complete_to_ppt"]


def _sweep(ps: PointSet, connect_all: bool) -> set[Edge]:
    """Incremental lexicographic sweep over the point set.

    Each point beyond the first three lies outside the hull of the processed
    points (lexicographic order plus general position guarantee this) and is
    attached either to the two tangent hull vertices only, or to every
    visible hull vertex.  The tangent variant keeps every vertex pointed:
    the new point sees the hull within an angle below pi, hull vertices keep
    all their edges on the hull's side, and vertices swallowed into the
    interior gain no edges at all.  The fan variant triangulates.
    """
    order = sorted(range(ps.n), key=lambda i: ps[i])
    a, b, c = order[:3]
    if orientation(ps[a], ps[b], ps[c]) < 0:
        b, c = c, b
    hull = [a, b, c]
    edges = {edge_key(a, b), edge_key(b, c), edge_key(a, c)}
    for idx in order[3:]:
        p = ps[idx]
        m = len(hull)
        vis = [orientation(ps[hull[i]], ps[hull[(i + 1) % m]], p) < 0 for i in range(m)]
        starts = [i for i in range(m) if vis[i] and not vis[i - 1]]
        assert len(starts) == 1, "visible hull chain must be a single arc"
        s = starts[0]
        run = 1
        while vis[(s + run) % m]:
            run += 1
        chain = [hull[(s + k) % m] for k in range(run + 1)]
        if connect_all:
            edges.update(edge_key(idx, w) for w in chain)
        else:
            edges.add(edge_key(idx, chain[0]))
            edges.add(edge_key(idx, chain[-1]))
        hull = [hull[(s + run + k) % m] for k in range(m - run + 1)] + [idx]
    return edges


def canonical_ppt(ps: PointSet) -> PseudoTriangulation:
    """Deterministic pointed pseudo-triangulation of a valid point set.

    The result validates with every vertex pointed, hence n-2 interior faces
    and 2n-3 edges; identical input ordering gives an identical edge set.
    """
    g = GeomGraph(ps, _sweep(ps, connect_all=False))
    return PseudoTriangulation.from_graph(g, require_pointed=True)


def complete_to_ppt(g: GeomGraph) -> PseudoTriangulation:
    """Extend a pointed non-crossing graph to a pointed pseudo-triangulation.

    Candidate edges are tried in (squared length, index pair) order and kept
    whenever they preserve non-crossing and the pointedness of both
    endpoints; input edges are never removed, so the input edge set is a
    subset of the output.  Both rejection reasons are monotone under edge
    insertion, so a single greedy pass reaches a maximal pointed non-crossing
    graph, which has exactly 2n-3 edges; the final validation guards that
    claim at runtime.  Isolated input vertices are allowed.
    """
    ps = g.points
    n = ps.n
    for v in range(n):
        if g.degree(v) > 0 and not is_pointed_vertex(g, v):
            raise NotPointedInput(f"vertex {v} of the input is not pointed")
    edges = set(g.edges)
    adj: list[set[int]] = [set(g.neighbors(v)) for v in range(n)]

    def length2(e: Edge) -> int:
        d = ps[e[1]] - ps[e[0]]
        return d.x * d.x + d.y * d.y

    candidates = sorted(
        ((i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges),
        key=lambda e: (length2(e), e),
    )
    target = 2 * n - 3
    for i, j in candidates:
        if len(edges) == target:
            break
        pi, pj = ps[i], ps[j]
        if any(segments_cross(pi, pj, ps[a], ps[b]) for a, b in edges):
            continue
        if not is_pointed_at(pi, [ps[u] for u in adj[i]] + [pj]):
            continue
        if not is_pointed_at(pj, [ps[u] for u in adj[j]] + [pi]):
            continue
        edges.add((i, j))
        adj[i].add(j)
        adj[j].add(i)
    out = GeomGraph(ps, edges, _checked=True)
    return PseudoTriangulation.from_graph(out, require_pointed=True)
