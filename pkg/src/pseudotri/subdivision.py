"""Planar straight-line subdivisions: face extraction, pseudo-triangle
classification and pseudo-triangulation validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .errors import (
    CrossingEdges,
    DisconnectedGraph,
    IsolatedVertex,
    NotAPPT,
    NotAPseudoTriangulation,
)
from .geometry import Edge, Point, PointSet, _direction_cmp, is_pointed_at, orientation, segments_cross

__all__ = [
    "GeomGraph",
    "Face",
    "PseudoTriangulation",
    "ValidationReport",
    "edge_key",
    "extract_faces",
    "is_pseudo_triangle",
    "is_pointed_vertex",
    "validate",
]


def edge_key(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


class GeomGraph:
    """Non-crossing straight-line graph on a PointSet.

    Edges are unordered index pairs, stored as a sorted tuple of (i, j) with
    i < j.  Crossing input is rejected at construction, so every live
    instance satisfies the non-crossing invariant.  Immutable.
    """

    __slots__ = ("points", "edges", "_adj")

    def __init__(self, points: PointSet, edges, *, _checked: bool = False):
        n = points.n
        norm: set[Edge] = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} points")
            norm.add(edge_key(i, j))
        es = tuple(sorted(norm))
        if not _checked:
            for a in range(len(es)):
                i, j = es[a]
                pi, pj = points[i], points[j]
                for b in range(a + 1, len(es)):
                    k, l = es[b]
                    if segments_cross(pi, pj, points[k], points[l]):
                        raise CrossingEdges(f"edges {es[a]} and {es[b]} cross")
        self.points = points
        self.edges = es
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in es:
            adj[i].append(j)
            adj[j].append(i)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def n(self) -> int:
        return self.points.n

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adding(self, edge) -> "GeomGraph":
        """New graph with one extra edge; only the new edge is crossing-checked."""
        i, j = edge_key(*edge)
        if (i, j) in set(self.edges):
            raise ValueError(f"edge ({i}, {j}) already present")
        pi, pj = self.points[i], self.points[j]
        for a, b in self.edges:
            if segments_cross(pi, pj, self.points[a], self.points[b]):
                raise CrossingEdges(f"edge ({i}, {j}) crosses ({a}, {b})")
        return GeomGraph(self.points, self.edges + ((i, j),), _checked=True)


@dataclass(frozen=True)
class Face:
    """Cyclic boundary walk with the face interior to the left of traversal."""

    boundary: tuple[int, ...]
    convex_corner_count: int

    @property
    def is_simple(self) -> bool:
        return len(set(self.boundary)) == len(self.boundary)

    def __len__(self) -> int:
        return len(self.boundary)


def _connected(g: GeomGraph) -> bool:
    n = g.n
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == n


def doubled_area(points: PointSet, walk) -> int:
    """Twice the signed area of a closed walk (shoelace over exact integers)."""
    s = 0
    for i in range(len(walk)):
        a = points[walk[i - 1]]
        b = points[walk[i]]
        s += a.x * b.y - b.x * a.y
    return s


def _count_convex(points: PointSet, boundary) -> int:
    length = len(boundary)
    c = 0
    for i in range(length):
        a = points[boundary[i - 1]]
        b = points[boundary[i]]
        nxt = points[boundary[(i + 1) % length]]
        if orientation(a, b, nxt) > 0:
            c += 1
    return c


def _canonical_cycle(walk: list[int]) -> tuple[int, ...]:
    return min(tuple(walk[i:] + walk[:i]) for i in range(len(walk)))


def extract_faces(g: GeomGraph) -> tuple[list[Face], Face]:
    """Interior faces and the outer face of a connected non-crossing graph.

    Rotation-system traversal: incident edges are sorted by exact angle
    around each vertex, and each directed edge is followed by the clockwise
    predecessor of its reverse.  Interior faces come out counterclockwise;
    the outer face is the unique walk with negative doubled area (or the
    only walk, for trees).
    """
    if not g.edges:
        raise DisconnectedGraph("graph has no edges")
    if not _connected(g):
        raise DisconnectedGraph("graph is not connected")
    pts = g.points
    rots = []
    for v in range(g.n):
        pv = pts[v]
        rots.append(
            tuple(
                sorted(
                    g.neighbors(v),
                    key=cmp_to_key(lambda a, b, pv=pv: _direction_cmp(pts[a] - pv, pts[b] - pv)),
                )
            )
        )
    pos = [{u: k for k, u in enumerate(r)} for r in rots]
    visited: set[tuple[int, int]] = set()
    walks: list[list[int]] = []
    for v0 in range(g.n):
        for u0 in rots[v0]:
            e0 = (v0, u0)
            if e0 in visited:
                continue
            walk: list[int] = []
            e = e0
            while True:
                visited.add(e)
                walk.append(e[0])
                a, b = e
                r = rots[b]
                e = (b, r[pos[b][a] - 1])
                if e == e0:
                    break
            walks.append(walk)
    if g.n - len(g.edges) + len(walks) != 2:
        raise RuntimeError("face traversal violated Euler's formula (internal error)")
    interior: list[Face] = []
    outer = None
    for walk in walks:
        area2 = doubled_area(pts, walk)
        boundary = _canonical_cycle(walk)
        f = Face(boundary, _count_convex(pts, boundary))
        if len(walks) == 1 or area2 < 0:
            if outer is not None:
                raise RuntimeError("two faces claim to be the outer face (internal error)")
            outer = f
        else:
            interior.append(f)
    if outer is None:
        raise RuntimeError("no outer face found (internal error)")
    interior.sort(key=lambda f: f.boundary)
    return interior, outer


def is_pseudo_triangle(face: Face) -> bool:
    """A simple boundary walk with exactly three convex corners; triangles qualify."""
    return len(face) >= 3 and face.is_simple and face.convex_corner_count == 3


def is_pointed_vertex(g: GeomGraph, v: int) -> bool:
    """Whether the edges incident to v span strictly less than a halfturn."""
    nbrs = g.neighbors(v)
    if not nbrs:
        raise IsolatedVertex(f"vertex {v} has no incident edges")
    return is_pointed_at(g.points[v], [g.points[u] for u in nbrs])


@dataclass
class ValidationReport:
    """Outcome of `validate`; violations explain every False flag."""

    is_pseudo_triangulation: bool
    is_pointed: bool
    face_count: int
    edge_count: int
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "is_pseudo_triangulation": self.is_pseudo_triangulation,
            "is_pointed": self.is_pointed,
            "faces": self.face_count,
            "edges": self.edge_count,
            "violations": list(self.violations),
        }


def validate(g: GeomGraph) -> ValidationReport:
    """Check the pseudo-triangulation contract for a non-crossing graph.

    is_pseudo_triangulation requires: all hull edges present, connected and
    spanning, every interior face a pseudo-triangle, and the interior face
    areas summing exactly to the hull area.  is_pointed additionally
    requires every vertex to be pointed; when both hold, the face count must
    be n-2 and the edge count 2n-3 (a mismatch is reported as a violation,
    never raised).  Pure function: problems are data, not exceptions.
    """
    ps = g.points
    n = ps.n
    violations: list[str] = []
    eset = set(g.edges)
    for e in sorted(ps.hull_edges):
        if e not in eset:
            violations.append(f"missing convex hull edge {e}")
    for v in range(n):
        if g.degree(v) == 0:
            violations.append(f"vertex {v} is isolated")
    connected = bool(g.edges) and _connected(g)
    if not connected:
        violations.append("graph is not connected")
    face_count = 0
    if connected:
        interior, _outer = extract_faces(g)
        face_count = len(interior)
        for f in interior:
            if not is_pseudo_triangle(f):
                detail = f"{f.convex_corner_count} convex corners"
                if not f.is_simple:
                    detail += ", boundary repeats a vertex"
                violations.append(f"face {f.boundary} is not a pseudo-triangle ({detail})")
        hull_area = doubled_area(ps, list(ps.hull))
        if sum(doubled_area(ps, list(f.boundary)) for f in interior) != hull_area:
            violations.append("interior face areas do not sum to the hull area")
    is_pt = not violations
    pointed_all = connected
    if connected:
        for v in range(n):
            if g.degree(v) > 0 and not is_pointed_vertex(g, v):
                pointed_all = False
                violations.append(f"vertex {v} is not pointed")
    is_pointed = is_pt and pointed_all
    if is_pointed:
        counts_ok = True
        if face_count != n - 2:
            violations.append(f"face count {face_count} != n-2 = {n - 2}")
            counts_ok = False
        if len(g.edges) != 2 * n - 3:
            violations.append(f"edge count {len(g.edges)} != 2n-3 = {2 * n - 3}")
            counts_ok = False
        if not counts_ok:
            # cannot happen for honestly validated input; flag loudly
            is_pt = is_pointed = False
    return ValidationReport(is_pt, is_pointed, face_count, len(g.edges), violations)


class PseudoTriangulation:
    """A validated pseudo-triangulation; `is_pointed` marks the minimum case."""

    __slots__ = ("graph", "faces", "outer_face", "report")

    def __init__(self, graph: GeomGraph, faces: tuple[Face, ...], outer_face: Face, report: ValidationReport):
        self.graph = graph
        self.faces = faces
        self.outer_face = outer_face
        self.report = report

    @classmethod
    def from_graph(cls, graph: GeomGraph, require_pointed: bool = False) -> "PseudoTriangulation":
        report = validate(graph)
        if not report.is_pseudo_triangulation:
            raise NotAPseudoTriangulation("; ".join(report.violations) or "not a pseudo-triangulation")
        if require_pointed and not report.is_pointed:
            raise NotAPPT("; ".join(report.violations) or "not pointed")
        interior, outer = extract_faces(graph)
        return cls(graph, tuple(interior), outer, report)

    @property
    def points(self) -> PointSet:
        return self.graph.points

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def is_pointed(self) -> bool:
        return self.report.is_pointed

    @property
    def hull_edges(self) -> frozenset[Edge]:
        return self.graph.points.hull_edges

    @property
    def canonical_key(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def __repr__(self) -> str:
        kind = "pointed pseudo-triangulation" if self.is_pointed else "pseudo-triangulation"
        return f"<{kind}: n={self.n}, edges={len(self.edges)}, faces={len(self.faces)}>"
