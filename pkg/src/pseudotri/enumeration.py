"""Flips and exhaustive small-n machinery: flip-graph breadth-first search,
brute-force oracles, and the triangulation vs pointed-count comparison.

Hot loops run on integer bitmasks over the universe of vertex pairs, backed
by precomputed exact orientation tables (see _Chart).  Public entry points
work with the ordinary object layer and convert at the boundary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache

from .construct import _sweep, canonical_ppt
from .errors import HullEdgeNotFlippable, LimitExceeded, NotAPPT
from .geometry import Edge, PointSet, _direction_cmp, is_pointed_at, orientation, segments_cross
from .subdivision import GeomGraph, PseudoTriangulation, edge_key, extract_faces, validate

__all__ = [
    "CountReport",
    "DEFAULT_LIMIT",
    "BRUTE_FORCE_PPT_LIMIT",
    "BRUTE_FORCE_ALL_LIMIT",
    "flip",
    "enumerate_ppt",
    "enumerate_triangulations",
    "brute_force_maximal_pointed",
    "brute_force_all_pseudo_triangulations",
    "check_conjecture",
    "min_max_degree",
]

DEFAULT_LIMIT = 9
BRUTE_FORCE_PPT_LIMIT = 7
BRUTE_FORCE_ALL_LIMIT = 6

CanonKey = tuple[Edge, ...]


@dataclass(frozen=True)
class CountReport:
    """Triangulation and pointed pseudo-triangulation counts for one point set."""

    n: int
    num_triangulations: int
    num_ppt: int
    convex_position: bool
    conjecture_holds: bool
    equality: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "num_triangulations": self.num_triangulations,
            "num_ppt": self.num_ppt,
            "convex_position": self.convex_position,
            "conjecture_holds": self.conjecture_holds,
            "equality": self.equality,
        }


class _Chart:
    """Precomputed exact tables for one small point set.

    orient[i][j][k] caches every orientation sign, cross_mask[e] is the
    bitmask of pairs properly crossing pair e (general position: proper
    crossings are the only possible conflicts between index pairs), and
    around[v] is the ccw circular order of all other vertices about v.
    """

    def __init__(self, ps: PointSet):
        n = ps.n
        self.ps = ps
        self.n = n
        pts = ps.points
        orient = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    orient[i][j][k] = orientation(pts[i], pts[j], pts[k])
        self.orient = orient
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.pairs = pairs
        self.pair_id = {e: t for t, e in enumerate(pairs)}
        npairs = len(pairs)
        cross_mask = [0] * npairs
        for a in range(npairs):
            i, j = pairs[a]
            for b in range(a + 1, npairs):
                k, l = pairs[b]
                if i in (k, l) or j in (k, l):
                    continue
                if orient[i][j][k] != orient[i][j][l] and orient[k][l][i] != orient[k][l][j]:
                    cross_mask[a] |= 1 << b
                    cross_mask[b] |= 1 << a
        self.cross_mask = cross_mask
        around = []
        for v in range(n):
            pv = pts[v]
            others = sorted(
                (u for u in range(n) if u != v),
                key=cmp_to_key(lambda a, b, pv=pv: _direction_cmp(pts[a] - pv, pts[b] - pv)),
            )
            around.append(tuple(others))
        self.around = around
        pos_all = []
        for v in range(n):
            row = [-1] * n
            for k, u in enumerate(around[v]):
                row[u] = k
            pos_all.append(row)
        self.pos_all = pos_all
        hull = ps.hull
        hull_ids = [self.pair_id[edge_key(hull[i], hull[(i + 1) % len(hull)])] for i in range(len(hull))]
        self.hull_mask = 0
        for t in hull_ids:
            self.hull_mask |= 1 << t
        self._pointed_memo: dict[tuple[int, int], bool] = {}

    # --- bitmask helpers -------------------------------------------------

    def mask_of(self, edges) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.pair_id[edge_key(*e)]
        return m

    def key_of(self, mask: int) -> CanonKey:
        out = []
        m = mask
        while m:
            b = m & -m
            out.append(self.pairs[b.bit_length() - 1])
            m ^= b
        return tuple(out)  # pair ids ascend in lexicographic pair order

    def vertex_masks(self, mask: int) -> list[int]:
        vm = [0] * self.n
        m = mask
        while m:
            b = m & -m
            i, j = self.pairs[b.bit_length() - 1]
            vm[i] |= 1 << j
            vm[j] |= 1 << i
            m ^= b
        return vm

    def connected(self, vm: list[int]) -> bool:
        n = self.n
        if any(x == 0 for x in vm):
            return False
        seen = 1
        stack = [0]
        while stack:
            fresh = vm[stack.pop()] & ~seen
            while fresh:
                b = fresh & -fresh
                seen |= b
                stack.append(b.bit_length() - 1)
                fresh ^= b
        return seen == (1 << n) - 1

    def pointed(self, v: int, nbr_vmask: int) -> bool:
        key = (v, nbr_vmask)
        memo = self._pointed_memo
        r = memo.get(key)
        if r is None:
            ordered = [u for u in self.around[v] if nbr_vmask >> u & 1]
            if len(ordered) <= 1:
                r = True
            else:
                ov = self.orient[v]
                # ccw gap from a to its successor exceeds pi iff orient(v,a,b) < 0
                r = any(ov[ordered[i - 1]][ordered[i]] < 0 for i in range(len(ordered)))
            memo[key] = r
        return r

    def face_walks(self, vm: list[int]) -> list[list[int]]:
        n = self.n
        around = self.around
        pos = self.pos_all
        visited: set[int] = set()
        walks: list[list[int]] = []
        for v in range(n):
            m = vm[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                code0 = v * n + u
                if code0 in visited:
                    continue
                walk: list[int] = []
                a, t = v, u
                while True:
                    visited.add(a * n + t)
                    walk.append(a)
                    ring = around[t]
                    k = pos[t][a]
                    nb = vm[t]
                    while True:
                        k -= 1
                        w = ring[k]
                        if nb >> w & 1:
                            break
                    a, t = t, w
                    if a * n + t == code0:
                        break
                walks.append(walk)
        return walks

    def split_faces(self, walks: list[list[int]]) -> tuple[list[list[int]], list[int] | None]:
        pts = self.ps.points
        interior: list[list[int]] = []
        outer = None
        for w in walks:
            s = 0
            for i in range(len(w)):
                a = pts[w[i - 1]]
                b = pts[w[i]]
                s += a.x * b.y - b.x * a.y
            if len(walks) == 1 or s < 0:
                outer = w
            else:
                interior.append(w)
        return interior, outer

    def _walk_is_pseudo_triangle(self, w: list[int]) -> bool:
        length = len(w)
        if length < 3 or len(set(w)) != length:
            return False
        o = self.orient
        c = 0
        for i in range(length):
            if o[w[i - 1]][w[i]][w[(i + 1) % length]] > 0:
                c += 1
        return c == 3

    def is_pseudo_triangulation_mask(self, mask: int, vm: list[int] | None = None) -> bool:
        if mask & self.hull_mask != self.hull_mask:
            return False
        if vm is None:
            vm = self.vertex_masks(mask)
        if not self.connected(vm):
            return False
        walks = self.face_walks(vm)
        if self.n - mask.bit_count() + len(walks) != 2:
            return False
        interior, outer = self.split_faces(walks)
        if outer is None:
            return False
        return all(self._walk_is_pseudo_triangle(w) for w in interior)

    def is_ppt_mask(self, mask: int) -> bool:
        n = self.n
        if mask.bit_count() != 2 * n - 3:
            return False
        vm = self.vertex_masks(mask)
        if any(not self.pointed(v, vm[v]) for v in range(n) if vm[v]):
            return False
        return self.is_pseudo_triangulation_mask(mask, vm)


@lru_cache(maxsize=64)
def _chart_for(ps: PointSet) -> _Chart:
    return _Chart(ps)


def _check_limit(ps: PointSet, limit: int, what: str) -> None:
    if ps.n > limit:
        raise LimitExceeded(f"{what}: n = {ps.n} exceeds the limit {limit}")


# --- flips ---------------------------------------------------------------


def flip(t: PseudoTriangulation, edge) -> PseudoTriangulation:
    """Exchange one interior edge for the unique alternative edge that again
    yields a pointed pseudo-triangulation on the same point set.

    Remove-and-scan: drop the edge, then try every non-edge candidate and
    keep the one whose insertion validates.  Exactly one candidate must
    survive; a different count is reported loudly since it would falsify the
    flip uniqueness this operation is built on.  Flipping the returned edge
    back restores the input (involution).
    """
    e = edge_key(*edge)
    eset = set(t.graph.edges)
    if e not in eset:
        raise ValueError(f"{e} is not an edge of this pseudo-triangulation")
    if not t.is_pointed:
        raise NotAPPT("flips are defined on pointed pseudo-triangulations only")
    if e in t.hull_edges:
        raise HullEdgeNotFlippable(f"{e} lies on the convex hull")
    ps = t.points
    n = ps.n
    base = tuple(sorted(eset - {e}))
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in base:
        adj[i].add(j)
        adj[j].add(i)
    survivors = []
    for i in range(n):
        pi = ps[i]
        for j in range(i + 1, n):
            cand = (i, j)
            if cand == e or cand in eset:
                continue
            pj = ps[j]
            if any(segments_cross(pi, pj, ps[a], ps[b]) for a, b in base):
                continue
            if not is_pointed_at(pi, [ps[u] for u in adj[i]] + [pj]):
                continue
            if not is_pointed_at(pj, [ps[u] for u in adj[j]] + [pi]):
                continue
            g2 = GeomGraph(ps, base + (cand,), _checked=True)
            report = validate(g2)
            if report.is_pseudo_triangulation and report.is_pointed:
                survivors.append((g2, report))
    if len(survivors) != 1:
        raise RuntimeError(f"flip of {e}: expected exactly one replacement, found {len(survivors)}")
    g2, report = survivors[0]
    interior, outer = extract_faces(g2)
    return PseudoTriangulation(g2, tuple(interior), outer, report)


def _flip_mask(chart: _Chart, mask: int, eid: int, vm: list[int]) -> int:
    """Mask-level remove-and-scan flip; same semantics as `flip`."""
    base = mask & ~(1 << eid)
    a, b = chart.pairs[eid]
    bvm = vm.copy()
    bvm[a] &= ~(1 << b)
    bvm[b] &= ~(1 << a)
    cross_mask = chart.cross_mask
    pairs = chart.pairs
    found = -1
    for cand in range(len(pairs)):
        if cand == eid or base >> cand & 1:
            continue
        if cross_mask[cand] & base:
            continue
        u, v = pairs[cand]
        if not chart.pointed(u, bvm[u] | (1 << v)):
            continue
        if not chart.pointed(v, bvm[v] | (1 << u)):
            continue
        if chart.is_ppt_mask(base | (1 << cand)):
            if found >= 0:
                raise RuntimeError("flip found two valid replacements (internal error)")
            found = cand
    if found < 0:
        raise RuntimeError("flip found no valid replacement (internal error)")
    return base | (1 << found)


# --- enumeration ---------------------------------------------------------


def enumerate_ppt(ps: PointSet, limit: int = DEFAULT_LIMIT) -> list[CanonKey]:
    """All pointed pseudo-triangulations of ps as sorted canonical edge keys.

    Breadth-first search over the flip graph seeded from canonical_ppt; flip
    connectivity is relied on here and cross-checked against
    brute_force_maximal_pointed by the test suite at n <= 7.
    """
    _check_limit(ps, limit, "enumerate_ppt")
    chart = _chart_for(ps)
    seed = chart.mask_of(canonical_ppt(ps).graph.edges)
    seen = {seed}
    queue = deque([seed])
    nonhull = ~chart.hull_mask
    while queue:
        node = queue.popleft()
        vm = chart.vertex_masks(node)
        m = node & nonhull
        while m:
            bit = m & -m
            m ^= bit
            nxt = _flip_mask(chart, node, bit.bit_length() - 1, vm)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(chart.key_of(x) for x in seen)


def _tri_neighbors(chart: _Chart, mask: int) -> list[int]:
    vm = chart.vertex_masks(mask)
    walks = chart.face_walks(vm)
    interior, _outer = chart.split_faces(walks)
    apex: dict[int, list[int]] = {}
    for w in interior:
        if len(w) != 3:
            raise RuntimeError("triangulation node has a non-triangular face (internal error)")
        a, b, c = w
        for u, v, o in ((a, b, c), (b, c, a), (c, a, b)):
            apex.setdefault(chart.pair_id[edge_key(u, v)], []).append(o)
    out = []
    for eid, apexes in apex.items():
        if chart.hull_mask >> eid & 1:
            continue
        if len(apexes) != 2:
            raise RuntimeError("interior edge without two incident triangles (internal error)")
        cand = chart.pair_id[edge_key(apexes[0], apexes[1])]
        base = mask & ~(1 << eid)
        # diagonal flip is valid iff the two triangles form a convex quad,
        # i.e. the new diagonal properly crosses the old one and nothing else
        if not (chart.cross_mask[cand] >> eid & 1):
            continue
        if chart.cross_mask[cand] & base:
            continue
        out.append(base | (1 << cand))
    return out


def enumerate_triangulations(ps: PointSet, limit: int = DEFAULT_LIMIT) -> list[CanonKey]:
    """All triangulations of ps as sorted canonical edge keys.

    Breadth-first search over the classical diagonal-flip graph, seeded from
    the fan variant of the sweep construction.
    """
    _check_limit(ps, limit, "enumerate_triangulations")
    chart = _chart_for(ps)
    seed = chart.mask_of(_sweep(ps, connect_all=True))
    seen = {seed}
    queue = deque([seed])
    while queue:
        for nxt in _tri_neighbors(chart, queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(chart.key_of(x) for x in seen)


# --- brute-force oracles -------------------------------------------------


def brute_force_maximal_pointed(ps: PointSet) -> list[CanonKey]:
    """Independent oracle for enumerate_ppt: exhaustive depth-first edge
    addition over the hull with crossing and pointedness pruning, reporting
    every edge set of size exactly 2n-3 that validates as a pointed
    pseudo-triangulation."""
    _check_limit(ps, BRUTE_FORCE_PPT_LIMIT, "brute_force_maximal_pointed")
    chart = _chart_for(ps)
    n = chart.n
    target = 2 * n - 3
    cands = [t for t in range(len(chart.pairs)) if not (chart.hull_mask >> t & 1)]
    found: list[int] = []
    cross_mask = chart.cross_mask
    pairs = chart.pairs

    def dfs(idx: int, mask: int, count: int, vm: list[int]) -> None:
        if count == target:
            if chart.is_ppt_mask(mask):
                found.append(mask)
            return
        if idx == len(cands) or count + (len(cands) - idx) < target:
            return
        eid = cands[idx]
        if not (cross_mask[eid] & mask):
            i, j = pairs[eid]
            ni = vm[i] | (1 << j)
            nj = vm[j] | (1 << i)
            if chart.pointed(i, ni) and chart.pointed(j, nj):
                oi, oj = vm[i], vm[j]
                vm[i], vm[j] = ni, nj
                dfs(idx + 1, mask | (1 << eid), count + 1, vm)
                vm[i], vm[j] = oi, oj
        dfs(idx + 1, mask, count, vm)

    dfs(0, chart.hull_mask, chart.hull_mask.bit_count(), chart.vertex_masks(chart.hull_mask))
    return sorted(chart.key_of(m) for m in found)


def brute_force_all_pseudo_triangulations(ps: PointSet) -> list[tuple[int, bool]]:
    """Every pseudo-triangulation of ps, pointed or not, as (edge_count,
    all_vertices_pointed) entries sorted ascending.

    Exhausts all non-crossing supersets of the hull and keeps those whose
    interior faces are all pseudo-triangles; used to confirm that the
    minimum edge count is 2n-3 and is attained exactly by the pointed ones.
    """
    _check_limit(ps, BRUTE_FORCE_ALL_LIMIT, "brute_force_all_pseudo_triangulations")
    chart = _chart_for(ps)
    n = chart.n
    cands = [t for t in range(len(chart.pairs)) if not (chart.hull_mask >> t & 1)]
    out: list[tuple[int, bool]] = []
    cross_mask = chart.cross_mask

    def dfs(idx: int, mask: int) -> None:
        if idx == len(cands):
            vm = chart.vertex_masks(mask)
            if chart.is_pseudo_triangulation_mask(mask, vm):
                pointed = all(chart.pointed(v, vm[v]) for v in range(n))
                out.append((mask.bit_count(), pointed))
            return
        eid = cands[idx]
        if not (cross_mask[eid] & mask):
            dfs(idx + 1, mask | (1 << eid))
        dfs(idx + 1, mask)

    dfs(0, chart.hull_mask)
    return sorted(out)


# --- counting ------------------------------------------------------------


def check_conjecture(ps: PointSet, limit: int = DEFAULT_LIMIT) -> CountReport:
    """Compare the triangulation count with the pointed pseudo-triangulation
    count for one point set.

    A count with num_triangulations > num_ppt would be a reportable finding;
    it is flagged in the report (conjecture_holds = False), never raised.
    """
    num_tri = len(enumerate_triangulations(ps, limit))
    num_ppt = len(enumerate_ppt(ps, limit))
    return CountReport(
        n=ps.n,
        num_triangulations=num_tri,
        num_ppt=num_ppt,
        convex_position=ps.convex_position,
        conjecture_holds=num_tri <= num_ppt,
        equality=num_tri == num_ppt,
    )


def min_max_degree(ps: PointSet, limit: int = DEFAULT_LIMIT) -> int:
    """Minimum over all pointed pseudo-triangulations of the maximum vertex degree.

    Guaranteed to be at most 5; a larger value would contradict the degree
    bound this checks and is raised as an internal error.
    """
    best: int | None = None
    for key in enumerate_ppt(ps, limit):
        deg = [0] * ps.n
        for i, j in key:
            deg[i] += 1
            deg[j] += 1
        worst = max(deg)
        if best is None or worst < best:
            best = worst
    assert best is not None
    if best > 5:
        raise RuntimeError(f"min-max degree {best} exceeds 5; degree bound violated (internal error)")
    return best
