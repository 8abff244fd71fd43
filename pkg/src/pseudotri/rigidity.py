"""Exact bar-joint rigidity over integer coordinates.

The rigidity matrix of a graph has one row per bar and two columns per
vertex; the row of bar (i, j) carries p_i - p_j in i's column pair and the
negation in j's.  Rank comes from fraction-free (Bareiss) elimination and
mechanism kernels from cofactor determinants, so every number in this module
is an exact integer (Motion stores them as Fractions for the API).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotAHullEdge, NotAPPT, UnexpectedDofCount
from .geometry import Edge, PointSet
from .subdivision import GeomGraph, PseudoTriangulation, edge_key

__all__ = [
    "RigidityMatrix",
    "Motion",
    "ExpansiveReport",
    "rigidity_matrix",
    "rank",
    "is_infinitesimally_rigid",
    "mechanism_motion",
    "is_expansive",
]


@dataclass(frozen=True)
class RigidityMatrix:
    """One row per bar, two columns per vertex; integer entries."""

    n: int
    edges: tuple[Edge, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), 2 * self.n)


def _bar_row(ps: PointSet, n: int, i: int, j: int) -> list[int]:
    d = ps[i] - ps[j]
    row = [0] * (2 * n)
    row[2 * i] = d.x
    row[2 * i + 1] = d.y
    row[2 * j] = -d.x
    row[2 * j + 1] = -d.y
    return row


def rigidity_matrix(g: GeomGraph) -> RigidityMatrix:
    n = g.n
    return RigidityMatrix(
        n,
        tuple(g.edges),
        tuple(tuple(_bar_row(g.points, n, i, j)) for i, j in g.edges),
    )


def _bareiss_rank(rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for k in range(c + 1, ncols):
                row_i[k] = (pivot * row_i[k] - f * row_r[k]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def _bareiss_det(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(size):
        piv = None
        for i in range(c, size):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        pivot = m[c][c]
        for i in range(c + 1, size):
            f = m[i][c]
            row_i = m[i]
            row_c = m[c]
            for k in range(c + 1, size):
                row_i[k] = (pivot * row_i[k] - f * row_c[k]) // prev
            row_i[c] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def _kernel_vector(rows: list[list[int]]) -> list[int] | None:
    """Kernel of an m x (m+1) integer matrix via cofactor determinants.

    Returns None when the matrix has rank below m (kernel dimension > 1);
    otherwise the returned integer vector spans the one-dimensional kernel.
    """
    m = len(rows)
    w = []
    for k in range(m + 1):
        sub = [[row[c] for c in range(m + 1) if c != k] for row in rows]
        d = _bareiss_det(sub)
        w.append(d if k % 2 == 0 else -d)
    if all(x == 0 for x in w):
        return None
    return w


def rank(matrix: RigidityMatrix) -> int:
    """Exact rank via fraction-free Gaussian elimination; no tolerances."""
    return _bareiss_rank(matrix.rows)


def is_infinitesimally_rigid(g: GeomGraph | PseudoTriangulation) -> bool:
    """rank = 2n - 3, the largest value a planar bar framework can reach."""
    graph = g.graph if isinstance(g, PseudoTriangulation) else g
    return rank(rigidity_matrix(graph)) == 2 * graph.n - 3


@dataclass(frozen=True)
class Motion:
    """Per-vertex velocity assignment with exact rational components."""

    velocities: tuple[tuple[Fraction, Fraction], ...]

    def __len__(self) -> int:
        return len(self.velocities)

    def __getitem__(self, v: int) -> tuple[Fraction, Fraction]:
        return self.velocities[v]


def mechanism_motion(t: PseudoTriangulation, hull_edge) -> Motion:
    """The 1-dof flex of a pointed pseudo-triangulation with one hull bar cut.

    Pinning convention: the first endpoint of the lexicographically smallest
    remaining bar gets zero velocity and the second endpoint loses its
    velocity component perpendicular to that bar, which removes exactly the
    two translations and the rotation.  The pinned constraint system has
    2n-1 rows on 2n unknowns; its exact kernel must be one-dimensional or
    UnexpectedDofCount is raised.  The returned basis vector is primitive
    (integer entries, gcd 1) and signed so that the cut bar expands.
    """
    e = edge_key(*hull_edge)
    if e not in t.points.hull_edges or e not in set(t.graph.edges):
        raise NotAHullEdge(f"{e} is not a convex hull edge of the framework")
    if not t.is_pointed:
        raise NotAPPT("mechanism analysis expects a pointed pseudo-triangulation")
    ps = t.points
    n = ps.n
    bars = [x for x in t.graph.edges if x != e]
    a, b = min(bars)
    rows = [_bar_row(ps, n, i, j) for i, j in bars]
    pin_ax = [0] * (2 * n)
    pin_ax[2 * a] = 1
    pin_ay = [0] * (2 * n)
    pin_ay[2 * a + 1] = 1
    d = ps[b] - ps[a]
    pin_b = [0] * (2 * n)
    pin_b[2 * b] = -d.y
    pin_b[2 * b + 1] = d.x
    rows += [pin_ax, pin_ay, pin_b]
    w = _kernel_vector(rows)
    if w is None:
        dof = 2 * n - _bareiss_rank(rows)
        raise UnexpectedDofCount(f"pinned flex space has dimension {dof}, expected 1")
    for r in rows:
        if sum(rk * wk for rk, wk in zip(r, w)) != 0:
            raise RuntimeError("kernel verification failed (internal error)")
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    w = [x // g for x in w]
    i, j = e
    d = ps[i] - ps[j]
    s = d.x * (w[2 * i] - w[2 * j]) + d.y * (w[2 * i + 1] - w[2 * j + 1])
    if s == 0:
        raise UnexpectedDofCount("flex leaves the cut bar stationary; framework was not minimally rigid")
    if s < 0:
        w = [-x for x in w]
    return Motion(tuple((Fraction(w[2 * v]), Fraction(w[2 * v + 1])) for v in range(n)))


@dataclass(frozen=True)
class ExpansiveReport:
    """Outcome of the first-order expansion check.

    violations hold pairs whose distance derivative is negative (or bars
    whose length changes at all); equality_witnesses are non-bar pairs whose
    derivative is exactly zero, recorded but not treated as failures.
    """

    expansive: bool
    violations: tuple[tuple[int, int, Fraction], ...]
    equality_witnesses: tuple[tuple[int, int], ...]


def is_expansive(g: GeomGraph, motion: Motion) -> ExpansiveReport:
    """First-order expansion certificate for a bar framework under a motion.

    Every unordered vertex pair must satisfy (p_i - p_j) . (v_i - v_j) >= 0,
    with equality on the bars themselves; exact rational arithmetic, no
    tolerances.
    """
    ps = g.points
    n = ps.n
    if len(motion.velocities) != n:
        raise ValueError(f"motion covers {len(motion.velocities)} vertices, framework has {n}")
    bars = set(g.edges)
    violations = []
    ties = []
    for i in range(n):
        for j in range(i + 1, n):
            d = ps[i] - ps[j]
            vi = motion.velocities[i]
            vj = motion.velocities[j]
            der = d.x * (vi[0] - vj[0]) + d.y * (vi[1] - vj[1])
            if (i, j) in bars:
                if der != 0:
                    violations.append((i, j, der))
            elif der < 0:
                violations.append((i, j, der))
            elif der == 0:
                ties.append((i, j))
    return ExpansiveReport(not violations, tuple(violations), tuple(ties))
