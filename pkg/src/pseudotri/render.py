"""Deterministic SVG rendering of point sets and graphs.

All layout arithmetic is integer, so identical inputs and options produce
byte-identical documents.  The canvas fits the bounding box with a 5%
margin; the y axis is flipped so larger y draws higher, matching the usual
mathematical orientation.
"""

from __future__ import annotations

from .subdivision import Face, GeomGraph, PseudoTriangulation, extract_faces

__all__ = ["render_svg"]

_FACE_PALETTE = (
    "#c6dbef",
    "#fdd0a2",
    "#c7e9c0",
    "#dadaeb",
    "#fee6ce",
    "#d9f0d3",
    "#fde0dd",
    "#e0ecf4",
    "#fff7bc",
    "#e5f5e0",
)
_EDGE_COLOR = "#37474f"
_VERTEX_COLOR = "#c0392b"


def render_svg(obj: GeomGraph | PseudoTriangulation, *, labels: bool = False, shade: bool = False) -> str:
    """SVG document for a graph: edges as lines, vertices as filled circles,
    optionally index labels and per-face shading."""
    graph = obj.graph if isinstance(obj, PseudoTriangulation) else obj
    faces: tuple[Face, ...] = ()
    if shade:
        if isinstance(obj, PseudoTriangulation):
            faces = obj.faces
        else:
            faces = tuple(extract_faces(graph)[0])
    pts = graph.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    extent = max(maxx - minx, maxy - miny, 1)
    scale = max(1, -(-256 // extent))  # ceil: small inputs are blown up to ~256 units
    margin = max(scale, (extent * scale) // 20)

    def sx(p) -> int:
        return (p.x - minx) * scale + margin

    def sy(p) -> int:
        return (maxy - p.y) * scale + margin

    width = (maxx - minx) * scale + 2 * margin
    height = (maxy - miny) * scale + 2 * margin
    radius = max(2, (extent * scale) // 100)
    stroke = max(1, radius // 2)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for k, face in enumerate(faces):
        coords = " ".join(f"{sx(pts[v])},{sy(pts[v])}" for v in face.boundary)
        fill = _FACE_PALETTE[k % len(_FACE_PALETTE)]
        out.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"/>')
    for i, j in graph.edges:
        a, b = pts[i], pts[j]
        out.append(
            f'<line x1="{sx(a)}" y1="{sy(a)}" x2="{sx(b)}" y2="{sy(b)}" '
            f'stroke="{_EDGE_COLOR}" stroke-width="{stroke}"/>'
        )
    for p in pts:
        out.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="{radius}" fill="{_VERTEX_COLOR}"/>')
    if labels:
        size = 3 * radius
        for v, p in enumerate(pts):
            out.append(
                f'<text x="{sx(p) + radius}" y="{sy(p) - radius}" font-size="{size}" '
                f'font-family="monospace">{v}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
