"""Text formats for point sets and edge sets.

Points: one point per line, two integers separated by whitespace.
Edges: one edge per line, two 0-based vertex indices.
`#` starts a comment (whole line or trailing); blank lines are skipped.
Vertex indices are assigned by the order of non-comment point lines.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FileFormatError
from .geometry import Edge, PointSet
from .subdivision import GeomGraph, edge_key

__all__ = [
    "parse_points",
    "read_points",
    "write_points",
    "parse_edges",
    "read_edges",
    "write_edges",
    "load_graph",
]


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        yield lineno, raw, body.split()


def _int_pair(parts: list[str], source: str, lineno: int, raw: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise FileFormatError(f"{source}, line {lineno}: expected two integers, got {raw.strip()!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FileFormatError(f"{source}, line {lineno}: expected two integers, got {raw.strip()!r}") from None


def parse_points(text: str, source: str = "<points>") -> PointSet:
    pts = [_int_pair(parts, source, lineno, raw) for lineno, raw, parts in _data_lines(text)]
    return PointSet(tuple(pts))


def read_points(path) -> PointSet:
    return parse_points(Path(path).read_text(encoding="utf-8"), source=str(path))


def write_points(ps: PointSet) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in ps)


def parse_edges(text: str, source: str = "<edges>") -> list[Edge]:
    return [_int_pair(parts, source, lineno, raw) for lineno, raw, parts in _data_lines(text)]


def read_edges(path) -> list[Edge]:
    return parse_edges(Path(path).read_text(encoding="utf-8"), source=str(path))


def write_edges(edges) -> str:
    keys = sorted(edge_key(*e) for e in edges)
    return "".join(f"{i} {j}\n" for i, j in keys)


def load_graph(points_path, edges_path) -> GeomGraph:
    ps = read_points(points_path)
    return GeomGraph(ps, read_edges(edges_path))
