"""Line-oriented text formats for graphs and edge labelings.

Graph format: first non-comment line is ``n_vertices n_edges``, followed by
one ``u v`` pair per line (0-based).  Labeling format: one ``u v w`` line per
edge with w in {-1, 1, +1}; every edge of the graph must appear exactly once.
Everything after a ``#`` on any line is a comment; blank lines are skipped.
"""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from .errors import FormatError, SedfError
from .graph import Edge, EdgeLabeling, Graph, build_graph


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {lineno}: header must be 'n_vertices n_edges'")
    try:
        n_vertices, n_edges = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from exc
    body = lines[1:]
    if len(body) != n_edges:
        raise FormatError(f"header declares {n_edges} edges, file has {len(body)}")
    pairs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    try:
        return build_graph(n_vertices, pairs)
    except SedfError as exc:
        raise FormatError(f"invalid edge list: {exc}") from exc


def read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, out: TextIO, comments: Iterable[str] = ()) -> None:
    """Write g in the text format; comments become leading '#' lines."""
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"{g.n_vertices} {len(g.edges)}\n")
    for e in g.edges:
        out.write(f"{e.u} {e.v}\n")


def graph_to_text(g: Graph, comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_graph(g, buf, comments)
    return buf.getvalue()


def save_graph(g: Graph, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_graph(g, fh, comments)


def parse_labeling(g: Graph, text: str) -> EdgeLabeling:
    values: list[int | None] = [None] * len(g.edges)
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'u v w'")
        try:
            a, b, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        if w not in (-1, 1):
            raise FormatError(f"line {lineno}: label must be -1 or +1, got {w}")
        e = Edge(a, b) if a < b else Edge(b, a)
        idx = g.edge_lookup.get(e)
        if idx is None:
            raise FormatError(f"line {lineno}: ({a},{b}) is not an edge of the graph")
        if values[idx] is not None:
            raise FormatError(f"line {lineno}: edge ({a},{b}) labeled twice")
        values[idx] = w
    missing = sum(1 for w in values if w is None)
    if missing:
        raise FormatError(f"{missing} edges are missing a label")
    return EdgeLabeling(g, tuple(values))  # type: ignore[arg-type]


def read_labeling(g: Graph, path: str) -> EdgeLabeling:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_labeling(g, fh.read())


def write_labeling(f: EdgeLabeling, out: TextIO, comments: Iterable[str] = ()) -> None:
    for c in comments:
        out.write(f"# {c}\n")
    for e, w in zip(f.graph.edges, f.values):
        out.write(f"{e.u} {e.v} {w}\n")


def labeling_to_text(f: EdgeLabeling, comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_labeling(f, buf, comments)
    return buf.getvalue()


def save_labeling(f: EdgeLabeling, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_labeling(f, fh, comments)
