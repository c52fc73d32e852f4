"""Immutable simple undirected graphs and +/-1 edge labelings.

Vertices are the integers 0..n_vertices-1; isolated vertices are allowed.
Edges are stored in canonical order (endpoints sorted within an edge, edges
sorted lexicographically), so an edge index identifies the same edge for
every graph built from the same vertex pairs.  Labelings are plain value
arrays aligned with that canonical order, which keeps exhaustive search and
certificate comparison cheap.

All objects here are frozen after construction and every operation is a pure
function, so graphs and labelings are safe to share across workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LabelingGraphMismatch,
    LoopEdge,
    ZeroPart,
)


class Edge(NamedTuple):
    """An undirected edge with endpoints stored as u < v."""

    u: int
    v: int


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph in canonical form.

    Construct through :func:`build_graph` (or the shape-specific factories),
    which validate and canonicalize the edge list.  Direct construction
    requires an already-canonical edge tuple.
    """

    n_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for e in self.edges:
            if not (0 <= e.u < e.v < self.n_vertices):
                raise ValueError(f"edge {e} is not canonical for n={self.n_vertices}")
            if prev is not None and e <= prev:
                raise ValueError("edge list is not sorted and duplicate-free")
            prev = e

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices (derived, cached)."""
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            inc[e.v].append(i)
        return tuple(tuple(ix) for ix in inc)

    @cached_property
    def edge_lookup(self) -> dict[Edge, int]:
        """Map from canonical edge to its index."""
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of adjacent vertices, sorted."""
        nbr: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for e in self.edges:
            nbr[e.u].append(e.v)
            nbr[e.v].append(e.u)
        return tuple(tuple(sorted(vs)) for vs in nbr)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return Edge(u, v) in self.edge_lookup

    def is_complete(self) -> bool:
        n = self.n_vertices
        return len(self.edges) == n * (n - 1) // 2


@dataclass(frozen=True)
class EdgeLabeling:
    """A total map from the edges of one graph to {-1, +1}.

    ``values[i]`` is the label of ``graph.edges[i]``; the binding to the
    graph is by value, so two labelings of equal graphs are interchangeable.
    """

    graph: Graph
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.graph.edges):
            raise ValueError(
                f"labeling has {len(self.values)} values for "
                f"{len(self.graph.edges)} edges"
            )
        for w in self.values:
            if w not in (-1, 1):
                raise ValueError(f"labels must be -1 or +1, got {w!r}")


def all_positive(g: Graph) -> EdgeLabeling:
    """The all-(+1) labeling, an SEDF of every graph."""
    return EdgeLabeling(g, (1,) * len(g.edges))


def check_bound(g: Graph, f: EdgeLabeling) -> None:
    """Raise LabelingGraphMismatch unless f is a labeling of g."""
    if f.graph != g:
        raise LabelingGraphMismatch("labeling is bound to a different graph")


def build_graph(n_vertices: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical Graph from raw vertex pairs.

    Rejects self-loops, repeated unordered pairs, and out-of-range indices.
    The result is independent of the input order of the pairs.
    """
    if n_vertices < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    seen: set[Edge] = set()
    canon: list[Edge] = []
    for pair in edge_pairs:
        a, b = pair
        if not (0 <= a < n_vertices and 0 <= b < n_vertices):
            raise IndexOutOfRange(f"edge ({a},{b}) out of range for n={n_vertices}")
        if a == b:
            raise LoopEdge(f"self-loop at vertex {a}")
        e = Edge(a, b) if a < b else Edge(b, a)
        if e in seen:
            raise DuplicateEdge(f"edge ({e.u},{e.v}) listed twice")
        seen.add(e)
        canon.append(e)
    canon.sort()
    return Graph(n_vertices, tuple(canon))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with part X = {0..m-1} and part Y = {m..m+n-1}.

    Contains every cross edge, so exactly m*n edges.  The canonical order
    enumerates (i, m+j) with i ascending then j ascending.
    """
    if m < 1 or n < 1:
        raise ZeroPart(f"both parts must be nonempty, got ({m},{n})")
    edges = tuple(Edge(i, m + j) for i in range(m) for j in range(n))
    return Graph(m + n, edges)


def closed_neighborhood(g: Graph, e: int) -> set[int]:
    """All edge indices sharing an endpoint with edge e, including e itself."""
    if not (0 <= e < len(g.edges)):
        raise IndexOutOfRange(f"edge index {e} out of range")
    u, v = g.edges[e]
    return set(g.adjacency[u]) | set(g.adjacency[v])


def vertex_sum(g: Graph, f: EdgeLabeling, v: int) -> int:
    """Sum of labels over edges incident to v (0 for an isolated vertex)."""
    check_bound(g, f)
    if not (0 <= v < g.n_vertices):
        raise IndexOutOfRange(f"vertex index {v} out of range")
    return sum(f.values[i] for i in g.adjacency[v])


def _min_vertex_cut_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """True iff at least k internally vertex-disjoint s-t paths exist.

    s and t must be non-adjacent.  Uses unit-capacity augmenting paths on the
    standard vertex-split network: every vertex w other than s, t becomes an
    arc w_in -> w_out of capacity 1, and each graph edge contributes arcs of
    unbounded capacity in both directions.  Stops as soon as k paths are
    found, so the cost is at most k breadth-first searches.
    """
    n = g.n_vertices
    # Node ids: in(w) = w, out(w) = w + n.  Source = out(s), sink = in(t).
    source, sink = s + n, t
    arcs: list[list[int]] = []  # arc = [head, capacity]; arcs stored in pairs
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, cap: int) -> None:
        adj[a].append(len(arcs))
        arcs.append([b, cap])
        adj[b].append(len(arcs))
        arcs.append([a, 0])

    big = len(g.edges) + 1
    for w in range(n):
        if w != s and w != t:
            add_arc(w, w + n, 1)
    for e in g.edges:
        add_arc(e.u + n, e.v, big)
        add_arc(e.v + n, e.u, big)

    flow = 0
    while flow < k:
        parent_arc = [-1] * (2 * n)
        parent_arc[source] = -2
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for ai in adj[a]:
                head, cap = arcs[ai]
                if cap > 0 and parent_arc[head] == -1:
                    parent_arc[head] = ai
                    queue.append(head)
        if parent_arc[sink] == -1:
            return False
        node = sink
        while node != source:
            ai = parent_arc[node]
            arcs[ai][1] -= 1
            arcs[ai ^ 1][1] += 1
            node = arcs[ai ^ 1][0]
        flow += 1
    return True


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no set of fewer than k vertices disconnects g.

    For graphs with at most k vertices the answer is True exactly when the
    graph is complete (the usual convention: K_n counts as (n-1)-connected
    and as k-connected for every k >= n-1 it can support).  Otherwise this is
    a Menger check: every non-adjacent pair must be joined by k internally
    vertex-disjoint paths, decided by early-exit max flow.
    """
    if k < 1:
        raise ValueError("connectivity threshold must be >= 1")
    n = g.n_vertices
    if n <= k:
        return g.is_complete()
    if g.edges and min(len(ix) for ix in g.adjacency) < k:
        return False  # a minimum-degree neighborhood is a cutting set
    if not g.edges:
        return False  # n > k >= 1 vertices with no edges is disconnected
    if g.is_complete():
        return True
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                if not _min_vertex_cut_at_least(g, s, t, k):
                    return False
    return True
