"""Lower-bound machinery for signed edge domination.

An elementary subgraph is one whose components are single edges or cycles.
If a maximum-coverage elementary subgraph of G leaves alpha of the n
vertices uncovered, then every SEDF of G weighs at least -alpha(n-alpha)/4,
and hence at least -n^2/16; with a spanning elementary subgraph the weight
is nonnegative.  Even cycles never need to appear: a cycle of size 2k covers
the same vertices as k disjoint edges, so the search below packs odd cycles
and completes with a matching.

For the minimum of gamma'_s over all graphs of a given order k, the same
machinery sandwiches the value: -k^2/16 <= min <= -(k-8)^2/72 for k >= 12,
where the upper bound comes from the layered clique family at n = 2 padded
with isolated vertices; at k = 9m+3 the unpadded family gives the sharper
-(m/6)(9m+3).

All bounds are exact rationals; nothing here is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSubgraph, NotACycle, NotAnSedf
from .graph import EdgeLabeling, Graph, check_bound, vertex_sum
from .domination import is_sedf

DEFAULT_ELEMENTARY_MAX_NODES = 2_000_000


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint edges and odd cycles of a host graph.

    ``covered`` counts the vertices used; ``alpha`` the rest.  ``optimal``
    is False only when a search budget ran out, in which case the subgraph
    is valid but possibly not of maximum coverage.
    """

    matching_edges: frozenset[int]
    odd_cycles: tuple[tuple[int, ...], ...]
    covered: int
    alpha: int
    optimal: bool = True


@dataclass(frozen=True)
class BoundsReport:
    """Sandwich for the minimum of gamma'_s over graphs of order k.

    ``upper`` is None below order 12, where the padding argument does not
    apply.  ``sharper_upper`` is set at orders of the form 9m+3, where the
    construction value beats the smoothed formula.
    """

    k: int
    lower: Fraction
    upper: Fraction | None
    lower_source: str
    upper_source: str | None
    sharper_upper: Fraction | None = None
    sharper_source: str | None = None


def max_elementary_subgraph(
    g: Graph, max_nodes: int = DEFAULT_ELEMENTARY_MAX_NODES
) -> ElementarySubgraph:
    """Backtracking search for an elementary subgraph of maximum coverage.

    Processes vertices in index order; the lowest undecided vertex is either
    matched to an undecided neighbor, routed through an odd cycle of
    undecided vertices, or skipped.  Subtrees that cannot beat the incumbent
    coverage are cut.  Exhaustive within the node budget; on exhaustion the
    best packing found is returned flagged non-optimal.
    """
    n = g.n_vertices
    neighbors = g.neighbors
    nbr_sets = [set(vs) for vs in neighbors]
    state = [0] * n  # 0 undecided, 1 in use, 2 skipped
    cur_matching: list[int] = []
    cur_cycles: list[tuple[int, ...]] = []
    covered = 0
    free = n
    nodes = 0
    exhausted = False
    best_covered = -1
    best_matching: tuple[int, ...] = ()
    best_cycles: tuple[tuple[int, ...], ...] = ()

    def dfs(lo: int) -> None:
        nonlocal nodes, exhausted, covered, free
        nonlocal best_covered, best_matching, best_cycles
        nodes += 1
        if nodes > max_nodes:
            exhausted = True
            return
        v = lo
        while v < n and state[v] != 0:
            v += 1
        if v == n:
            if covered > best_covered:
                best_covered = covered
                best_matching = tuple(cur_matching)
                best_cycles = tuple(cur_cycles)
            return
        if covered + free <= best_covered:
            return

        # match v with an undecided neighbor (always of higher index)
        for i in g.adjacency[v]:
            e = g.edges[i]
            u = e.v if e.u == v else e.u
            if state[u] == 0:
                state[v] = state[u] = 1
                covered += 2
                free -= 2
                cur_matching.append(i)
                dfs(v + 1)
                cur_matching.pop()
                state[v] = state[u] = 0
                covered -= 2
                free += 2
                if exhausted:
                    return

        # odd cycles through v over undecided vertices; the path grows with
        # vertices marked in-use, and closes only with path[1] < path[-1] so
        # each cycle is produced in one direction.
        path = [v]

        def extend() -> None:
            nonlocal nodes, exhausted, covered, free
            nodes += 1
            if nodes > max_nodes:
                exhausted = True
                return
            last = path[-1]
            length = len(path)
            if length >= 3 and length % 2 == 1 and last in nbr_sets[v] and path[1] < last:
                cur_cycles.append(tuple(path))
                covered += length
                dfs(v + 1)
                covered -= length
                cur_cycles.pop()
                if exhausted:
                    return
            for u in neighbors[last]:
                if state[u] == 0:
                    state[u] = 1
                    free -= 1
                    path.append(u)
                    extend()
                    path.pop()
                    state[u] = 0
                    free += 1
                    if exhausted:
                        return

        state[v] = 1
        free -= 1
        extend()
        state[v] = 0
        free += 1
        if exhausted:
            return

        # leave v uncovered
        state[v] = 2
        free -= 1
        dfs(v + 1)
        state[v] = 0
        free += 1

    dfs(0)
    return ElementarySubgraph(
        matching_edges=frozenset(best_matching),
        odd_cycles=best_cycles,
        covered=best_covered,
        alpha=n - best_covered,
        optimal=not exhausted,
    )


def _validate_subgraph(g: Graph, h: ElementarySubgraph) -> None:
    used: set[int] = set()
    for i in h.matching_edges:
        if not (0 <= i < len(g.edges)):
            raise InvalidSubgraph(f"edge index {i} out of range")
        e = g.edges[i]
        if e.u in used or e.v in used:
            raise InvalidSubgraph("components are not vertex-disjoint")
        used.update(e)
    for cyc in h.odd_cycles:
        if len(cyc) < 3 or len(cyc) % 2 == 0:
            raise InvalidSubgraph(f"cycle {cyc} is not odd of length >= 3")
        if len(set(cyc)) != len(cyc):
            raise InvalidSubgraph(f"cycle {cyc} repeats a vertex")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not g.has_edge(a, b):
                raise InvalidSubgraph(f"cycle {cyc} uses a missing edge ({a},{b})")
        if used.intersection(cyc):
            raise InvalidSubgraph("components are not vertex-disjoint")
        used.update(cyc)
    if h.covered != len(used):
        raise InvalidSubgraph(f"covered={h.covered} but components use {len(used)} vertices")
    if h.alpha != g.n_vertices - h.covered:
        raise InvalidSubgraph("alpha does not complement covered")


def elementary_lower_bound(g: Graph, h: ElementarySubgraph) -> Fraction:
    """-alpha(n - alpha)/4, exact, for a maximum elementary subgraph h of g.

    Rejects subgraphs flagged non-optimal: the bound requires maximality
    (uncovered vertices then have degree at most (n - alpha)/2), so a
    truncated search result must never be used silently.
    """
    if not h.optimal:
        raise InvalidSubgraph("subgraph is not known to be maximum (budget ran out)")
    _validate_subgraph(g, h)
    n = g.n_vertices
    return Fraction(-h.alpha * (n - h.alpha), 4)


def order_lower_bound(n: int) -> Fraction:
    """-n^2/16: valid for every graph of order n."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return Fraction(-n * n, 16)


def g_bounds(k: int) -> BoundsReport:
    """Sandwich report for the order-k minimum of gamma'_s.

    The lower bound -k^2/16 holds for every k; the upper bound
    -(k-8)^2/72 requires k >= 12 and is omitted (None) below that.
    """
    if k < 1:
        raise ValueError("order must be >= 1")
    lower = Fraction(-k * k, 16)
    if k < 12:
        return BoundsReport(k, lower, None, "-k^2/16", None)
    upper = Fraction(-((k - 8) ** 2), 72)
    sharper = None
    sharper_source = None
    if (k - 3) % 9 == 0:
        m = (k - 3) // 9
        sharper = Fraction(-m * k, 6)
        sharper_source = f"-(m/6)(9m+3) at m={m}"
    return BoundsReport(
        k, lower, upper, "-k^2/16", "-(k-8)^2/72", sharper, sharper_source
    )


def cycle_sum_check(g: Graph, f: EdgeLabeling, cycle: tuple[int, ...] | list[int]) -> int:
    """Sum of vertex sums around a cycle; nonnegative for every SEDF.

    Every consecutive pair on the cycle is an edge uv with s_u + s_v >= 0,
    and the cycle sum is half the total of those pair sums, so the result
    cannot be negative; the check is asserted before returning.
    """
    check_bound(g, f)
    if not is_sedf(g, f):
        raise NotAnSedf("labeling violates an edge domination condition")
    cyc = tuple(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycle(f"{cyc} is not a simple cycle")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= a < g.n_vertices) or not g.has_edge(a, b):
            raise NotACycle(f"({a},{b}) is not an edge of the graph")
    total = sum(vertex_sum(g, f, v) for v in cyc)
    if total < 0:
        raise AssertionError(f"cycle sum {total} < 0 contradicts domination")
    return total
