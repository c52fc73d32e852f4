"""Signed edge domination: verification and exact minimization.

A labeling f: E -> {-1,+1} is a signed edge domination function (SEDF) when
the labels over every closed edge neighborhood N[e] sum to at least 1.  For
e = uv that sum equals s_u + s_v - f(e), where s_v is the sum of labels
incident to v; the verifier uses this identity.  The signed edge domination
number is the minimum total weight over all SEDFs, computed here by an exact
depth-first branch and bound that returns a certificate: the optimal value,
a witness labeling, and a completeness flag.

Search design notes
-------------------
* Edges are branched in canonical index order, label -1 tried before +1, so
  complete labelings are visited in lexicographic order.  The incumbent is
  replaced only on strict improvement, which makes the first optimum reached
  the lexicographically smallest optimal witness; no tie exploration needed.
* For every edge constraint x the search maintains slack(x) = (sum of
  decided labels in N[x]) + (number of undecided edges in N[x]), the best
  sum the constraint can still reach.  slack < 1 kills the branch; slack <= 2
  forces every undecided edge of N[x] to +1.  Only -1 assignments lower
  slack, so forcing never cascades.
* Subtree weights are bounded below by current weight minus the number of
  undecided edges; branches that cannot beat the incumbent are cut.
* The initial incumbent is the all-(+1) labeling, an SEDF of every graph.
* The budget is a node count, not wall time, so runs are reproducible.  On
  exhaustion the best-so-far certificate is returned with optimal=False.
* The search tree may be split over worker processes by fixing all +/-1
  prefixes of a small block of leading edges; the per-block results reduce
  by (value, labels) minimum, which is associative and schedule-independent.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .errors import IndexOutOfRange
from .graph import EdgeLabeling, Graph, all_positive, check_bound

DEFAULT_MAX_NODES = 50_000_000


@dataclass(frozen=True)
class SednCertificate:
    """Result of an exact search: minimum weight with a verified witness.

    ``optimal`` is True when the search space was exhausted, i.e. no SEDF of
    the graph weighs less than ``value``.  The witness is always an SEDF of
    weight ``value``; among minimum-weight SEDFs it is the lexicographically
    smallest label vector in canonical edge order (-1 < +1).
    """

    value: int
    witness: EdgeLabeling
    optimal: bool
    nodes_explored: int


def labeling_weight(f: EdgeLabeling) -> int:
    """Total weight of a labeling; same parity as the number of edges."""
    return sum(f.values)


def edge_domination_sum(g: Graph, f: EdgeLabeling, e: int) -> int:
    """Sum of labels over N[e], computed as s_u + s_v - f(e)."""
    check_bound(g, f)
    if not (0 <= e < len(g.edges)):
        raise IndexOutOfRange(f"edge index {e} out of range")
    u, v = g.edges[e]
    su = sum(f.values[i] for i in g.adjacency[u])
    sv = sum(f.values[i] for i in g.adjacency[v])
    return su + sv - f.values[e]


def is_sedf(g: Graph, f: EdgeLabeling) -> bool:
    """True iff every closed edge neighborhood sums to at least 1.

    Vacuously true for edgeless graphs.
    """
    check_bound(g, f)
    s = [0] * g.n_vertices
    for (u, v), w in zip(g.edges, f.values):
        s[u] += w
        s[v] += w
    return all(s[u] + s[v] - w >= 1 for (u, v), w in zip(g.edges, f.values))


def edge_neighborhoods(g: Graph) -> list[tuple[int, ...]]:
    """Closed neighborhood N[e] as a sorted index tuple, for every edge."""
    out = []
    for e, (u, v) in enumerate(g.edges):
        seen = set(g.adjacency[u])
        seen.update(g.adjacency[v])
        out.append(tuple(sorted(seen)))
    return out


def _run_search(
    nbhd: list[tuple[int, ...]],
    prefix: tuple[int, ...],
    max_nodes: int,
    incumbent: tuple[int, tuple[int, ...] | None],
) -> tuple[int, tuple[int, ...] | None, int, bool]:
    """Exhaust all completions of ``prefix``; return (w, labels, nodes, done).

    ``incumbent`` seeds the best (weight, labels) pair; labels may be None
    when no witness is known yet.  Only strictly better labelings replace it.
    """
    m = len(nbhd)
    label = [0] * m
    slack = [len(nbhd[e]) for e in range(m)]
    cur_w = 0
    n_assigned = 0
    nodes = 0
    exhausted = False
    best_w, best_vec = incumbent

    def assign_minus(e: int) -> tuple[bool, list[int]]:
        nonlocal cur_w, n_assigned
        assigned = [e]
        label[e] = -1
        cur_w -= 1
        n_assigned += 1
        ok = True
        for x in nbhd[e]:
            slack[x] -= 2
            if slack[x] <= 0:
                ok = False
        if ok:
            for x in nbhd[e]:
                if slack[x] <= 2:
                    for y in nbhd[x]:
                        if label[y] == 0:
                            label[y] = 1
                            cur_w += 1
                            n_assigned += 1
                            assigned.append(y)
        return ok, assigned

    def undo(assigned: list[int]) -> None:
        nonlocal cur_w, n_assigned
        for e in reversed(assigned):
            if label[e] == -1:
                cur_w += 1
                for x in nbhd[e]:
                    slack[x] += 2
            else:
                cur_w -= 1
            label[e] = 0
            n_assigned -= 1

    # Constraints that start at slack <= 2 (tiny neighborhoods) force their
    # edges to +1 before any branching.
    for x in range(m):
        if slack[x] <= 2:
            for y in nbhd[x]:
                if label[y] == 0:
                    label[y] = 1
                    cur_w += 1
                    n_assigned += 1

    feasible = True
    for i, w in enumerate(prefix):
        if label[i] != 0:
            if label[i] != w:
                feasible = False
                break
            continue
        if w == 1:
            label[i] = 1
            cur_w += 1
            n_assigned += 1
        else:
            ok, _ = assign_minus(i)
            if not ok:
                feasible = False
                break

    def dfs(lo: int) -> None:
        nonlocal nodes, exhausted, best_w, best_vec, cur_w, n_assigned
        nodes += 1
        if nodes > max_nodes:
            exhausted = True
            return
        e = lo
        while e < m and label[e] != 0:
            e += 1
        if e == m:
            if cur_w < best_w:
                best_w = cur_w
                best_vec = tuple(label)
            return
        ok, assigned = assign_minus(e)
        if ok and cur_w - (m - n_assigned) < best_w:
            dfs(e + 1)
        undo(assigned)
        if exhausted:
            return
        label[e] = 1
        cur_w += 1
        n_assigned += 1
        if cur_w - (m - n_assigned) < best_w:
            dfs(e + 1)
        label[e] = 0
        cur_w -= 1
        n_assigned -= 1

    if feasible:
        dfs(0)
    return best_w, best_vec, nodes, not exhausted


def _solve_block(args: tuple[Graph, tuple[int, ...], int]):
    g, prefix, max_nodes = args
    m = len(g.edges)
    return _run_search(edge_neighborhoods(g), prefix, max_nodes, (m + 1, None))


def exact_sedn(
    g: Graph, max_nodes: int | None = None, workers: int = 1
) -> SednCertificate:
    """Minimum SEDF weight of g with a witness, by exact branch and bound.

    Edgeless graphs take the value 0 with the empty witness: every condition
    is vacuous, so the empty labeling is the (only) SEDF and the minimum is
    total rather than undefined.

    ``max_nodes`` bounds the number of search nodes (default
    DEFAULT_MAX_NODES); if it is hit, the best labeling found so far is
    returned with optimal=False.  ``workers`` > 1 splits the search across
    processes; value and witness do not depend on the schedule.
    """
    if max_nodes is None:
        max_nodes = DEFAULT_MAX_NODES
    m = len(g.edges)
    if m == 0:
        return SednCertificate(0, EdgeLabeling(g, ()), True, 0)
    if workers <= 1:
        start = all_positive(g)
        w, vec, nodes, done = _run_search(
            edge_neighborhoods(g), (), max_nodes, (m, start.values)
        )
        assert vec is not None
        return SednCertificate(w, EdgeLabeling(g, vec), done, nodes)

    depth = min(m, max(2, workers.bit_length()))
    prefixes = list(product((-1, 1), repeat=depth))
    block_budget = max(1000, max_nodes // len(prefixes))
    best: tuple[int, tuple[int, ...]] | None = None
    nodes = 0
    done = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [(g, p, block_budget) for p in prefixes]
        for w, vec, block_nodes, block_done in pool.map(_solve_block, jobs):
            nodes += block_nodes
            done = done and block_done
            if vec is not None and (best is None or (w, vec) < best):
                best = (w, vec)
    if best is None:
        return SednCertificate(m, all_positive(g), False, nodes)
    return SednCertificate(best[0], EdgeLabeling(g, best[1]), done, nodes)
