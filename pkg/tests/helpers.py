"""Shared test utilities: seeded generators and brute-force oracles.

The oracles deliberately avoid the library's optimized code paths: SEDF
checks sum over the closed neighborhood sets directly instead of using the
vertex-sum identity, and the minimizers enumerate the full label space with
no pruning.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from sedf import EdgeLabeling, Graph, build_graph, closed_neighborhood


def random_graph(rng, max_n: int = 8, max_edges: int = 10) -> Graph:
    n = rng.randint(1, max_n)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    k = rng.randint(0, min(max_edges, len(pairs)))
    return build_graph(n, pairs[:k])


def random_labeling(rng, g: Graph) -> EdgeLabeling:
    return EdgeLabeling(g, tuple(rng.choice((-1, 1)) for _ in g.edges))


def random_matchable_graph(rng, max_half: int = 6, max_extra: int = 6):
    """A graph with a planted perfect matching; returns (graph, matching pairs)."""
    half = rng.randint(1, max_half)
    n = 2 * half
    verts = list(range(n))
    rng.shuffle(verts)
    matching = [tuple(sorted((verts[2 * i], verts[2 * i + 1]))) for i in range(half)]
    chosen = set(matching)
    others = [p for p in itertools.combinations(range(n), 2) if p not in chosen]
    rng.shuffle(others)
    extra = rng.randint(0, min(max_extra, len(others)))
    return build_graph(n, list(chosen) + others[:extra]), matching


def naive_domination_sum(g: Graph, values, e: int) -> int:
    return sum(values[i] for i in closed_neighborhood(g, e))


def naive_is_sedf(g: Graph, values) -> bool:
    return all(naive_domination_sum(g, values, e) >= 1 for e in range(len(g.edges)))


def brute_force_sedn(g: Graph):
    """(min weight, lexicographically smallest argmin) over all SEDFs."""
    best = None
    for vec in itertools.product((-1, 1), repeat=len(g.edges)):
        if naive_is_sedf(g, vec):
            key = (sum(vec), vec)
            if best is None or key < best:
                best = key
    return best


def brute_force_elementary_cover(g: Graph) -> int:
    """Max vertices covered by any elementary edge subset, by enumeration."""
    m = len(g.edges)
    best = 0
    for mask in range(1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        adj = defaultdict(list)
        ok = True
        for i in chosen:
            e = g.edges[i]
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
            if len(adj[e.u]) > 2 or len(adj[e.v]) > 2:
                ok = False
                break
        if not ok:
            continue
        seen: set[int] = set()
        for s in list(adj):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = [s]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            degs = [len(adj[x]) for x in comp]
            is_cycle = all(d == 2 for d in degs)
            is_edge = len(comp) == 2 and sum(degs) == 2
            if not (is_cycle or is_edge):
                ok = False
                break
        if ok:
            best = max(best, len(adj))
    return best


def sample_cycles(g: Graph, limit: int = 50) -> list[tuple[int, ...]]:
    """Up to ``limit`` simple cycles: the fundamental cycles of a BFS forest."""
    n = g.n_vertices
    parent = [-1] * n
    depth = [-1] * n
    tree_edges: set[int] = set()
    for root in range(n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for i in g.adjacency[v]:
                    e = g.edges[i]
                    u = e.v if e.u == v else e.u
                    if depth[u] < 0:
                        depth[u] = depth[v] + 1
                        parent[u] = v
                        tree_edges.add(i)
                        nxt.append(u)
            queue = nxt
    cycles = []
    for i, e in enumerate(g.edges):
        if i in tree_edges:
            continue
        u, v = e
        pu, pv = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            pu.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            pv.append(b)
        while a != b:
            a = parent[a]
            b = parent[b]
            pu.append(a)
            pv.append(b)
        cycle = tuple(pu + pv[-2::-1])  # u .. lca .. v, closed by edge uv
        if len(cycle) >= 3:
            cycles.append(cycle)
        if len(cycles) >= limit:
            break
    return cycles
