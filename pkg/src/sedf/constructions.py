"""Constructive SEDF families: layered clique graphs and K_{m,n} optima.

Two families are built here.

* Layered clique graphs ("L-graphs"): a clique block V_1 of size
  r = m*n + m + 1 joined to n independent blocks V_2..V_{n+1} of the same
  size, each through m pairwise disjoint perfect matchings (realized as the
  cyclic shifts j -> (j+k) mod r for k = 0..m-1), and no edges between the
  independent blocks.  Labeling the clique edges +1 and everything else -1
  is an SEDF of weight r*(m - m*n)/2, giving graphs of arbitrarily high
  connectivity whose signed edge domination number is very negative:
  at n = 2 the weight is exactly -(m/6) of the vertex count.

* Complete bipartite graphs: gamma'_s(K_{m,n}) for m <= n is
      even m, even n:  min(2m, n)
      odd  m, odd  n:  min(2m-1, n)
      even m, odd  n:  min(3m, max(2m, n+1))
      odd  m, even n:  min(3m-1, max(2m, n))
  and for every branch of the piecewise formula there is an explicit
  labeling realizing it; all of them are generated here, indexed by a
  construction id such as "i-f" or "iv-case3" (roman numeral = parity case
  in the order above, then which labeling inside that case).

All labelings use the vertex convention of complete_bipartite: part X is
u_1..u_m at vertices 0..m-1, part Y is v_1..v_n at vertices m..m+n-1, and
construction formulas are written 1-based in (i, j) with the translation
u_i -> i-1, v_j -> m+j-1 happening only at this boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CaseRangeViolation,
    NotAnLGraph,
    OverflowGuard,
    UnknownConstruction,
)
from .graph import EdgeLabeling, Graph, build_graph, complete_bipartite

MAX_L_GRAPH_VERTICES = 50_000


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph together with a named partition of its vertex set."""

    graph: Graph
    parts: dict[str, tuple[int, ...]]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        total = 0
        for name, block in self.parts.items():
            for v in block:
                if not (0 <= v < self.graph.n_vertices):
                    raise ValueError(f"part {name} contains invalid vertex {v}")
            total += len(block)
            seen.update(block)
        if total != len(seen) or len(seen) != self.graph.n_vertices:
            raise ValueError("parts must be disjoint and cover all vertices")

    def part_of(self) -> list[str]:
        """Vertex index -> part name."""
        owner = [""] * self.graph.n_vertices
        for name, block in self.parts.items():
            for v in block:
                owner[v] = name
        return owner


@dataclass(frozen=True)
class KmnCase:
    """Which branch of the K_{m,n} formula is active for a normalized pair."""

    parity_case: str  # "even-even" | "odd-odd" | "even-odd" | "odd-even"
    sub_case: str  # the active term of the min/max, e.g. "n" or "3m-1"
    construction_id: str


# ---------------------------------------------------------------------------
# Layered clique graphs
# ---------------------------------------------------------------------------


def l_graph(m: int, n: int, max_vertices: int = MAX_L_GRAPH_VERTICES) -> PartitionedGraph:
    """Build the layered clique graph for parameters m, n >= 1.

    Order (n+1)*r with r = m*n + m + 1.  V_1 = {0..r-1} induces a complete
    graph; block V_i (i >= 2) occupies vertices (i-1)*r..(i*r)-1 and is
    independent; vertex j of V_1 is joined to vertex (j+k) mod r of each V_i
    for k = 0..m-1.  Since m < r the m shift matchings are disjoint, so each
    V_1/V_i interface is exactly m disjoint perfect matchings.  Edge count:
    r(r-1)/2 + n*m*r.
    """
    if m < 1 or n < 1:
        raise ValueError(f"parameters must be >= 1, got ({m},{n})")
    r = m * n + m + 1
    order = (n + 1) * r
    if order > max_vertices:
        raise OverflowGuard(
            f"layered graph ({m},{n}) has {order} vertices; limit {max_vertices}"
        )
    pairs: list[tuple[int, int]] = []
    for a in range(r):
        for b in range(a + 1, r):
            pairs.append((a, b))
    for i in range(2, n + 2):
        base = (i - 1) * r
        for k in range(m):
            for j in range(r):
                pairs.append((j, base + (j + k) % r))
    graph = build_graph(order, pairs)
    parts = {f"V{i}": tuple(range((i - 1) * r, i * r)) for i in range(1, n + 2)}
    return PartitionedGraph(graph, parts)


def l_graph_params(lg: PartitionedGraph) -> tuple[int, int, int]:
    """Recover (m, n, r) from a partitioned graph, verifying the structure.

    Checks: parts named V1..V{n+1} of one common size r; V1 induces a
    complete graph; every other block is independent with no edges between
    two non-clique blocks; every V1/V_i interface is m-regular on both sides
    (which decomposes into m disjoint perfect matchings, bipartite regular
    graphs being 1-factorable); and r = m(n+1) + 1.  Raises NotAnLGraph on
    any violation.
    """
    p = len(lg.parts)
    if p < 2:
        raise NotAnLGraph("need at least two parts")
    n = p - 1
    for i in range(1, p + 1):
        if f"V{i}" not in lg.parts:
            raise NotAnLGraph(f"missing part V{i}")
    r = len(lg.parts["V1"])
    if r < 3 or any(len(lg.parts[f"V{i}"]) != r for i in range(1, p + 1)):
        raise NotAnLGraph("all parts must share one size >= 3")
    if (r - 1) % (n + 1) != 0:
        raise NotAnLGraph(f"block size {r} incompatible with {n} outer blocks")
    m = (r - 1) // (n + 1)
    if m < 1:
        raise NotAnLGraph("derived matching multiplicity is zero")

    owner = lg.part_of()
    clique_edges = 0
    cross_deg = [0] * lg.graph.n_vertices  # degree across a V1/V_i interface
    for u, v in lg.graph.edges:
        pu, pv = owner[u], owner[v]
        if pu == "V1" and pv == "V1":
            clique_edges += 1
        elif pu == "V1" or pv == "V1":
            cross_deg[u] += 1
            cross_deg[v] += 1
        else:
            raise NotAnLGraph(f"edge ({u},{v}) lies outside the clique interfaces")
    if clique_edges != r * (r - 1) // 2:
        raise NotAnLGraph("V1 does not induce a complete graph")
    for v in range(lg.graph.n_vertices):
        want = m * n if owner[v] == "V1" else m
        if cross_deg[v] != want:
            raise NotAnLGraph(f"vertex {v} has {cross_deg[v]} interface edges, not {want}")
    # V1 vertices must spread their m*n interface edges evenly: m per block.
    per_block = [[0] * (n + 2) for _ in range(r)]
    block_index = {f"V{i}": i for i in range(1, p + 1)}
    for u, v in lg.graph.edges:
        pu, pv = owner[u], owner[v]
        if pu == "V1" and pv != "V1":
            per_block[u][block_index[pv]] += 1
        elif pv == "V1" and pu != "V1":
            per_block[v][block_index[pu]] += 1
    for u in range(r):
        if any(per_block[u][i] != m for i in range(2, n + 2)):
            raise NotAnLGraph(f"clique vertex {u} is not {m}-regular into every block")
    return m, n, r


def l_graph_sedf(lg: PartitionedGraph) -> EdgeLabeling:
    """The SEDF labeling +1 on clique-internal edges, -1 elsewhere.

    Every clique vertex then has vertex sum (r-1) - m*n = m and every outer
    vertex has sum -m, so each closed edge neighborhood sums to at least 1;
    the total weight is r(r-1)/2 - n*m*r = r(m - m*n)/2.
    """
    l_graph_params(lg)
    v1 = set(lg.parts["V1"])
    vals = tuple(1 if (e.u in v1 and e.v in v1) else -1 for e in lg.graph.edges)
    return EdgeLabeling(lg.graph, vals)


def counterexample(m: int) -> tuple[PartitionedGraph, EdgeLabeling]:
    """An m-connected graph with an SEDF of weight -(m/6) of its order.

    This is the layered clique graph at n = 2: order 3(3m+1), labeling
    weight (3m+1)(-m)/2 = -(m/6)*|V|.  Any such pair with nonpositive
    weight refutes the claim that 2-connected graphs always have
    gamma'_s >= 1.
    """
    lg = l_graph(m, 2)
    return lg, l_graph_sedf(lg)


def remark_bound(m: int, n: int) -> Fraction:
    """Exact coefficient c(m,n) = -m(n-1)/(2(n+1)) with gamma'_s <= c*|V|.

    The layered graph labeling at (m, n) has weight r(m - m*n)/2 on
    (n+1)*r vertices, and the quotient reduces to the coefficient exactly;
    this identity is re-checked on every call.
    """
    if m < 1 or n < 1:
        raise ValueError(f"parameters must be >= 1, got ({m},{n})")
    coeff = Fraction(-m * (n - 1), 2 * (n + 1))
    r = m * n + m + 1
    weight = Fraction(r * (m - m * n), 2)
    order = (n + 1) * r
    if weight / order != coeff:
        raise AssertionError("weight/order identity violated")  # unreachable
    return coeff


# ---------------------------------------------------------------------------
# Complete bipartite constructions
# ---------------------------------------------------------------------------

CONSTRUCTION_IDS = (
    "i-f",
    "i-g",
    "ii-f",
    "ii-g",
    "iii-case1",
    "iii-case2",
    "iii-case3",
    "iv-case1",
    "iv-case2",
    "iv-case3",
)


def kmn_sedn(m: int, n: int) -> int:
    """gamma'_s(K_{m,n}) by the parity-case formula (orientation-free)."""
    if m < 1 or n < 1:
        raise ValueError(f"part sizes must be >= 1, got ({m},{n})")
    a, b = (m, n) if m <= n else (n, m)
    if a % 2 == 0 and b % 2 == 0:
        return min(2 * a, b)
    if a % 2 == 1 and b % 2 == 1:
        return min(2 * a - 1, b)
    if a % 2 == 0:
        return min(3 * a, max(2 * a, b + 1))
    return min(3 * a - 1, max(2 * a, b))


def kmn_case(m: int, n: int) -> KmnCase:
    """Active formula branch and optimal construction id, after normalizing
    to part sizes (a, b) with a <= b."""
    if m < 1 or n < 1:
        raise ValueError(f"part sizes must be >= 1, got ({m},{n})")
    a, b = (m, n) if m <= n else (n, m)
    if a % 2 == 0 and b % 2 == 0:
        if b <= 2 * a:
            return KmnCase("even-even", "n", "i-g")
        return KmnCase("even-even", "2m", "i-f")
    if a % 2 == 1 and b % 2 == 1:
        if b <= 2 * a - 1:
            return KmnCase("odd-odd", "n", "ii-g")
        return KmnCase("odd-odd", "2m-1", "ii-f")
    if a % 2 == 0:
        if b + 1 <= 2 * a:
            return KmnCase("even-odd", "2m", "iii-case1")
        if b + 1 <= 3 * a:
            return KmnCase("even-odd", "n+1", "iii-case2")
        return KmnCase("even-odd", "3m", "iii-case3")
    if b <= 2 * a:
        return KmnCase("odd-even", "2m", "iv-case1")
    if b <= 3 * a - 1:
        return KmnCase("odd-even", "n", "iv-case2")
    return KmnCase("odd-even", "3m-1", "iv-case3")


def construction_weight(m: int, n: int, construction_id: str) -> int:
    """Advertised labeling weight of a construction at (m, n), m <= n."""
    table = {
        "i-f": 2 * m,
        "i-g": n,
        "ii-f": 2 * m - 1,
        "ii-g": n,
        "iii-case1": 2 * m,
        "iii-case2": n + 1,
        "iii-case3": 3 * m,
        "iv-case1": 2 * m,
        "iv-case2": n,
        "iv-case3": 3 * m - 1,
    }
    if construction_id not in table:
        raise UnknownConstruction(construction_id)
    return table[construction_id]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CaseRangeViolation(msg)


def _check_range(m: int, n: int, construction_id: str) -> None:
    if construction_id not in CONSTRUCTION_IDS:
        raise UnknownConstruction(construction_id)
    _require(1 <= m <= n, f"need 1 <= m <= n, got ({m},{n})")
    parity = construction_id.split("-")[0]
    if parity == "i":
        _require(m % 2 == 0 and n % 2 == 0, "case i needs m, n both even")
    elif parity == "ii":
        _require(m % 2 == 1 and n % 2 == 1, "case ii needs m, n both odd")
    elif parity == "iii":
        _require(m % 2 == 0 and n % 2 == 1, "case iii needs m even, n odd")
        if construction_id == "iii-case1":
            _require(n + 1 <= 2 * m, f"case iii.1 needs n+1 <= 2m, got ({m},{n})")
        elif construction_id == "iii-case2":
            _require(2 * m < n + 1 <= 3 * m, f"case iii.2 needs 2m < n+1 <= 3m, got ({m},{n})")
        else:
            _require(3 * m < n + 1, f"case iii.3 needs 3m < n+1, got ({m},{n})")
    else:
        _require(m % 2 == 1 and n % 2 == 0, "case iv needs m odd, n even")
        if construction_id == "iv-case1":
            _require(n <= 2 * m, f"case iv.1 needs n <= 2m, got ({m},{n})")
        elif construction_id == "iv-case2":
            _require(2 * m < n <= 3 * m - 1, f"case iv.2 needs 2m < n <= 3m-1, got ({m},{n})")
        else:
            _require(3 * m - 1 < n, f"case iv.3 needs n > 3m-1, got ({m},{n})")


def _odd_odd_g(a: int, b: int, mod: int) -> int:
    """Value at (u_a, v_b) of the weight-n labeling for odd part sizes.

    +1 when a+b is odd, or when b is odd and a == b (mod m'+1) where m' is
    the smaller part size; -1 otherwise.  Gives vertex sum exactly 1 on the
    larger part and at least 1 (odd) on the smaller; on a square block both
    sides get exactly 1, which the block compositions below rely on.
    """
    if (a + b) % 2 == 1:
        return 1
    if b % 2 == 1 and (a - b) % mod == 0:
        return 1
    return -1


def _values(m: int, n: int, rule) -> tuple[int, ...]:
    # canonical edge order of complete_bipartite enumerates (i, j) row-major
    return tuple(rule(i, j) for i in range(1, m + 1) for j in range(1, n + 1))


def _construction_values(m: int, n: int, construction_id: str) -> tuple[int, ...]:
    _check_range(m, n, construction_id)

    if construction_id in ("i-f", "ii-f"):
        # +1 on odd i+j and on the diagonal: every u_i meets one extra +1.
        return _values(m, n, lambda i, j: 1 if (i + j) % 2 == 1 or i == j else -1)

    if construction_id == "i-g":
        # +1 on odd i+j and, for even i, on the whole residue class j == i
        # (mod m); even-indexed vertices gain sum 2, odd-indexed stay at 0.
        def rule(i: int, j: int) -> int:
            if (i + j) % 2 == 1:
                return 1
            if i % 2 == 0 and (i - j) % m == 0:
                return 1
            return -1

        return _values(m, n, rule)

    if construction_id == "ii-g":
        return _values(m, n, lambda i, j: _odd_odd_g(i, j, m + 1))

    half_x = m // 2
    if construction_id == "iii-case1":
        # Blocks X1 = u_1..u_{m/2}, Y1 = v_1..v_{(n+1)/2}.  Cross blocks are
        # +1; inside X1 x Y1 only the diagonal j = i and its shift
        # j = i + m/2 (mod (n+1)/2, residues written 1..(n+1)/2) are +1.
        half_y = (n + 1) // 2

        def rule(i: int, j: int) -> int:
            in_x1 = i <= half_x
            in_y1 = j <= half_y
            if in_x1 != in_y1:
                return 1
            if in_x1 and (j == i or j == (i + half_x - 1) % half_y + 1):
                return 1
            return -1

        return _values(m, n, rule)

    if construction_id == "iii-case2":
        # As case 1 but the X1 x Y1 positives are the full residue classes
        # j == i (mod m/2).
        half_y = (n + 1) // 2

        def rule(i: int, j: int) -> int:
            in_x1 = i <= half_x
            in_y1 = j <= half_y
            if in_x1 != in_y1:
                return 1
            if in_x1 and (i - j) % half_x == 0:
                return 1
            return -1

        return _values(m, n, rule)

    if construction_id == "iii-case3":
        # Y splits into Y1, Y2 of size (n-3)/2 and Y3 of size 3; the two
        # blocks X1 x Y1 and X2 x Y2 are -1, everything else +1, so every
        # u has sum 3 and every v has sum 0 or m.
        sy = (n - 3) // 2

        def rule(i: int, j: int) -> int:
            in_x1 = i <= half_x
            if j <= sy:
                negative = in_x1
            elif j <= 2 * sy:
                negative = not in_x1
            else:
                negative = False
            return -1 if negative else 1

        return _values(m, n, rule)

    if construction_id in ("iv-case1", "iv-case2"):
        # Split K_{m,n} into the square block on v_1..v_m and the rest; label
        # both blocks with the odd-odd weight-n labeling oriented so that the
        # X side of each block sums to exactly 1 (square block) and at least
        # 1 (rest), making every u sum to 2 and every v to at least 1.
        t = n - m

        def rule(i: int, j: int) -> int:
            if j <= m:
                return _odd_odd_g(i, j, m + 1)
            if t <= m:
                return _odd_odd_g(j - m, i, t + 1)
            return _odd_odd_g(i, j - m, m + 1)

        return _values(m, n, rule)

    # iv-case3: X1 = u_1..u_{(m+1)/2}; Y1 = v_1..v_{(3m+3)/2}, then Y2 of
    # size n/2 - 2, then Y3.  X1 is +1 into Y2 and onto the triple
    # j in {3i-2, 3i-1, 3i} inside Y1; X2 is +1 into Y1 and Y3.
    sx1 = (m + 1) // 2
    y1 = (3 * m + 3) // 2
    y2 = n // 2 - 2

    def rule(i: int, j: int) -> int:
        if j <= y1:
            block = 1
        elif j <= y1 + y2:
            block = 2
        else:
            block = 3
        if i <= sx1:
            if block == 2 or (block == 1 and 3 * i - 2 <= j <= 3 * i):
                return 1
            return -1
        return 1 if block != 2 else -1

    return _values(m, n, rule)


def kmn_construction(m: int, n: int, construction_id: str) -> EdgeLabeling:
    """One named SEDF of K_{m,n} (m <= n required), in caller orientation.

    The labeling always verifies as an SEDF and its weight equals
    construction_weight(m, n, construction_id); whether that weight is the
    optimum depends on which formula branch (m, n) falls in.
    """
    vals = _construction_values(m, n, construction_id)
    return EdgeLabeling(complete_bipartite(m, n), vals)


def _transpose(vals: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Reindex a K_{a,b} labeling onto K_{b,a} (swap the two parts)."""
    out = [0] * (a * b)
    for q in range(a):
        for p in range(b):
            out[p * a + q] = vals[q * b + p]
    return tuple(out)


def kmn_witness(m: int, n: int) -> EdgeLabeling:
    """An optimal SEDF of K_{m,n}: weight kmn_sedn(m, n), any orientation.

    Dispatches on the active formula branch after normalizing to the smaller
    part first, then maps the labeling back to the caller's orientation.
    """
    a, b = (m, n) if m <= n else (n, m)
    case = kmn_case(a, b)
    vals = _construction_values(a, b, case.construction_id)
    if m > n:
        vals = _transpose(vals, a, b)
    return EdgeLabeling(complete_bipartite(m, n), vals)


def kmn_blocks(m: int, n: int, construction_id: str) -> PartitionedGraph:
    """The vertex partition a construction labels against (m <= n required).

    Useful for checking the per-block vertex sums each construction
    advertises.  Block names follow the construction: X/Y for the parity
    cases with global rules, X1/X2/Y1/Y2(/Y3) for the split cases, and
    X/Y1/Y2 for the odd-even composed cases (Y1 = the square block).
    """
    _check_range(m, n, construction_id)
    g = complete_bipartite(m, n)
    x = tuple(range(m))
    y = tuple(range(m, m + n))
    if construction_id in ("i-f", "i-g", "ii-f", "ii-g"):
        return PartitionedGraph(g, {"X": x, "Y": y})
    if construction_id in ("iii-case1", "iii-case2"):
        hx, hy = m // 2, (n + 1) // 2
        return PartitionedGraph(
            g,
            {
                "X1": x[:hx],
                "X2": x[hx:],
                "Y1": y[:hy],
                "Y2": y[hy:],
            },
        )
    if construction_id == "iii-case3":
        hx, sy = m // 2, (n - 3) // 2
        return PartitionedGraph(
            g,
            {
                "X1": x[:hx],
                "X2": x[hx:],
                "Y1": y[:sy],
                "Y2": y[sy : 2 * sy],
                "Y3": y[2 * sy :],
            },
        )
    if construction_id in ("iv-case1", "iv-case2"):
        return PartitionedGraph(g, {"X": x, "Y1": y[:m], "Y2": y[m:]})
    sx1, y1, y2 = (m + 1) // 2, (3 * m + 3) // 2, n // 2 - 2
    return PartitionedGraph(
        g,
        {
            "X1": x[:sx1],
            "X2": x[sx1:],
            "Y1": y[:y1],
            "Y2": y[y1 : y1 + y2],
            "Y3": y[y1 + y2 :],
        },
    )
