"""Structural predicates: regularity, girth, bridges, connectivity,
degeneracy and chromatic class (cubic graphs).
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, bit_count, components, is_connected, vset_members

CLASS1 = "Class1"
CLASS2 = "Class2"


def regular_degree(g):
    """Common degree if g is regular, else None."""
    if g.n == 0:
        return None
    degs = g.degrees()
    d = degs[0]
    return d if all(x == d for x in degs) else None


def is_cubic(g):
    return regular_degree(g) == 3


def max_degree(g):
    return max(g.degrees(), default=0)


def girth(g, mask=None):
    """Length of a shortest cycle in the subgraph induced by mask, or None
    if it is a forest.  BFS from every vertex."""
    if mask is None:
        mask = g.full_mask
    best = None
    for root in bits(mask):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if best is not None and dist[u] * 2 >= best:
                    continue
                for w in bits(g.adj[u] & mask):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        cyc = dist[u] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            frontier = nxt
    return best


def triangle_free(g):
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


def has_cycle(g, mask=None):
    """True iff the subgraph induced by mask contains a cycle."""
    if mask is None:
        mask = g.full_mask
    for comp in components(g, mask):
        edges = sum(bit_count(g.adj[v] & comp) for v in bits(comp)) // 2
        if edges >= bit_count(comp):
            return True
    return False


def bridges(g):
    """All cut edges, found by an iterative lowpoint DFS.

    Returned as sorted (u, v) pairs with u < v, in ascending order.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
                # w == parent occurs exactly once in a simple graph: skip it
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.append((min(p, v), max(p, v)))
    return sorted(out)


def _max_flow(n, cap, s, t):
    """Edmonds-Karp on a dict-of-dicts capacity structure (mutated copy)."""
    flow = 0
    while True:
        parent = {s: None}
        queue = [s]
        while queue and t not in parent:
            u = queue.pop(0)
            for v, c in cap.get(u, {}).items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow
        # unit-ish capacities: bottleneck
        path = []
        v = t
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        aug = min(cap[u][v] for u, v in path)
        for u, v in path:
            cap[u][v] -= aug
            cap.setdefault(v, {}).setdefault(u, 0)
            cap[v][u] += aug
        flow += aug


_BIG = 10**9


def _vertex_flow(g, s, t):
    """Number of internally disjoint s-t paths (s, t non-adjacent)."""
    # split v -> (2v = in, 2v+1 = out)
    cap = {}
    for v in range(g.n):
        c = _BIG if v in (s, t) else 1
        cap.setdefault(2 * v, {})[2 * v + 1] = c
    for u, v in g.edges():
        cap.setdefault(2 * u + 1, {})[2 * v] = _BIG
        cap.setdefault(2 * v + 1, {})[2 * u] = _BIG
    return _max_flow(2 * g.n, cap, 2 * s + 1, 2 * t)


def _edge_flow(g, s, t):
    cap = {}
    for u, v in g.edges():
        cap.setdefault(u, {})[v] = 1
        cap.setdefault(v, {})[u] = 1
    return _max_flow(g.n, cap, s, t)


def vertex_connectivity(g):
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.edge_count == g.n * (g.n - 1) // 2:
        return g.n - 1
    # Even-Tarjan style: a min-degree root, flows to its non-neighbours,
    # plus flows between non-adjacent pairs of its neighbours.
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.degree(v0)
    for t in range(g.n):
        if t != v0 and not g.has_edge(v0, t):
            best = min(best, _vertex_flow(g, v0, t))
    nbrs = list(g.neighbors(v0))
    for x, y in combinations(nbrs, 2):
        if not g.has_edge(x, y):
            best = min(best, _vertex_flow(g, x, y))
    return best


def edge_connectivity(g):
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    return min(_edge_flow(g, 0, t) for t in range(1, g.n))


def is_k_connected(g, k):
    if k < 1:
        raise ValueError("k must be >= 1")
    return g.n > k and vertex_connectivity(g) >= k


def cyclic_edge_connectivity_at_least(g, c):
    """True iff no edge cut of size < c splits g into two parts that each
    contain a cycle.  Exhaustive cut enumeration; cubic graphs only,
    guarded to c <= 4 and m <= 200."""
    if not is_cubic(g):
        raise ValueError("cyclic edge connectivity check requires a cubic graph")
    if c > 4:
        raise ValueError("only c <= 4 is supported")
    if g.edge_count > 200:
        raise ValueError("size guard exceeded (m > 200)")
    edges = g.edges()
    for size in range(1, c):
        for cut in combinations(edges, size):
            adj = list(g.adj)
            for u, v in cut:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            h = Graph(n=g.n, adj=tuple(adj), edge_count=g.edge_count - size)
            comps = components(h)
            if len(comps) < 2:
                continue
            cyclic = 0
            for comp in comps:
                m_comp = sum(bit_count(h.adj[v] & comp) for v in bits(comp)) // 2
                if m_comp >= bit_count(comp):
                    cyclic += 1
            if cyclic >= 2:
                return False
    return True


def _dfs_edge_order(g):
    """Edge ids ordered by a DFS tour from vertex 0 (ties by lowest id)."""
    edges = g.edges()
    eid = {e: i for i, e in enumerate(edges)}
    order = []
    seen_e = set()
    visited = [False] * g.n
    for root in range(g.n):
        if visited[root]:
            continue
        stack = [root]
        visited[root] = True
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                e = (min(v, w), max(v, w))
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(eid[e])
                if not visited[w]:
                    visited[w] = True
                    stack.append(w)
    return [edges[i] for i in order]


def edge_coloring(g, num_colors):
    """Proper edge colouring with the given palette, or None.

    Backtracking over edges in DFS-tour order; at each step the most
    constrained edge is coloured first (forced colours propagate), ties by
    edge position.  Deterministic.
    """
    edges = _dfs_edge_order(g)
    m = len(edges)
    full = (1 << num_colors) - 1
    vused = [0] * g.n
    colors = [-1] * m
    # symmetry breaking: edges at the first branch vertex get fixed colours
    uncolored = set(range(m))

    def choose():
        best = None
        best_key = None
        for i in uncolored:
            u, v = edges[i]
            avail = full & ~(vused[u] | vused[v])
            k = bit_count(avail)
            if k == 0:
                return i, 0
            key = (k, i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        return best, best_key[0]

    def solve():
        if not uncolored:
            return True
        i, navail = choose()
        if navail == 0:
            return False
        u, v = edges[i]
        avail = full & ~(vused[u] | vused[v])
        uncolored.discard(i)
        for col in bits(avail):
            bit = 1 << col
            colors[i] = col
            vused[u] |= bit
            vused[v] |= bit
            if solve():
                return True
            vused[u] &= ~bit
            vused[v] &= ~bit
            colors[i] = -1
        uncolored.add(i)
        return False

    # fix the colours of the edges at vertex 0 (colour classes are
    # interchangeable, so this loses no solutions)
    first = [i for i, (u, v) in enumerate(edges) if u == 0 or v == 0]
    for col, i in enumerate(first[:num_colors]):
        u, v = edges[i]
        if (vused[u] | vused[v]) & (1 << col):
            break
        colors[i] = col
        vused[u] |= 1 << col
        vused[v] |= 1 << col
        uncolored.discard(i)

    if not solve():
        return None
    out = {}
    for i, e in enumerate(edges):
        out[e] = colors[i]
    return out


def chromatic_class(g):
    """Class1 iff a proper 3-edge-colouring exists.  Cubic connected input.

    Fast path: a bridged cubic graph is always Class2.
    """
    if not is_cubic(g):
        raise ValueError("chromatic_class requires a cubic graph")
    if not is_connected(g):
        raise ValueError("chromatic_class requires a connected graph")
    if bridges(g):
        return CLASS2
    return CLASS1 if edge_coloring(g, 3) is not None else CLASS2


def degeneracy_peel(g, x_mask, r):
    """Peel vertices of induced degree <= r from G[x_mask].

    Returns (ok, elimination_order, core_mask): ok is True iff the peeling
    empties the set; on success core_mask == 0, on failure the stuck core is
    returned and the order covers the peeled prefix.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    cur = x_mask
    order = []
    changed = True
    while changed and cur:
        changed = False
        for v in vset_members(cur):
            if bit_count(g.adj[v] & cur) <= r:
                cur &= ~(1 << v)
                order.append(v)
                changed = True
    return cur == 0, order, cur


def is_r_degenerate(g, x_mask, r):
    ok, _, _ = degeneracy_peel(g, x_mask, r)
    return ok


def is_maximal_r_degenerate(h, r):
    """True iff h is r-degenerate and adding any non-edge breaks that."""
    if not is_r_degenerate(h, h.full_mask, r):
        raise ValueError("input graph is not r-degenerate")
    for x in range(h.n):
        for y in range(x + 1, h.n):
            if h.has_edge(x, y):
                continue
            adj = list(h.adj)
            adj[x] |= 1 << y
            adj[y] |= 1 << x
            h2 = Graph(n=h.n, adj=tuple(adj), edge_count=h.edge_count + 1)
            if is_r_degenerate(h2, h2.full_mask, r):
                return False
    return True


@dataclass(frozen=True)
class StructureReport:
    regular_degree: object
    girth: object
    bridge_list: tuple
    vertex_connectivity: int
    edge_connectivity: int
    cyclically_4_connected: object  # cubic only, else None
    chromatic_class: object  # connected cubic only, else None
    triangle_free: bool


def structure_report(g):
    d = regular_degree(g)
    cubic = d == 3
    c4 = None
    cls = None
    if cubic and g.edge_count <= 200:
        c4 = cyclic_edge_connectivity_at_least(g, 4)
    if cubic and is_connected(g):
        cls = chromatic_class(g)
    return StructureReport(
        regular_degree=d,
        girth=girth(g),
        bridge_list=tuple(bridges(g)),
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        cyclically_4_connected=c4,
        chromatic_class=cls,
        triangle_free=triangle_free(g),
    )
