"""Branch-and-bound search for a maximum induced r-degenerate subgraph.

This is the solver core: for a (k+r)-regular graph the minimum k-conversion
set is the complement of a maximum induced r-degenerate vertex set (r = 0:
independent set, r = 1: forest).  Pruning combines an edge-count bound (an
r-degenerate graph on q vertices has at most rq - r(r+1)/2 edges) with a
greedy vertex-disjoint cycle packing when r = 1.
"""

from .graph import bit_count, bits, vset_members
from .structure import degeneracy_peel, is_r_degenerate


def shortest_cycle(g, mask):
    """Vertex mask of one shortest cycle inside G[mask], or 0 if acyclic."""
    best_len = None
    best_cycle = 0
    for root in bits(mask):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if best_len is not None and dist[u] * 2 >= best_len:
                    continue
                for w in bits(g.adj[u] & mask):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        length = dist[u] + dist[w] + 1
                        if best_len is None or length < best_len:
                            cyc = 0
                            for end in (u, w):
                                x = end
                                while x != -1:
                                    cyc |= 1 << x
                                    x = parent[x]
                            best_len = length
                            best_cycle = cyc
            frontier = nxt
    return best_cycle


def greedy_cycle_packing(g, mask=None):
    """Greedy vertex-disjoint cycle packing (shortest cycle first).

    Returns the list of cycle masks; its length is a valid lower bound on
    the number of vertices any decycling set must contain.
    """
    cur = g.full_mask if mask is None else mask
    packing = []
    while True:
        cyc = shortest_cycle(g, cur)
        if not cyc:
            return packing
        packing.append(cyc)
        cur &= ~cyc


def _greedy_feasible(g, r, within):
    """Feasible incumbent: drop highest-degree core vertices until the
    peeling succeeds."""
    cur = within
    while True:
        ok, _, core = degeneracy_peel(g, cur, r)
        if ok:
            return cur
        v = max(bits(core), key=lambda x: (bit_count(g.adj[x] & cur), -x))
        cur &= ~(1 << v)


def max_r_degenerate_set(g, r, within=None):
    """Maximum induced r-degenerate vertex set within the given mask.

    Returns (size, mask, nodes_explored).  Deterministic: branches on the
    highest-degree undecided vertex (ties by lowest id), removal first.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    within = g.full_mask if within is None else within
    nodes = 0
    best_mask = _greedy_feasible(g, r, within)
    best = bit_count(best_mask)
    lw_const = r * (r + 1) // 2

    def rec(kept, undecided):
        nonlocal best, best_mask, nodes
        nodes += 1
        # safe moves: a vertex of remaining degree <= r is always in some
        # optimal solution; for r = 0 kept neighbours force removals
        while True:
            sub = kept | undecided
            if r == 0:
                blocked = 0
                for v in bits(kept):
                    blocked |= g.adj[v]
                undecided &= ~blocked
                sub = kept | undecided
            moved = 0
            for v in bits(undecided):
                if bit_count(g.adj[v] & sub) <= r:
                    moved |= 1 << v
            if not moved:
                break
            kept |= moved
            undecided &= ~moved
        if not undecided:
            size = bit_count(kept)
            if size > best:
                best, best_mask = size, kept
            return
        sub = kept | undecided
        n_sub = bit_count(sub)
        if n_sub <= best:
            return
        degs = [(bit_count(g.adj[v] & sub), v) for v in bits(undecided)]
        m_sub = sum(bit_count(g.adj[v] & sub) for v in bits(sub)) // 2
        max_deg = max(bit_count(g.adj[v] & sub) for v in bits(sub))
        if max_deg > r:
            excess = m_sub - r * n_sub + lw_const
            if excess > 0:
                d_min = -(-excess // (max_deg - r))
                if n_sub - d_min <= best:
                    return
        if r == 1:
            packing = len(greedy_cycle_packing(g, sub))
            if n_sub - packing <= best:
                return
        _, v = max(degs, key=lambda t: (t[0], -t[1]))
        rest = undecided & ~(1 << v)
        rec(kept, rest)
        if is_r_degenerate(g, kept | (1 << v), r):
            rec(kept | (1 << v), rest)

    rec(0, within)
    return best, best_mask, nodes
