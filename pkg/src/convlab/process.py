"""Irreversible k-threshold conversion dynamics.

A process starts from a seed set; at each step every unconverted vertex with
at least k converted neighbours converts.  Conversions never revert.
"""

from dataclasses import dataclass

from .graph import bit_count, bits, vset_members
from .structure import is_r_degenerate, regular_degree


@dataclass(frozen=True)
class ConversionTrace:
    threshold: int
    layers: tuple  # layers[0] = seed, layers[t] = vertices converted at step t
    converted: int  # union bitmask
    complete: bool
    time: int  # last t with a nonempty layer

    def layer_union(self, start):
        """Union of layers[start:], e.g. start=2 for late conversions."""
        m = 0
        for layer in self.layers[start:]:
            m |= layer
        return m

    def to_text(self):
        lines = []
        for t, layer in enumerate(self.layers):
            lines.append(f"{t}: " + " ".join(str(v) for v in vset_members(layer)))
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            "threshold": self.threshold,
            "layers": [vset_members(layer) for layer in self.layers],
            "converted": vset_members(self.converted),
            "complete": self.complete,
            "time": self.time,
        }


def run_process(g, seed_mask, k):
    """Run the synchronous conversion process to its fixed point.

    Layer t is computed from the union of layers 0..t-1.  An empty seed is
    allowed and simply stays put.
    """
    if k < 1:
        raise ValueError("threshold k must be >= 1")
    layers = [seed_mask]
    converted = seed_mask
    full = g.full_mask
    while converted != full:
        new = 0
        for v in bits(full & ~converted):
            if bit_count(g.adj[v] & converted) >= k:
                new |= 1 << v
        if not new:
            break
        layers.append(new)
        converted |= new
    return ConversionTrace(
        threshold=k,
        layers=tuple(layers),
        converted=converted,
        complete=converted == full,
        time=len(layers) - 1,
    )


def is_conversion_set(g, seed_mask, k):
    return run_process(g, seed_mask, k).complete


def is_k_immune(g, u_mask, k):
    """True iff every vertex of the set has fewer than k outside neighbours."""
    if u_mask == 0:
        raise ValueError("a k-immune set must be nonempty")
    outside = g.full_mask & ~u_mask
    return all(bit_count(g.adj[v] & outside) < k for v in bits(u_mask))


def residual_core(g, x_mask, k):
    """Peel from X every vertex with >= k neighbours outside the shrinking
    set; the stuck core is empty iff seeding V-X converts all of X.

    Vertices are removed in ascending id order each sweep.
    """
    if k < 1:
        raise ValueError("threshold k must be >= 1")
    cur = x_mask
    changed = True
    while changed and cur:
        changed = False
        for v in vset_members(cur):
            outside = g.full_mask & ~cur
            if bit_count(g.adj[v] & outside) >= k:
                cur &= ~(1 << v)
                changed = True
    return cur


def contains_k_immune_set(g, x_mask, k):
    """True iff some nonempty subset of X is k-immune (the residual core is
    exactly the largest such subset)."""
    return residual_core(g, x_mask, k) != 0


@dataclass(frozen=True)
class CharacterizationReport:
    simulated: bool
    complement_rule: object  # bool, or None when the rule does not apply
    degeneracy_order: object  # r = degree - k when the rule applies


def characterization_check(g, s_mask, k):
    """Compare simulation with the complement characterization.

    For a (k+r)-regular graph, S converts iff G[V-S] is r-degenerate
    (r = 0: independent complement; r = 1: forest complement).  The two
    verdicts must agree whenever both are defined.
    """
    simulated = is_conversion_set(g, s_mask, k)
    d = regular_degree(g)
    if d is None or d < k:
        return CharacterizationReport(simulated=simulated, complement_rule=None, degeneracy_order=None)
    r = d - k
    rule = is_r_degenerate(g, g.full_mask & ~s_mask, r)
    return CharacterizationReport(simulated=simulated, complement_rule=rule, degeneracy_order=r)
