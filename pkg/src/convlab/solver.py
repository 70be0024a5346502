"""Exact k-conversion numbers with witnesses, cross-checked two ways."""

import time
from dataclasses import dataclass
from itertools import combinations

from .graph import bit_count, vset
from .process import is_conversion_set
from .search import max_r_degenerate_set
from .structure import max_degree, regular_degree

ORACLE = "Oracle"
COMPLEMENT_BNB = "ComplementBnB"

ORACLE_GUARD = 30


class OracleGuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int  # vertex-set bitmask; always a verified conversion set
    method: str
    nodes_explored: int
    elapsed: float


def independence_number(g):
    """Exact maximum independent set size (branch and bound)."""
    size, _, _ = max_r_degenerate_set(g, 0)
    return size


def forest_number(g):
    """Maximum order of an induced forest (any graph)."""
    size, _, _ = max_r_degenerate_set(g, 1)
    return size


def decycling_number(g):
    return g.n - forest_number(g)


def ck_oracle(g, k, guard=ORACLE_GUARD):
    """Brute force: smallest conversion set by increasing subset size.

    The witness is the lexicographically least minimum (combinations are
    generated in lexicographic order).  Guarded by vertex count.
    """
    if g.n > guard:
        raise OracleGuardExceeded(f"oracle guard exceeded: n={g.n} > {guard}")
    start = time.perf_counter()
    tried = 0
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            tried += 1
            mask = vset(combo)
            if is_conversion_set(g, mask, k):
                return SolveResult(
                    value=size,
                    witness=mask,
                    method=ORACLE,
                    nodes_explored=tried,
                    elapsed=time.perf_counter() - start,
                )
    raise RuntimeError("unreachable: the full vertex set always converts")


def ck_exact(g, k):
    """Exact c_k(G).

    Regular graphs of degree k+r with 0 <= r < k use the complement method
    (maximum induced r-degenerate subgraph); everything else falls back to
    the brute-force oracle.
    """
    if k < 1:
        raise ValueError("threshold k must be >= 1")
    start = time.perf_counter()
    if g.n == 0:
        return SolveResult(0, 0, COMPLEMENT_BNB, 0, 0.0)
    if max_degree(g) < k:
        # no vertex can ever convert, the seed must be everything
        return SolveResult(g.n, g.full_mask, ORACLE, 0, time.perf_counter() - start)
    d = regular_degree(g)
    if d is not None and k <= d < 2 * k:
        r = d - k
        size, kept, nodes = max_r_degenerate_set(g, r)
        witness = g.full_mask & ~kept
        result = SolveResult(
            value=g.n - size,
            witness=witness,
            method=COMPLEMENT_BNB,
            nodes_explored=nodes,
            elapsed=time.perf_counter() - start,
        )
        if not is_conversion_set(g, witness, k):
            raise RuntimeError("internal error: complement witness does not convert")
        return result
    return ck_oracle(g, k)


def verify_witness(g, k, result):
    """Re-verify a SolveResult: the witness converts, has the right size,
    and no smaller conversion set exists (oracle sweep, guarded)."""
    if bit_count(result.witness) != result.value:
        return False
    if not is_conversion_set(g, result.witness, k):
        return False
    if g.n > ORACLE_GUARD:
        raise OracleGuardExceeded(f"minimality check guard exceeded: n={g.n}")
    for combo in combinations(range(g.n), result.value - 1):
        if is_conversion_set(g, vset(combo), k):
            return False
    return True
