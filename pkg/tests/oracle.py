"""Independent brute-force oracles used to validate the solvers.

Everything here is plain enumeration over the full assignment space and
deliberately shares no search machinery with the package's solvers.
"""

from itertools import combinations, permutations, product

from dominion.graph import Graph, MultiGraph
from dominion.params import (
    CODOMAIN_VALUES,
    PARAM_META,
    EdgeWeighting,
    IntWeighting,
    ParameterId,
    RainbowLabeling,
    is_cover_feasible,
    is_feasible,
    witness_weight,
)

P = ParameterId


def brute_force(p: ParameterId, g: Graph):
    """Minimum witness weight by full enumeration, or None if infeasible."""
    meta = PARAM_META[p]
    vals = [v for v, _, _ in CODOMAIN_VALUES[meta.codomain]]
    best = None
    for assign in product(vals, repeat=g.n):
        w = RainbowLabeling(assign) if meta.rainbow else IntWeighting(assign)
        if is_feasible(p, g, w):
            wt = witness_weight(w)
            if best is None or wt < best:
                best = wt
    return best


def brute_force_cover(p: ParameterId, g):
    if p == P.TAU_2:
        best = None
        for assign in product((0, 1, 2), repeat=g.n):
            w = IntWeighting(assign)
            if is_cover_feasible(p, g, w):
                wt = sum(assign)
                best = wt if best is None or wt < best else best
        return best
    edges = list(g.edges) if isinstance(g, MultiGraph) else g.edges()
    hi = 1 if p == P.RHO else 2
    best = None
    for assign in product(range(hi + 1), repeat=len(edges)):
        w = EdgeWeighting(assign)
        if is_cover_feasible(p, g, w):
            wt = sum(assign)
            best = wt if best is None or wt < best else best
    return best


def brute_force_disjoint(total: bool, g: Graph):
    """Minimum |A| + |B| over disjoint (total) dominating pairs."""

    def dominates(mask):
        for v in range(g.n):
            nb = 0
            for u in g.neighbors(v):
                nb |= 1 << u
            if not total:
                nb |= 1 << v
            if not nb & mask:
                return False
        return True

    doms = [m for m in range(1, 1 << g.n) if dominates(m)]
    best = None
    for a in doms:
        for b in doms:
            if a & b:
                continue
            size = bin(a).count("1") + bin(b).count("1")
            if best is None or size < best:
                best = size
    return best


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    he = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in he
            for u, v in g.edges()
        ):
            return True
    return False


def set_cover_opt(ground_size: int, family) -> int:
    for r in range(1, len(family) + 1):
        for combo in combinations(range(len(family)), r):
            covered = set()
            for fi in combo:
                covered |= set(family[fi])
            if covered == set(range(ground_size)):
                return r
    raise ValueError("instance admits no cover")
