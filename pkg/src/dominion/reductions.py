"""Split-graph hardness gadgets with two-way solution extraction.

Set cover instances map to split graphs whose rainbow 2-domination and
rainbow double domination numbers both equal twice the cover optimum;
hypergraph 2-colorability maps to a split incidence graph whose rainbow
total double domination number is finite exactly on the yes side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleWitness, InvalidInstance
from .graph import Graph, build
from .params import ParameterId, RainbowLabeling, is_feasible

P = ParameterId


@dataclass(frozen=True)
class SetCoverInstance:
    """Ground set 0..ground_size-1 and a family of subsets."""

    ground_size: int
    family: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.family:
            raise InvalidInstance("empty family")
        covered = set()
        for s in self.family:
            if not s <= set(range(self.ground_size)):
                raise InvalidInstance("subset leaves the ground set")
            covered |= s
        if covered != set(range(self.ground_size)):
            raise InvalidInstance("some element is uncoverable")


def set_cover_instance(ground: int, sets) -> SetCoverInstance:
    return SetCoverInstance(ground, tuple(frozenset(s) for s in sets))


@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: tuple[frozenset[int], ...]

    def __post_init__(self):
        for e in self.hyperedges:
            if not e:
                raise InvalidInstance("empty hyperedge")
            if not e <= set(range(self.n)):
                raise InvalidInstance("hyperedge leaves the vertex set")


def hypergraph(n: int, edges) -> Hypergraph:
    return Hypergraph(n, tuple(frozenset(e) for e in edges))


@dataclass(frozen=True)
class SplitGadget:
    graph: Graph
    a_of: tuple[int, ...]           # set index -> first clique copy
    b_of: tuple[int, ...]           # set index -> second clique copy
    element_copies: tuple[tuple[int, int, int], ...]  # element -> 3 ids


def set_cover_to_split(j: SetCoverInstance) -> SplitGadget:
    """Clique of two copies per set, independent side of three copies per
    element, adjacency by membership."""
    nf, ns = len(j.family), j.ground_size
    a_of = tuple(range(nf))
    b_of = tuple(range(nf, 2 * nf))
    element_copies = tuple(
        (2 * nf + s, 2 * nf + ns + s, 2 * nf + 2 * ns + s)
        for s in range(ns)
    )
    n = 2 * nf + 3 * ns
    edges = [
        (u, v)
        for u in range(2 * nf)
        for v in range(u + 1, 2 * nf)
    ]
    for fi, fset in enumerate(j.family):
        for s in fset:
            for copy in element_copies[s]:
                edges.append((a_of[fi], copy))
                edges.append((b_of[fi], copy))
    return SplitGadget(build(n, edges), a_of, b_of, element_copies)


def split_witness_to_cover(
    j: SetCoverInstance, gadget: SplitGadget, w: RainbowLabeling
) -> list[int]:
    """Extract a set cover of size at most weight/2 from a feasible
    rainbow 2-dominating function of the gadget.

    Elements with an unlabeled copy see both labels on the clique side, so
    the lighter label class of clique vertices covers them; elements with
    all three copies labeled are charged to those labels directly.
    """
    g = gadget.graph
    if not is_feasible(P.RGAMMA_2, g, w):
        raise InfeasibleWitness("not a rainbow 2-dominating function")
    vals = w.values
    nf = len(j.family)
    clique = list(range(2 * nf))
    alpha = [v for v in clique if vals[v] == 1]
    beta = [v for v in clique if vals[v] == 2]

    def sets_with_label(label_vertices):
        out = set()
        for v in label_vertices:
            out.add(v if v < nf else v - nf)
        return out

    covers_a = sets_with_label(alpha)
    covers_b = sets_with_label(beta)

    def is_cover(fs):
        covered = set()
        for fi in fs:
            covered |= j.family[fi]
        return covered == set(range(j.ground_size))

    chosen: set[int] = set()
    heavy = []  # elements with every copy labeled
    for s in range(j.ground_size):
        copies = gadget.element_copies[s]
        if all(vals[c] != 0 for c in copies):
            heavy.append(s)
    # the lighter clique class covers every element with an empty copy
    side = covers_a if len(alpha) <= len(beta) else covers_b
    chosen |= {
        fi for fi in side
    }
    for s in heavy:
        if not any(s in j.family[fi] for fi in chosen):
            chosen.add(min(fi for fi in range(nf) if s in j.family[fi]))
    # keep only what is needed for determinism-stable minimal output
    if not is_cover(chosen):
        raise InfeasibleWitness("extraction failed to produce a cover")
    return sorted(chosen)


def hypergraph_to_split(h: Hypergraph) -> SplitGadget:
    """Split incidence graph: hypergraph vertices as the clique, one
    independent vertex per hyperedge, adjacency by membership.

    Instances that are 2-colorable only with a color class smaller than
    two are outside the reduction's domain and rejected.
    """
    if two_colorable(h) and not two_colorable(h, min_class=2):
        raise InvalidInstance(
            "2-colorable only with a singleton class; outside the "
            "reduction's domain"
        )
    edges = [
        (u, v) for u in range(h.n) for v in range(u + 1, h.n)
    ]
    for ei, e in enumerate(h.hyperedges):
        for v in e:
            edges.append((v, h.n + ei))
    g = build(h.n + len(h.hyperedges), edges)
    return SplitGadget(g, tuple(range(h.n)), (), tuple())


def two_colorable(h: Hypergraph, min_class: int = 1) -> bool:
    """Exhaustive 2-colorability (no hyperedge monochromatic), with an
    optional lower bound on both class sizes."""
    for mask in range(1 << h.n):
        a = bin(mask).count("1")
        if a < min_class or h.n - a < min_class:
            continue
        ok = True
        for e in h.hyperedges:
            bits = {mask >> v & 1 for v in e}
            if len(bits) == 1:
                ok = False
                break
        if ok:
            return True
    return False


def coloring_extraction(
    h: Hypergraph, gadget: SplitGadget, w: RainbowLabeling
) -> tuple[set[int], set[int]]:
    """Recover a 2-coloring of h from a feasible rainbow total double
    dominating function of its incidence gadget."""
    g = gadget.graph
    if not is_feasible(P.RGAMMA_TX2, g, w):
        raise InfeasibleWitness("not a rainbow total double dominating function")
    vals = list(w.values)
    for v in range(h.n):  # unlabeled clique vertices join class a
        if vals[v] == 0:
            vals[v] = 1
    a = {v for v in range(h.n) if vals[v] == 1}
    b = {v for v in range(h.n) if vals[v] == 2}
    for e in h.hyperedges:
        if e <= a or e <= b:
            raise InfeasibleWitness("extracted classes are not independent")
    return a, b
