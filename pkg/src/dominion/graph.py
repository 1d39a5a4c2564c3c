"""Finite simple undirected graphs, multigraphs, combinators and text I/O.

Vertices are dense integers ``0..n-1``.  ``Graph`` instances are immutable
after construction; all combinators return new graphs.  On disk we use the
DIMACS-flavoured format (``p edge n m`` header, 1-indexed ``e u v`` lines).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import IndexOutOfRange, SelfLoop


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as symmetric, sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise IndexOutOfRange("adjacency length differs from vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise IndexOutOfRange(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise SelfLoop(f"self-loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise IndexOutOfRange(f"duplicate neighbor in adjacency of {v}")
        for v in range(self.n):
            for u in self.adj[v]:
                if v not in self.adj[u]:
                    raise IndexOutOfRange(f"asymmetric edge {v}-{u}")

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} out of range")
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as lexicographically sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            for u in self.adj[v]:
                if v < u:
                    out.append((v, u))
        out.sort()
        return out

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj[v]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comp.sort()
            comps.append(comp)
        return comps

    def induced(self, vertices: list[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``vertices`` plus the old->new id map."""
        idx = {v: i for i, v in enumerate(sorted(vertices))}
        edges = [
            (idx[u], idx[v])
            for u, v in self.edges()
            if u in idx and v in idx
        ]
        return build(len(idx), edges), idx


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph: parallel edges allowed, self-loops not.

    ``edges`` keeps normalized (u, v) pairs with u < v; parallel edges are
    repeated entries.  The stored order is sorted, which also fixes the
    parallel index of each copy.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"edge ({u},{v}) out of range")
            if u > v:
                raise IndexOutOfRange("multigraph edges must be normalized u < v")
        if list(self.edges) != sorted(self.edges):
            raise IndexOutOfRange("multigraph edges must be sorted")

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        degs = [0] * self.n
        for u, w in self.edges:
            degs[u] += 1
            degs[w] += 1
        return min(degs)


def multigraph(n: int, edge_list: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a MultiGraph, normalizing and sorting the edge list."""
    edges = sorted(tuple(sorted(e)) for e in edge_list)
    return MultiGraph(n, tuple(edges))


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph from an edge list (duplicates collapsed)."""
    if n < 0:
        raise IndexOutOfRange("negative vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """N[v] = N(v) together with v itself."""
    return set(g.neighbors(v)) | {v}


def subdivide(mg: MultiGraph) -> Graph:
    """Replace every (multi)edge by a length-2 path through a fresh vertex.

    Original vertices keep ids 0..n-1; subdivision vertices are appended in
    the order of the sorted edge list, i.e. by (min endpoint, max endpoint,
    parallel index).
    """
    edges = []
    nxt = mg.n
    for u, v in mg.edges:
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return build(nxt, edges)


def disjoint_union(g: Graph, k: int) -> Graph:
    """k relabeled copies of g; copy i occupies ids [i*n, (i+1)*n)."""
    if k < 1:
        raise IndexOutOfRange("k must be positive")
    edges = []
    for i in range(k):
        off = i * g.n
        edges.extend((u + off, v + off) for u, v in g.edges())
    return build(k * g.n, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex v; ids above v shift down by one."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")

    def relabel(u: int) -> int:
        return u if u < v else u - 1

    edges = [
        (relabel(a), relabel(b))
        for a, b in g.edges()
        if a != v and b != v
    ]
    return build(g.n - 1, edges)


def _is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def _is_independent(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_split(g: Graph) -> Optional[tuple[set[int], set[int]]]:
    """Split partition (clique C, independent I) if one exists, else None.

    Uses the degree-sequence characterization: with degrees sorted
    non-increasingly and m = max{i : d_i >= i - 1}, the graph is split iff
    sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.  The candidate clique is the m
    largest-degree vertices; ties at the boundary are resolved by trying
    assignments in id order until the direct verification passes.
    """
    n = g.n
    if n == 0:
        return set(), set()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    # Boundary ties: vertices with degree equal to degs[m-1] may sit on
    # either side, so try the ways of filling the last clique slots.
    boundary_deg = degs[m - 1]
    fixed_c = [v for v in order if g.degree(v) > boundary_deg]
    ties = [v for v in order if g.degree(v) == boundary_deg]
    need = m - len(fixed_c)
    for chosen in combinations(ties, need):
        c = set(fixed_c) | set(chosen)
        i_side = set(range(n)) - c
        if _is_clique(g, c) and _is_independent(g, i_side):
            return c, i_side
    return None


# -- text format -------------------------------------------------------


def write_graph(g: Graph) -> str:
    """DIMACS-flavoured text: header then edges sorted lexicographically."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    """Parse the DIMACS-flavoured text format (1-indexed on disk)."""
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            n = int(parts[2])
        elif parts[0] == "e":
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
    if n is None:
        raise IndexOutOfRange("missing 'p edge n m' header line")
    return build(n, edges)


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_graph(fh.read())


def write_graph_file(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g))


# -- tiny named graphs used throughout tests and the CLI ----------------


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build(n, list(combinations(range(n), 2)))


def star_graph(n: int) -> Graph:
    """Star with n leaves: center 0, leaves 1..n."""
    return build(n + 1, [(0, i) for i in range(1, n + 1)])
