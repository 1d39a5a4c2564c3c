from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dominion.errors import IndexOutOfRange, SelfLoop
from dominion.graph import (
    build,
    closed_neighborhood,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    is_split,
    multigraph,
    path_graph,
    read_graph,
    star_graph,
    subdivide,
    write_graph,
)
from .oracle import isomorphic


def test_build_k2():
    g = build(2, [(0, 1)])
    assert g.adj == ((1,), (0,))


def test_build_k1():
    g = build(1, [])
    assert g.min_degree() == g.max_degree() == 0


def test_build_c4_degrees():
    g = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(g.degree(v) == 2 for v in range(4))


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build(2, [(1, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(IndexOutOfRange):
        build(2, [(0, 2)])


def test_build_deduplicates():
    g = build(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_closed_neighborhood():
    assert closed_neighborhood(build(2, [(0, 1)]), 0) == {0, 1}
    assert closed_neighborhood(build(1, []), 0) == {0}
    assert closed_neighborhood(cycle_graph(4), 1) == {0, 1, 2}


def test_subdivide_k2_gives_p3():
    s = subdivide(multigraph(2, [(0, 1)]))
    assert isomorphic(s, path_graph(3))


def test_subdivide_parallel_pair_gives_c4():
    s = subdivide(multigraph(2, [(0, 1), (0, 1)]))
    assert isomorphic(s, cycle_graph(4))


def test_subdivide_k3_gives_c6():
    s = subdivide(multigraph(3, [(0, 1), (0, 2), (1, 2)]))
    assert isomorphic(s, cycle_graph(6))


def _two_colorable(g):
    color = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


@given(st.integers(1, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_subdivision_is_bipartite_with_counts(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = data.draw(
        st.lists(st.sampled_from(pairs), max_size=8) if pairs else st.just([])
    )
    mg = multigraph(n, picks)
    s = subdivide(mg)
    assert s.n == n + len(mg.edges)
    assert s.m == 2 * len(mg.edges)
    assert _two_colorable(s)


def test_disjoint_union_counts():
    g = disjoint_union(build(2, [(0, 1)]), 3)
    assert g.n == 6 and g.m == 3
    assert disjoint_union(cycle_graph(4), 1).edges() == cycle_graph(4).edges()


def test_delete_vertex_relabels():
    g = delete_vertex(path_graph(3), 1)
    assert g.n == 2 and g.m == 0


def test_is_split_star():
    part = is_split(star_graph(4))
    assert part is not None
    c, i = part
    assert c == {0} or 0 in c


def test_is_split_c4_absent():
    assert is_split(cycle_graph(4)) is None


def _exhaustive_split(g):
    for mask in range(1 << g.n):
        c = [v for v in range(g.n) if mask >> v & 1]
        i = [v for v in range(g.n) if not mask >> v & 1]
        if all(g.has_edge(u, v) for u, v in combinations(c, 2)) and not any(
            g.has_edge(u, v) for u, v in combinations(i, 2)
        ):
            return True
    return False


@given(st.integers(1, 7), st.data())
@settings(max_examples=120, deadline=None)
def test_is_split_matches_exhaustive(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), max_size=12)) if pairs else []
    g = build(n, edges)
    part = is_split(g)
    assert (part is not None) == _exhaustive_split(g)
    if part is not None:
        c, i = part
        assert c | i == set(range(n)) and not c & i
        assert all(g.has_edge(u, v) for u, v in combinations(sorted(c), 2))
        assert not any(g.has_edge(u, v) for u, v in combinations(sorted(i), 2))


def test_is_split_twelve_vertices():
    # split: clique on 0..5, pendants 6..11 hung off the clique
    edges = list(combinations(range(6), 2)) + [(i, 6 + i) for i in range(6)]
    g = build(12, edges)
    part = is_split(g)
    assert part is not None and _exhaustive_split(g)
    # not split: the same graph plus an edge between two pendants
    h = build(12, edges + [(6, 7)])
    assert (is_split(h) is not None) == _exhaustive_split(h)


def test_text_roundtrip():
    g = complete_graph(4)
    assert read_graph(write_graph(g)).adj == g.adj


def test_text_format_details():
    text = "c a comment\n\np edge 3 2\ne 1 2\ne 2 3\n"
    g = read_graph(text)
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]
    assert write_graph(g).splitlines()[0] == "p edge 3 2"
