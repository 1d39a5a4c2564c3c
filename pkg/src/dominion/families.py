"""Named sharpness/unboundedness family generators and their published values.

Every generator documents its canonical vertex layout so optimal witnesses
are reproducible.  ``expected_value`` returns the closed-form value of a
parameter on a family instance where one is published, ``Value.infinite()``
where the parameter is undefined on the family, and None for unknown cells
(never a guess).
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Callable, Optional

from .errors import SizeBelowThreshold, UndefinedParameter
from .exact import Value
from .graph import (
    Graph,
    build,
    delete_vertex,
    disjoint_union,
    multigraph,
    star_graph,
    subdivide,
)
from .params import ParameterId

P = ParameterId


class FamilyId(str, enum.Enum):
    KK2 = "kk2"            # k disjoint edges
    KC4 = "kc4"            # k disjoint 4-cycles
    KNSS = "knss"          # complete graph with two degree-2 vertices per pair
    KH = "kh"              # k copies of the 6-vertex double star
    KK44 = "kk44"          # k copies of K_{4,4}
    FN3 = "fn3"            # n triangles glued at a common vertex
    FN4 = "fn4"            # n squares glued at a common vertex
    STAR = "star"          # K_{1,n}
    SK3N = "sk3n"          # subdivided triangle with n parallel edges per side
    QN = "qn"              # two hubs joined by n paths of length 3
    TN = "tn"              # triangle + 5-cycle + n matched spokes
    SKODD = "skodd"        # subdivision of the complete graph K_{2n+1}
    SKN2 = "skn2"          # subdivision of the doubled complete graph
    SSTARMINUS = "sstar_minus"  # subdivided star minus its largest leaf

    def __str__(self) -> str:
        return self.value


MIN_SIZE = {
    FamilyId.KK2: 1,
    FamilyId.KC4: 1,
    FamilyId.KNSS: 3,
    FamilyId.KH: 1,
    FamilyId.KK44: 1,
    FamilyId.FN3: 3,
    FamilyId.FN4: 3,
    FamilyId.STAR: 2,
    FamilyId.SK3N: 3,
    FamilyId.QN: 3,
    FamilyId.TN: 1,
    FamilyId.SKODD: 2,
    FamilyId.SKN2: 3,
    FamilyId.SSTARMINUS: 3,
}

#: Largest size at which exact solves stay comfortably desk-scale.
MAX_DESK_SIZE = {
    FamilyId.SKODD: 3,   # 28 vertices at size 3
    FamilyId.KNSS: 5,    # 25 vertices
    FamilyId.SKN2: 4,    # 16 vertices
    FamilyId.KK44: 3,    # 24 vertices (8 per component)
}


def _k2() -> Graph:
    return build(2, [(0, 1)])


def _c4() -> Graph:
    return build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def _double_star() -> Graph:
    # centers 0-1 adjacent, leaves 2,3 on 0 and 4,5 on 1
    return build(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def _k44() -> Graph:
    return build(8, [(i, j) for i in range(4) for j in range(4, 8)])


def _knss(n: int) -> Graph:
    # clique on 0..n-1; pair (i, j) in lex order gets two extra vertices
    # n + 2*pair_index and n + 2*pair_index + 1, each adjacent to i and j
    edges = list(combinations(range(n), 2))
    nxt = n
    for i, j in combinations(range(n), 2):
        edges += [(i, nxt), (j, nxt), (i, nxt + 1), (j, nxt + 1)]
        nxt += 2
    return build(nxt, edges)


def _fn3(n: int) -> Graph:
    # center 0; triangle i uses vertices 1+2i and 2+2i
    edges = []
    for i in range(n):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return build(2 * n + 1, edges)


def _fn4(n: int) -> Graph:
    # center 0; square i is the cycle 0, 1+3i, 2+3i, 3+3i
    edges = []
    for i in range(n):
        a, b, c = 1 + 3 * i, 2 + 3 * i, 3 + 3 * i
        edges += [(0, a), (a, b), (b, c), (c, 0)]
    return build(3 * n + 1, edges)


def _sk3n(n: int) -> Graph:
    pairs = [(0, 1), (0, 2), (1, 2)]
    return subdivide(multigraph(3, [p for p in pairs for _ in range(n)]))


def _qn(n: int) -> Graph:
    # hubs 0 and 1; path i is 0 - (2+2i) - (3+2i) - 1
    edges = []
    for i in range(n):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (a, b), (b, 1)]
    return build(2 + 2 * n, edges)


def _tn(n: int) -> Graph:
    # spokes v_i = 0..n-1, w_i = n..2n-1, triangle s = 2n..2n+2,
    # 5-cycle t = 2n+3..2n+7
    s = [2 * n, 2 * n + 1, 2 * n + 2]
    t = [2 * n + 3 + i for i in range(5)]
    edges = [(s[0], s[1]), (s[1], s[2]), (s[0], s[2])]
    edges += [(t[i], t[(i + 1) % 5]) for i in range(5)]
    for i in range(n):
        edges += [
            (s[0], i),
            (s[2], i),
            (t[0], n + i),
            (t[4], n + i),
            (i, n + i),
        ]
    return build(2 * n + 8, edges)


def _skodd(n: int) -> Graph:
    k = 2 * n + 1
    return subdivide(multigraph(k, list(combinations(range(k), 2))))


def _skn2(n: int) -> Graph:
    pairs = [p for p in combinations(range(n), 2) for _ in range(2)]
    return subdivide(multigraph(n, pairs))


def _sstar_minus(n: int) -> Graph:
    # canonical S(K_{1,n}): center 0, leaves 1..n, subdivision vertex of
    # edge (0, i) is n+i; the deleted leaf is the largest-id leaf n.
    sub = subdivide(multigraph(n + 1, [(0, i) for i in range(1, n + 1)]))
    return delete_vertex(sub, n)


_BUILDERS: dict[FamilyId, Callable[[int], Graph]] = {
    FamilyId.KK2: lambda k: disjoint_union(_k2(), k),
    FamilyId.KC4: lambda k: disjoint_union(_c4(), k),
    FamilyId.KNSS: _knss,
    FamilyId.KH: lambda k: disjoint_union(_double_star(), k),
    FamilyId.KK44: lambda k: disjoint_union(_k44(), k),
    FamilyId.FN3: _fn3,
    FamilyId.FN4: _fn4,
    FamilyId.STAR: star_graph,
    FamilyId.SK3N: _sk3n,
    FamilyId.QN: _qn,
    FamilyId.TN: _tn,
    FamilyId.SKODD: _skodd,
    FamilyId.SKN2: _skn2,
    FamilyId.SSTARMINUS: _sstar_minus,
}


def generate(f: FamilyId, size: int) -> Graph:
    """Build the family member at the given size parameter."""
    if size < MIN_SIZE[f]:
        raise SizeBelowThreshold(f"{f} needs size >= {MIN_SIZE[f]}, got {size}")
    return _BUILDERS[f](size)


# Published closed forms.  Each entry maps a parameter to a function of the
# size; "inf" marks parameters that are undefined on the family.
_INF = "inf"

_EXPECTED: dict[FamilyId, dict[ParameterId, object]] = {
    FamilyId.KK2: {
        P.GAMMA: lambda k: k,
        P.GAMMA_T: lambda k: 2 * k,
        P.GAMMA_W2: lambda k: 2 * k,
        P.GAMMA_SET2: lambda k: 2 * k,
        P.GAMMA_TSET2: lambda k: 4 * k,
        P.GAMMA_2: lambda k: 2 * k,
        P.GAMMA_X2: lambda k: 2 * k,
        P.GAMMA_TX2: _INF,
        P.RGAMMA_W2: lambda k: 2 * k,
        P.RGAMMA_2: lambda k: 2 * k,
        P.RGAMMA_X2: lambda k: 2 * k,
        P.RGAMMA_TX2: _INF,
        P.GAMMA_R: lambda k: 2 * k,
    },
    FamilyId.KC4: {
        P.GAMMA: lambda k: 2 * k,
        P.GAMMA_T: lambda k: 2 * k,
        P.GAMMA_W2: lambda k: 2 * k,
        P.GAMMA_TSET2: lambda k: 4 * k,
        P.GAMMA_2: lambda k: 2 * k,
        P.GAMMA_TX2: lambda k: 4 * k,
        P.RGAMMA_W2: lambda k: 2 * k,
        P.RGAMMA_2: lambda k: 2 * k,
        P.RGAMMA_X2: lambda k: 4 * k,
        P.RGAMMA_TX2: lambda k: 4 * k,
        P.GAMMA_R: lambda k: 3 * k,
    },
    FamilyId.KNSS: {
        P.GAMMA: lambda n: n - 1,
        P.GAMMA_T: lambda n: n - 1,
        P.GAMMA_W2: lambda n: n,
        P.GAMMA_SET2: lambda n: n,
        P.GAMMA_TSET2: lambda n: n,
        P.GAMMA_2: lambda n: n,
        P.GAMMA_X2: lambda n: n,
        P.GAMMA_TX2: lambda n: n,
        P.RGAMMA_W2: lambda n: 2 * n - 2,
        P.GAMMA_R: lambda n: 2 * n - 2,
    },
    FamilyId.KH: {
        P.GAMMA_T: lambda k: 2 * k,
        P.GAMMA_W2: lambda k: 4 * k,
        P.GAMMA_SET2: lambda k: 4 * k,
        P.GAMMA_TSET2: lambda k: 4 * k,
        P.GAMMA_TX2: _INF,
        P.RGAMMA_W2: lambda k: 4 * k,
        P.RGAMMA_TX2: _INF,
        P.GAMMA_R: lambda k: 4 * k,
    },
    FamilyId.KK44: {
        P.GAMMA_W2: lambda k: 4 * k,
        P.GAMMA_SET2: lambda k: 4 * k,
        P.GAMMA_TSET2: lambda k: 4 * k,
        P.GAMMA_2: lambda k: 4 * k,
        P.GAMMA_X2: lambda k: 4 * k,
        P.GAMMA_TX2: lambda k: 4 * k,
        P.RGAMMA_W2: lambda k: 4 * k,
        P.RGAMMA_2: lambda k: 4 * k,
        P.RGAMMA_X2: lambda k: 4 * k,
        P.RGAMMA_TX2: lambda k: 4 * k,
        P.GAMMA_R: lambda k: 4 * k,
    },
    FamilyId.FN3: {
        P.GAMMA_X2: lambda n: n + 1,
        P.GAMMA_TX2: lambda n: 2 * n + 1,
        P.RGAMMA_X2: lambda n: n + 1,
    },
    FamilyId.FN4: {
        P.GAMMA_W2: lambda n: n + 1,
        P.GAMMA_SET2: lambda n: 2 * n + 1,
        P.GAMMA_2: lambda n: n + 1,
        P.GAMMA_X2: lambda n: 2 * n + 1,
        P.GAMMA_TX2: lambda n: 3 * n + 1,
        P.RGAMMA_W2: lambda n: n + 1,
        P.RGAMMA_2: lambda n: n + 1,
    },
    FamilyId.STAR: {
        P.GAMMA: lambda n: 1,
        P.GAMMA_T: lambda n: 2,
        P.GAMMA_W2: lambda n: 2,
        P.GAMMA_SET2: lambda n: 2,
        P.GAMMA_TSET2: lambda n: 4,
        P.GAMMA_2: lambda n: n,
        P.GAMMA_X2: lambda n: n + 1,
        P.GAMMA_TX2: _INF,
        P.RGAMMA_W2: lambda n: 2,
        P.RGAMMA_2: lambda n: n,
        P.RGAMMA_X2: lambda n: n + 1,
        P.RGAMMA_TX2: _INF,
        P.GAMMA_R: lambda n: 2,
    },
    FamilyId.SK3N: {
        P.GAMMA_2: lambda n: 3,
        P.GAMMA_X2: lambda n: 5,
        P.GAMMA_TX2: lambda n: 6,
        P.RGAMMA_2: lambda n: n + 3,
        P.RGAMMA_X2: lambda n: n + 4,
    },
    FamilyId.QN: {
        P.GAMMA: lambda n: 2,
        P.GAMMA_T: lambda n: 4,
        P.GAMMA_W2: lambda n: 4,
        P.GAMMA_SET2: lambda n: 4,
        P.GAMMA_TSET2: lambda n: 8,
        P.GAMMA_TX2: lambda n: 2 * n + 2,
        P.RGAMMA_W2: lambda n: 4,
        P.GAMMA_R: lambda n: 4,
    },
    FamilyId.TN: {
        P.GAMMA: lambda n: 3,
        P.GAMMA_T: lambda n: 5,
        P.GAMMA_W2: lambda n: 5,
        P.GAMMA_SET2: lambda n: 6,
        P.GAMMA_TSET2: lambda n: 8,
        P.GAMMA_2: lambda n: 5,
        P.GAMMA_X2: lambda n: 6,
        P.GAMMA_TX2: lambda n: 8,
        P.RGAMMA_W2: lambda n: 6,
        P.RGAMMA_2: lambda n: 6,
        P.RGAMMA_X2: lambda n: 6,
        P.RGAMMA_TX2: lambda n: n + 9,
        P.GAMMA_R: lambda n: 6,
    },
    # auxiliary families used by the sharpness claims
    FamilyId.SKODD: {
        P.GAMMA_T: lambda n: 3 * n + 1,
        P.GAMMA_W2: lambda n: 2 * n + 1,
        P.GAMMA_2: lambda n: 2 * n + 1,
    },
    FamilyId.SKN2: {
        P.GAMMA_W2: lambda n: n,
        P.GAMMA_2: lambda n: n,
        P.GAMMA_R: lambda n: 2 * n - 1,
    },
    FamilyId.SSTARMINUS: {
        P.GAMMA: lambda n: n,
        P.GAMMA_SET2: lambda n: 2 * n,
        P.GAMMA_R: lambda n: n + 1,
    },
}


def expected_value(
    f: FamilyId, size: int, p: ParameterId
) -> Optional[Value]:
    """Published value of parameter p on the family member, if any."""
    if p not in _EXPECTED.get(f, {}):
        return None
    entry = _EXPECTED[f][p]
    if entry == _INF:
        return Value.infinite()
    return Value.finite(entry(size))


def expected_cells(f: FamilyId) -> list[ParameterId]:
    """Parameters with a published value for this family."""
    if f not in _EXPECTED:
        raise UndefinedParameter(str(f))
    return list(_EXPECTED[f])
