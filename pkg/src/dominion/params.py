"""Parameter identifiers, witness types and feasibility checkers.

Thirteen domination-style invariants plus the cover and disjoint-domination
auxiliaries.  Rainbow labels are encoded as 2-bit sets: 0 = empty set,
1 = {a}, 2 = {b}, 3 = {a,b}; the canonical value order is 0 < 1 < 2 < 3.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Union

from .errors import (
    CodomainViolation,
    IsolatedVertex,
    UndefinedParameter,
    WitnessShapeMismatch,
)
from .graph import Graph, MultiGraph


class ParameterId(str, enum.Enum):
    GAMMA = "gamma"
    GAMMA_T = "gamma_t"
    GAMMA_W2 = "gamma_w2"
    GAMMA_SET2 = "gamma_set2"
    GAMMA_TSET2 = "gamma_tset2"
    GAMMA_2 = "gamma_2"
    GAMMA_X2 = "gamma_x2"
    GAMMA_TX2 = "gamma_tx2"
    RGAMMA_W2 = "rgamma_w2"
    RGAMMA_2 = "rgamma_2"
    RGAMMA_X2 = "rgamma_x2"
    RGAMMA_TX2 = "rgamma_tx2"
    GAMMA_R = "gamma_R"
    # covering / auxiliary parameters
    RHO = "rho"
    RHO_2 = "rho_2"
    TAU_2 = "tau_2"
    GAMMA_GAMMA = "gammagamma"
    GAMMA_T_GAMMA_T = "gamma_t_gamma_t"

    def __str__(self) -> str:  # CLI friendliness
        return self.value


P = ParameterId

#: The 13 parameters of the bound table, in row/column order 1..13.
TABLE_PARAMS = (
    P.GAMMA,
    P.GAMMA_T,
    P.GAMMA_W2,
    P.GAMMA_SET2,
    P.GAMMA_TSET2,
    P.GAMMA_2,
    P.GAMMA_X2,
    P.GAMMA_TX2,
    P.RGAMMA_W2,
    P.RGAMMA_2,
    P.RGAMMA_X2,
    P.RGAMMA_TX2,
    P.GAMMA_R,
)

ROW_OF = {p: i + 1 for i, p in enumerate(TABLE_PARAMS)}
PARAM_OF_ROW = {i + 1: p for i, p in enumerate(TABLE_PARAMS)}


class Codomain(str, enum.Enum):
    BINARY = "binary"          # {0, 1}
    TERNARY = "ternary"        # {0, 1, 2}
    RAINBOW3 = "rainbow3"      # {0, {a}, {b}}
    RAINBOW4 = "rainbow4"      # full power set of {a, b}


#: per-codomain canonical value list as (value, weight, labelmask) triples
CODOMAIN_VALUES = {
    Codomain.BINARY: ((0, 0, 0), (1, 1, 0)),
    Codomain.TERNARY: ((0, 0, 0), (1, 1, 0), (2, 2, 0)),
    Codomain.RAINBOW3: ((0, 0, 0), (1, 1, 1), (2, 1, 2)),
    Codomain.RAINBOW4: ((0, 0, 0), (1, 1, 1), (2, 1, 2), (3, 2, 3)),
}


@dataclass(frozen=True)
class ParamMeta:
    """Defining clause of a vertex parameter.

    condition: "sum" (weighted neighborhood sum >= demand), "union"
    (both rainbow labels present in the neighborhood), or "roman"
    (some neighbor carries weight 2).  ``closed`` selects N[v] vs N(v);
    ``outer`` limits the condition to zero-weight vertices.
    """

    codomain: Codomain
    condition: str
    closed: bool
    demand: int
    outer: bool
    rainbow: bool


PARAM_META = {
    P.GAMMA: ParamMeta(Codomain.BINARY, "sum", True, 1, False, False),
    P.GAMMA_T: ParamMeta(Codomain.BINARY, "sum", False, 1, False, False),
    P.GAMMA_W2: ParamMeta(Codomain.TERNARY, "sum", False, 2, True, False),
    P.GAMMA_SET2: ParamMeta(Codomain.TERNARY, "sum", True, 2, False, False),
    P.GAMMA_TSET2: ParamMeta(Codomain.TERNARY, "sum", False, 2, False, False),
    P.GAMMA_2: ParamMeta(Codomain.BINARY, "sum", False, 2, True, False),
    P.GAMMA_X2: ParamMeta(Codomain.BINARY, "sum", True, 2, False, False),
    P.GAMMA_TX2: ParamMeta(Codomain.BINARY, "sum", False, 2, False, False),
    P.RGAMMA_W2: ParamMeta(Codomain.RAINBOW4, "union", False, 2, True, True),
    P.RGAMMA_2: ParamMeta(Codomain.RAINBOW3, "union", False, 2, True, True),
    P.RGAMMA_X2: ParamMeta(Codomain.RAINBOW3, "union", True, 2, False, True),
    P.RGAMMA_TX2: ParamMeta(Codomain.RAINBOW3, "union", False, 2, False, True),
    P.GAMMA_R: ParamMeta(Codomain.TERNARY, "roman", False, 2, True, False),
}

VERTEX_PARAMS = tuple(PARAM_META)
COVER_PARAMS = (P.RHO, P.RHO_2, P.TAU_2)
DISJOINT_PARAMS = (P.GAMMA_GAMMA, P.GAMMA_T_GAMMA_T)


# -- witnesses ----------------------------------------------------------


@dataclass(frozen=True)
class IntWeighting:
    """Integer weighting of the vertices, values over {0,1,2} (or {0,1})."""

    values: tuple[int, ...]


@dataclass(frozen=True)
class RainbowLabeling:
    """Rainbow labeling; entries are 2-bit label sets 0..3."""

    values: tuple[int, ...]


@dataclass(frozen=True)
class EdgeWeighting:
    """Edge weighting aligned with the host graph's sorted edge list."""

    values: tuple[int, ...]


Witness = Union[IntWeighting, RainbowLabeling, EdgeWeighting]

LABEL_STR = {0: "", 1: "a", 2: "b", 3: "ab"}
STR_LABEL = {v: k for k, v in LABEL_STR.items()}


def witness_weight(w: Witness) -> int:
    """Total weight: sum of |value| over the domain (label cardinality
    for rainbow entries)."""
    if isinstance(w, RainbowLabeling):
        return sum(bin(x).count("1") for x in w.values)
    return sum(w.values)


def _check_vertex_witness(p: ParameterId, g: Graph, w: Witness) -> None:
    meta = PARAM_META[p]
    if meta.rainbow:
        if not isinstance(w, RainbowLabeling):
            raise WitnessShapeMismatch(f"{p} expects a rainbow labeling")
    else:
        if not isinstance(w, IntWeighting):
            raise WitnessShapeMismatch(f"{p} expects an integer weighting")
    if len(w.values) != g.n:
        raise WitnessShapeMismatch(
            f"witness length {len(w.values)} != n = {g.n}"
        )
    allowed = {v for v, _, _ in CODOMAIN_VALUES[meta.codomain]}
    for x in w.values:
        if x not in allowed:
            raise CodomainViolation(f"value {x} not allowed for {p}")


def is_feasible(p: ParameterId, g: Graph, w: Witness) -> bool:
    """True iff every vertex satisfies p's defining condition on g."""
    if p not in PARAM_META:
        raise UndefinedParameter(f"{p} is not a vertex parameter")
    _check_vertex_witness(p, g, w)
    meta = PARAM_META[p]
    vals = w.values
    for v in range(g.n):
        if meta.outer and vals[v] != 0:
            continue
        scope = g.neighbors(v) if not meta.closed else g.neighbors(v) + (v,)
        if meta.condition == "sum":
            if sum(vals[u] for u in scope) < meta.demand:
                return False
        elif meta.condition == "union":
            mask = 0
            for u in scope:
                mask |= vals[u]
            if mask != 3:
                return False
        else:  # roman
            if not any(vals[u] == 2 for u in g.neighbors(v)):
                return False
    return True


def is_cover_feasible(
    p: ParameterId, g: Union[Graph, MultiGraph], w: Witness
) -> bool:
    """Covering feasibility for rho, rho_2 (edge weightings) and tau_2."""
    if p == P.TAU_2:
        if not isinstance(g, Graph):
            raise WitnessShapeMismatch("tau_2 is defined on simple graphs")
        if not isinstance(w, IntWeighting):
            raise WitnessShapeMismatch("tau_2 expects an integer weighting")
        if len(w.values) != g.n:
            raise WitnessShapeMismatch("witness length mismatch")
        if any(x not in (0, 1, 2) for x in w.values):
            raise CodomainViolation("tau_2 values must lie in {0,1,2}")
        return all(w.values[u] + w.values[v] >= 2 for u, v in g.edges())
    if p not in (P.RHO, P.RHO_2):
        raise UndefinedParameter(f"{p} is not a cover parameter")
    edges = list(g.edges()) if isinstance(g, MultiGraph) else g.edges()
    if isinstance(g, Graph) and g.n > 0 and g.min_degree() == 0:
        raise IsolatedVertex("edge covers need a graph without isolated vertices")
    if isinstance(g, MultiGraph) and g.n > 0 and g.min_degree() == 0:
        raise IsolatedVertex("edge covers need a graph without isolated vertices")
    if not isinstance(w, EdgeWeighting):
        raise WitnessShapeMismatch(f"{p} expects an edge weighting")
    if len(w.values) != len(edges):
        raise WitnessShapeMismatch("edge witness length mismatch")
    hi = 1 if p == P.RHO else 2
    if any(not 0 <= x <= hi for x in w.values):
        raise CodomainViolation(f"edge values must lie in 0..{hi}")
    demand = 1 if p == P.RHO else 2
    incident = [0] * g.n
    for (u, v), x in zip(edges, w.values):
        incident[u] += x
        incident[v] += x
    return all(incident[v] >= demand for v in range(g.n))


def defined_on(p: ParameterId, g: Graph) -> bool:
    """Whether parameter p is finite on g."""
    if p in (
        P.GAMMA,
        P.GAMMA_W2,
        P.GAMMA_SET2,
        P.GAMMA_2,
        P.RGAMMA_W2,
        P.RGAMMA_2,
        P.GAMMA_R,
    ):
        return True
    if p in (P.GAMMA_T, P.GAMMA_TSET2, P.GAMMA_X2, P.RGAMMA_X2, P.GAMMA_GAMMA):
        return g.n == 0 or g.min_degree() >= 1
    if p == P.GAMMA_TX2:
        return g.n == 0 or g.min_degree() >= 2
    if p in (P.RGAMMA_TX2, P.GAMMA_T_GAMMA_T):
        # decided by the exact search itself (total domatic number >= 2)
        from . import exact

        return exact.solve(P.RGAMMA_TX2, g).value.is_finite
    if p == P.TAU_2:
        return True
    if p in (P.RHO, P.RHO_2):
        return g.n == 0 or g.min_degree() >= 1
    raise UndefinedParameter(str(p))


# -- JSON form ----------------------------------------------------------


def witness_to_json(p: ParameterId, w: Witness) -> dict:
    if isinstance(w, RainbowLabeling):
        kind, values = "rainbow", [LABEL_STR[x] for x in w.values]
    elif isinstance(w, EdgeWeighting):
        kind, values = "edge", list(w.values)
    else:
        kind, values = "int", list(w.values)
    return {"parameter": p.value, "kind": kind, "values": values}


def witness_from_json(obj: Union[str, dict]) -> tuple[ParameterId, Witness]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    p = ParameterId(obj["parameter"])
    kind = obj["kind"]
    values = obj["values"]
    if kind == "rainbow":
        return p, RainbowLabeling(tuple(STR_LABEL[s] for s in values))
    if kind == "edge":
        return p, EdgeWeighting(tuple(int(x) for x in values))
    if kind == "int":
        return p, IntWeighting(tuple(int(x) for x in values))
    raise WitnessShapeMismatch(f"unknown witness kind {kind!r}")
