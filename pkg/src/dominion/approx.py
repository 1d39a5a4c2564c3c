"""Greedy approximation algorithms with logarithmic ratio guarantees.

Multicover greedy for the set-valued parameters, unit-increment greedy for
the vector-valued outer parameters, and transform-composed algorithms for
the derived parameters.  Ties always break toward the smallest vertex id
(then the smallest increment), so outputs are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import UndefinedParameter
from .graph import Graph
from .params import (
    IntWeighting,
    ParameterId,
    RainbowLabeling,
    Witness,
    defined_on,
    is_feasible,
    witness_weight,
)

P = ParameterId


@dataclass(frozen=True)
class CoverageInstance:
    """Multicover view of a domination parameter.

    demands[v] is the required coverage of vertex v; contributors[v] is
    the set of vertices whose selection covers v; self_satisfying marks
    the outer parameters, where selecting a vertex cancels its own demand.
    """

    demands: tuple[int, ...]
    contributors: tuple[tuple[int, ...], ...]
    self_satisfying: bool


@dataclass(frozen=True)
class ApproxResult:
    parameter: ParameterId
    witness: Witness
    weight: int
    ratio_bound: float


_MULTICOVER = {
    P.GAMMA: (1, True),     # demand, closed neighborhoods
    P.GAMMA_T: (1, False),
    P.GAMMA_X2: (2, True),
    P.GAMMA_TX2: (2, False),
}


def coverage_instance(p: ParameterId, g: Graph) -> CoverageInstance:
    if p in _MULTICOVER:
        demand, closed = _MULTICOVER[p]
        contributors = tuple(
            tuple(sorted(g.neighbors(v) + ((v,) if closed else ())))
            for v in range(g.n)
        )
        return CoverageInstance((demand,) * g.n, contributors, False)
    if p == P.GAMMA_2:
        contributors = tuple(g.neighbors(v) for v in range(g.n))
        return CoverageInstance((2,) * g.n, contributors, True)
    raise UndefinedParameter(f"no coverage instance for {p}")


def ratio_bound(p: ParameterId, g: Graph) -> float:
    d = g.max_degree()
    if p in (P.GAMMA, P.GAMMA_X2):
        return math.log(d + 1) + 1
    if p in (P.GAMMA_T, P.GAMMA_TX2):
        return math.log(max(d, 1)) + 1
    if p in (P.GAMMA_2, P.GAMMA_W2):
        return math.log(d + 2) + 1
    if p in (P.GAMMA_SET2, P.GAMMA_TSET2, P.RGAMMA_W2, P.GAMMA_R):
        return 2 * (math.log(d + 2) + 1)
    raise UndefinedParameter(f"no ratio bound for {p}")


def greedy_multicover(p: ParameterId, g: Graph) -> ApproxResult:
    """Greedy for domination / total / double / total double domination."""
    if p not in _MULTICOVER:
        raise UndefinedParameter(f"{p} is not a multicover parameter")
    if not defined_on(p, g):
        raise UndefinedParameter(f"{p} is infinite on this graph")
    inst = coverage_instance(p, g)
    residual = list(inst.demands)
    covers = [[] for _ in range(g.n)]  # vertex -> vertices it covers
    for v in range(g.n):
        for u in inst.contributors[v]:
            covers[u].append(v)
    chosen: set[int] = set()
    while any(r > 0 for r in residual):
        best_gain, best_v = 0, None
        for v in range(g.n):
            if v in chosen:
                continue
            gain = sum(1 for u in covers[v] if residual[u] > 0)
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen.add(best_v)
        for u in covers[best_v]:
            if residual[u] > 0:
                residual[u] -= 1
    w = IntWeighting(tuple(1 if v in chosen else 0 for v in range(g.n)))
    assert is_feasible(p, g, w)
    return ApproxResult(p, w, len(chosen), ratio_bound(p, g))


def _prune_vector(p: ParameterId, g: Graph, vals: list[int]) -> list[int]:
    # reverse greedy: lower values while the witness stays feasible
    for v in range(g.n):
        while vals[v] > 0:
            vals[v] -= 1
            if not is_feasible(p, g, IntWeighting(tuple(vals))):
                vals[v] += 1
                break
    return vals


def greedy_vector(p: ParameterId, g: Graph) -> ApproxResult:
    """Unit-increment greedy for the outer {0,1,2} and {0,1} parameters.

    For 2-domination the action is selecting a vertex (own demand cleared,
    one unit to each neighbor); for weak 2-domination single weight units
    are added.  A reverse-greedy prune removes slack the forward pass may
    leave behind.
    """
    if p == P.GAMMA_2:
        inst = coverage_instance(p, g)
        residual = list(inst.demands)
        chosen: set[int] = set()
        while any(
            residual[v] > 0 and v not in chosen for v in range(g.n)
        ):
            best, best_v = None, None
            for v in range(g.n):
                if v in chosen:
                    continue
                gain = (residual[v] if residual[v] > 0 else 0) + sum(
                    1
                    for u in g.neighbors(v)
                    if u not in chosen and residual[u] > 0
                )
                if best is None or gain > best:
                    best, best_v = gain, v
            chosen.add(best_v)
            for u in g.neighbors(best_v):
                if residual[u] > 0:
                    residual[u] -= 1
        vals = _prune_vector(
            p, g, [1 if v in chosen else 0 for v in range(g.n)]
        )
        w = IntWeighting(tuple(vals))
        assert is_feasible(p, g, w)
        return ApproxResult(p, w, witness_weight(w), ratio_bound(p, g))
    if p != P.GAMMA_W2:
        raise UndefinedParameter(f"{p} is not a vector-greedy parameter")

    vals = [0] * g.n

    def unmet(v):
        if vals[v] >= 1:
            return 0
        return max(0, 2 - sum(vals[u] for u in g.neighbors(v)))

    per = [unmet(v) for v in range(g.n)]
    total = sum(per)
    while total > 0:
        best, best_key = None, None
        for v in range(g.n):
            if vals[v] >= 2:
                continue
            vals[v] += 1
            gain = (per[v] - unmet(v)) + sum(
                per[u] - unmet(u) for u in g.neighbors(v)
            )
            vals[v] -= 1
            if gain > 0 and (best is None or gain > best):
                best, best_key = gain, v
        if best is None:
            break
        v = best_key
        vals[v] += 1
        for u in (v,) + g.neighbors(v):
            d = unmet(u) - per[u]
            per[u] += d
            total += d
    vals = _prune_vector(p, g, vals)
    w = IntWeighting(tuple(vals))
    assert is_feasible(p, g, w)
    return ApproxResult(p, w, witness_weight(w), ratio_bound(p, g))


_DERIVED_BASE = {
    P.GAMMA_SET2: P.GAMMA,
    P.GAMMA_R: P.GAMMA,
    P.GAMMA_TSET2: P.GAMMA_T,
    P.RGAMMA_W2: P.GAMMA_W2,
}


def derived_approx(p: ParameterId, g: Graph) -> ApproxResult:
    """Base greedy followed by the matching constructive transform."""
    from . import transforms  # local import to avoid a cycle

    if p not in _DERIVED_BASE:
        raise UndefinedParameter(f"{p} has no derived approximation")
    if not defined_on(p, g):
        raise UndefinedParameter(f"{p} is infinite on this graph")
    base = _DERIVED_BASE[p]
    if base in _MULTICOVER:
        base_res = greedy_multicover(base, g)
    else:
        base_res = greedy_vector(base, g)
    if p == P.GAMMA_SET2:
        out: Witness = transforms.apply((4, 1), g, base_res.witness)
    elif p == P.GAMMA_R:
        out = transforms.apply((13, 1), g, base_res.witness)
    elif p == P.GAMMA_TSET2:
        out = transforms.apply((5, 2), g, base_res.witness)
    else:  # rainbow weak 2-domination
        if g.n == 1:
            out = RainbowLabeling((1,))
        else:
            out = transforms.apply((9, 3), g, base_res.witness)
    assert is_feasible(p, g, out)
    return ApproxResult(p, out, witness_weight(out), ratio_bound(p, g))


def approximate(p: ParameterId, g: Graph) -> ApproxResult:
    """Dispatch to the approximation algorithm serving parameter p."""
    if p in _MULTICOVER:
        return greedy_multicover(p, g)
    if p in (P.GAMMA_2, P.GAMMA_W2):
        return greedy_vector(p, g)
    if p in _DERIVED_BASE:
        return derived_approx(p, g)
    raise UndefinedParameter(
        f"no approximation algorithm is known for {p}; use the exact solver"
    )
