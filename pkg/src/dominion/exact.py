"""Exact optima for all parameters via depth-first branch and bound.

The search assigns per-vertex (or per-edge) values in id order, values in
ascending canonical order, and prunes with the incumbent, dead constraints
and a residual-demand lower bound, so the returned witness is always the
lexicographically least optimum.  Graphs are decomposed into connected
components first.  The hot kernel is the compiled ``_core`` extension when
available, with ``_pykernel`` as a pure-Python fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import _pykernel
from .errors import BudgetExhausted, IsolatedVertex, UndefinedParameter
from .graph import Graph, MultiGraph
from .params import (
    CODOMAIN_VALUES,
    COVER_PARAMS,
    DISJOINT_PARAMS,
    PARAM_META,
    Codomain,
    EdgeWeighting,
    IntWeighting,
    ParameterId,
    RainbowLabeling,
    Witness,
    defined_on,
)

P = ParameterId

try:  # compiled kernel, if the extension was built
    from . import _core as _kernel

    KERNEL = "cython"
except ImportError:  # pragma: no cover - environment dependent
    _kernel = _pykernel
    KERNEL = "python"

DEFAULT_BUDGET = 10 ** 8

SUM, UNION, EXISTS2 = 0, 1, 2


@dataclass(frozen=True)
class Value:
    """Finite optimum or infinity (parameter undefined on the graph)."""

    opt: Optional[int]

    @classmethod
    def finite(cls, k: int) -> "Value":
        return cls(k)

    @classmethod
    def infinite(cls) -> "Value":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.opt is not None

    def __str__(self) -> str:
        return "infinity" if self.opt is None else str(self.opt)


@dataclass(frozen=True)
class Solution:
    value: Value
    witness: Optional[Witness]


@dataclass
class _Csp:
    n_items: int
    val_weights: list
    val_masks: list
    kinds: list
    thresh: list
    exempt: list
    scope_ptr: list
    scope_items: list


def _vertex_csp(p: ParameterId, g: Graph) -> _Csp:
    meta = PARAM_META[p]
    vals = CODOMAIN_VALUES[meta.codomain]
    kinds, thresh, exempt, ptr, items = [], [], [], [0], []
    for v in range(g.n):
        scope = list(g.neighbors(v))
        if meta.closed:
            scope.append(v)
        if meta.condition == "sum":
            kinds.append(SUM)
        elif meta.condition == "union":
            kinds.append(UNION)
        else:
            kinds.append(EXISTS2)
        thresh.append(meta.demand)
        exempt.append(v if meta.outer else -1)
        items.extend(scope)
        ptr.append(len(items))
    return _Csp(
        g.n,
        [w for _, w, _ in vals],
        [m for _, _, m in vals],
        kinds,
        thresh,
        exempt,
        ptr,
        items,
    )


def _cover_csp(p: ParameterId, edges, n: int) -> _Csp:
    if p == P.TAU_2:
        kinds, thresh, exempt, ptr, items = [], [], [], [0], []
        for u, v in edges:
            kinds.append(SUM)
            thresh.append(2)
            exempt.append(-1)
            items.extend((u, v))
            ptr.append(len(items))
        vals = CODOMAIN_VALUES[Codomain.TERNARY]
        return _Csp(
            n,
            [w for _, w, _ in vals],
            [m for _, _, m in vals],
            kinds,
            thresh,
            exempt,
            ptr,
            items,
        )
    demand = 1 if p == P.RHO else 2
    cod = Codomain.BINARY if p == P.RHO else Codomain.TERNARY
    incident = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    kinds, thresh, exempt, ptr, items = [], [], [], [0], []
    for v in range(n):
        kinds.append(SUM)
        thresh.append(demand)
        exempt.append(-1)
        items.extend(incident[v])
        ptr.append(len(items))
    vals = CODOMAIN_VALUES[cod]
    return _Csp(
        len(edges),
        [w for _, w, _ in vals],
        [m for _, _, m in vals],
        kinds,
        thresh,
        exempt,
        ptr,
        items,
    )


def _greedy_ub(csp: _Csp) -> Optional[int]:
    """Cheap feasible upper bound via unit-upgrade greedy, or None."""
    n, nv = csp.n_items, len(csp.val_weights)
    vals = [0] * n
    scopes = [
        csp.scope_items[csp.scope_ptr[c]:csp.scope_ptr[c + 1]]
        for c in range(len(csp.kinds))
    ]
    item_cons = [[] for _ in range(n)]
    for c, sc in enumerate(scopes):
        for i in sc:
            item_cons[i].append(c)
    for c, e in enumerate(csp.exempt):
        if e >= 0:
            item_cons[e].append(c)

    def unmet(c):
        e = csp.exempt[c]
        if e >= 0 and csp.val_weights[vals[e]] >= 1:
            return 0
        k = csp.kinds[c]
        if k == SUM:
            return max(
                0, csp.thresh[c] - sum(csp.val_weights[vals[i]] for i in scopes[c])
            )
        if k == UNION:
            mask = 0
            for i in scopes[c]:
                mask |= csp.val_masks[vals[i]]
            return (not mask & 1) + (not mask & 2)
        return 0 if any(
            csp.val_weights[vals[i]] == 2 and csp.val_masks[vals[i]] == 0
            for i in scopes[c]
        ) else 1

    per_con = [unmet(c) for c in range(len(csp.kinds))]
    total = sum(per_con)
    while total > 0:
        best = None  # (gain*othercost ordering, item, value)
        for i in range(n):
            affected = item_cons[i]
            if not affected:
                continue
            cur_w = csp.val_weights[vals[i]]
            old = vals[i]
            for v in range(nv):
                dw = csp.val_weights[v] - cur_w
                if dw <= 0:
                    continue
                vals[i] = v
                gain = sum(per_con[c] - unmet(c) for c in affected)
                vals[i] = old
                if gain <= 0:
                    continue
                if best is None or gain * best[1] > best[0] * dw:
                    best = (gain, dw, i, v)
        if best is None:
            return None
        _, _, i, v = best
        vals[i] = v
        for c in item_cons[i]:
            d = unmet(c) - per_con[c]
            per_con[c] += d
            total += d
    return sum(csp.val_weights[v] for v in vals)


def _run(csp: _Csp, budget: int):
    """Run the kernel; returns (values | None, nodes).

    Raises BudgetExhausted when the node budget runs out before the search
    space is exhausted.
    """
    ub = _greedy_ub(csp)
    cap = sum(max(csp.val_weights) for _ in range(csp.n_items)) + 1
    init_best = cap if ub is None else ub + 1
    status, best_w, best_vals, nodes = _kernel.solve_csp(
        csp.n_items,
        list(csp.val_weights),
        list(csp.val_masks),
        list(csp.kinds),
        list(csp.thresh),
        list(csp.exempt),
        list(csp.scope_ptr),
        list(csp.scope_items),
        init_best,
        budget,
    )
    if status == 1:
        raise BudgetExhausted("node budget exhausted", incumbent=best_w)
    return best_vals, nodes


def _wrap_vertex_witness(p: ParameterId, values) -> Witness:
    if PARAM_META[p].rainbow:
        return RainbowLabeling(tuple(values))
    return IntWeighting(tuple(values))


def solve(p: ParameterId, g: Graph, budget: int = DEFAULT_BUDGET) -> Solution:
    """Exact optimum with the canonical optimal witness."""
    if p in COVER_PARAMS:
        return solve_cover(p, g)
    if p in DISJOINT_PARAMS:
        return solve_disjoint(p, g)
    if p not in PARAM_META:
        raise UndefinedParameter(str(p))
    if g.n == 0:
        return Solution(Value.finite(0), _wrap_vertex_witness(p, ()))
    if p != P.RGAMMA_TX2 and not defined_on(p, g):
        return Solution(Value.infinite(), None)

    out = [0] * g.n
    total = 0
    remaining = budget
    for comp in g.components():
        sub, idx = g.induced(comp)
        csp = _vertex_csp(p, sub)
        values, nodes = _run(csp, remaining)
        remaining -= nodes
        if values is None:
            # only reachable for rainbow total double domination
            return Solution(Value.infinite(), None)
        back = {i: v for v, i in idx.items()}
        for local, val in enumerate(values):
            out[back[local]] = val
        cod = CODOMAIN_VALUES[PARAM_META[p].codomain]
        total += sum(cod[v][1] for v in values)
    return Solution(Value.finite(total), _wrap_vertex_witness(p, out))


def solve_cover(
    p: ParameterId, g: Union[Graph, MultiGraph], budget: int = DEFAULT_BUDGET
) -> Solution:
    """Exact edge-cover / 2-edge-cover / 2-vertex-cover optimum."""
    if p not in COVER_PARAMS:
        raise UndefinedParameter(f"{p} is not a cover parameter")
    edges = (
        list(g.edges) if isinstance(g, MultiGraph) else g.edges()
    )
    if p in (P.RHO, P.RHO_2) and g.n > 0 and g.min_degree() == 0:
        raise IsolatedVertex("edge covers need minimum degree >= 1")
    csp = _cover_csp(p, edges, g.n)
    if csp.n_items == 0 and p == P.TAU_2:
        return Solution(Value.finite(0), IntWeighting((0,) * g.n))
    values, _ = _run(csp, budget)
    if values is None:
        return Solution(Value.infinite(), None)
    if p == P.TAU_2:
        w: Witness = IntWeighting(tuple(values))
    else:
        w = EdgeWeighting(tuple(values))
    total = sum(values)
    return Solution(Value.finite(total), w)


def _dominates(g: Graph, mask: int, total: bool) -> bool:
    for v in range(g.n):
        nb = 0
        for u in g.neighbors(v):
            nb |= 1 << u
        if not total:
            nb |= 1 << v
        if not nb & mask:
            return False
    return True


def solve_disjoint(
    p: ParameterId, g: Graph, budget: int = DEFAULT_BUDGET
) -> Solution:
    """Minimum |A| + |B| over disjoint (total) dominating pairs.

    Plain exhaustive enumeration with the symmetry cut min(A) < min(B);
    kept independent of the branch-and-bound path so it can serve as the
    oracle for the rainbow double domination identities.
    """
    if p not in DISJOINT_PARAMS:
        raise UndefinedParameter(f"{p} is not a disjoint-domination parameter")
    total_dom = p == P.GAMMA_T_GAMMA_T
    n = g.n
    if n == 0:
        return Solution(Value.finite(0), RainbowLabeling(()))
    dominating = [
        m for m in range(1, 1 << n) if _dominates(g, m, total_dom)
    ]
    best = None
    for a in dominating:
        low_a = (a & -a).bit_length() - 1
        ca = bin(a).count("1")
        if best is not None and ca + 1 > best[0]:
            continue
        comp = ((1 << n) - 1) ^ a
        for b in dominating:
            if b & ~comp:
                continue
            low_b = (b & -b).bit_length() - 1
            if low_a >= low_b:
                continue
            cb = bin(b).count("1")
            labels = tuple(
                1 if a >> v & 1 else (2 if b >> v & 1 else 0)
                for v in range(n)
            )
            key = (ca + cb, labels)
            if best is None or key < best:
                best = key
    if best is None:
        return Solution(Value.infinite(), None)
    return Solution(Value.finite(best[0]), RainbowLabeling(best[1]))
