"""Pure-Python branch-and-bound kernel.

The solver explores items (vertices or edges) in id order, assigning
codomain values in ascending canonical order, so the first optimum found is
the lexicographically least one.  Constraints come in three kinds:

* SUM    -- weighted sum over a scope must reach a threshold,
* UNION  -- both rainbow labels must appear in the scope,
* EXISTS2 -- some scope item must carry the weight-2 value,

each optionally waived when a designated exempt item has positive weight.

Pruning: (i) weight plus a residual-demand lower bound against the
incumbent, (ii) constraints that can no longer be satisfied or waived by
any completion.  The Cython kernel in ``_core`` implements the identical
search; results must match bit for bit.
"""

from __future__ import annotations

SUM, UNION, EXISTS2 = 0, 1, 2

OK, BUDGET = 0, 1


def solve_csp(
    n_items,
    val_weights,
    val_masks,
    kinds,
    thresh,
    exempt,
    scope_ptr,
    scope_items,
    init_best,
    budget,
):
    """Minimize total weight over complete feasible assignments.

    Returns (status, best_weight, best_values, nodes); best_weight is None
    when no assignment with weight < init_best exists.
    """
    nvals = len(val_weights)
    wmax = max(val_weights)
    has_ab = any(m == 3 for m in val_masks)
    has_two = any(
        w == 2 and m == 0 for w, m in zip(val_weights, val_masks)
    )
    ncons = len(kinds)

    # constraint -> scope list; item -> constraints; item -> exempt-links
    scopes = [
        scope_items[scope_ptr[c]:scope_ptr[c + 1]] for c in range(ncons)
    ]
    item_cons = [[] for _ in range(n_items)]
    for c in range(ncons):
        for i in scopes[c]:
            item_cons[i].append(c)
    item_exempt = [[] for _ in range(n_items)]
    for c in range(ncons):
        if exempt[c] >= 0:
            item_exempt[exempt[c]].append(c)

    # static per-item unit-reduction credit, doubled to stay integral
    red2 = [0] * n_items
    for c in range(ncons):
        for i in scopes[c]:
            red2[i] += 1 if kinds[c] == EXISTS2 else 2
        if exempt[c] >= 0:
            red2[exempt[c]] += 4
    suffix_red2 = [0] * (n_items + 1)
    for i in range(n_items - 1, -1, -1):
        suffix_red2[i] = max(suffix_red2[i + 1], red2[i])

    # constraint state
    cur_sum = [0] * ncons
    cnt_a = [0] * ncons
    cnt_b = [0] * ncons
    cnt_two = [0] * ncons
    unassigned = [len(s) for s in scopes]
    # exempt state: 2 waived, 1 open, 0 closed-unwaived / no exempt
    ex_state = [1 if exempt[c] >= 0 else 0 for c in range(ncons)]

    def unmet(c):
        if ex_state[c] == 2:
            return 0
        k = kinds[c]
        if k == SUM:
            return max(0, thresh[c] - cur_sum[c])
        if k == UNION:
            return (cnt_a[c] == 0) + (cnt_b[c] == 0)
        return 0 if cnt_two[c] else 1

    def reachable(c):
        if ex_state[c] >= 1:
            return True
        k = kinds[c]
        u = unassigned[c]
        if k == SUM:
            return cur_sum[c] + u * wmax >= thresh[c]
        if k == UNION:
            miss = (cnt_a[c] == 0) + (cnt_b[c] == 0)
            if miss == 0:
                return True
            if u == 0:
                return False
            if has_ab or miss == 1:
                return True
            return u >= 2
        return cnt_two[c] > 0 or (u > 0 and has_two)

    total_unmet = sum(unmet(c) for c in range(ncons))

    best_w = init_best
    best_vals = None
    values = [0] * n_items
    nodes = 0
    status = OK

    def assign(i, v):
        """Apply value v at item i; return (ok, undo_token, unmet_delta)."""
        w, m = val_weights[v], val_masks[v]
        ok = True
        du = 0
        for c in item_cons[i]:
            before = unmet(c)
            unassigned[c] -= 1
            if kinds[c] == SUM:
                cur_sum[c] += w
            elif kinds[c] == UNION:
                if m & 1:
                    cnt_a[c] += 1
                if m & 2:
                    cnt_b[c] += 1
            else:
                if w == 2 and m == 0:
                    cnt_two[c] += 1
            du += unmet(c) - before
            if not reachable(c):
                ok = False
        for c in item_exempt[i]:
            before = unmet(c)
            ex_state[c] = 2 if w >= 1 else 0
            du += unmet(c) - before
            if ex_state[c] == 0 and not reachable(c):
                ok = False
        return ok, du

    def unassign(i, v):
        w, m = val_weights[v], val_masks[v]
        for c in item_cons[i]:
            unassigned[c] += 1
            if kinds[c] == SUM:
                cur_sum[c] -= w
            elif kinds[c] == UNION:
                if m & 1:
                    cnt_a[c] -= 1
                if m & 2:
                    cnt_b[c] -= 1
            else:
                if w == 2 and m == 0:
                    cnt_two[c] -= 1
        for c in item_exempt[i]:
            ex_state[c] = 1

    def rec(i, weight):
        nonlocal best_w, best_vals, nodes, status, total_unmet
        if i == n_items:
            if weight < best_w:
                best_w = weight
                best_vals = list(values)
            return
        mr = suffix_red2[i]
        for v in range(nvals):
            if status == BUDGET:
                return
            nodes += 1
            if nodes > budget:
                status = BUDGET
                return
            w = weight + val_weights[v]
            ok, du = assign(i, v)
            total_unmet += du
            if ok:
                lb = 0 if total_unmet == 0 else (
                    (2 * total_unmet + mr - 1) // mr if mr else 10 ** 9
                )
                if w + lb < best_w:
                    values[i] = v
                    rec(i + 1, w)
            total_unmet -= du
            unassign(i, v)

    rec(0, 0)
    if best_vals is None:
        return status, None, None, nodes
    return status, best_w, best_vals, nodes
