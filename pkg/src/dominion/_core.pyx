# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel.

Mirrors ``dominion._pykernel.solve_csp`` exactly: same search order, same
pruning rules, same canonical (lexicographically least) optimum.  See the
pure-Python module for the semantics; this file is only a faster twin.
"""

from libc.stdlib cimport malloc, free

DEF K_SUM = 0
DEF K_UNION = 1
DEF K_EXISTS2 = 2


cdef struct State:
    int n_items
    int nvals
    int ncons
    int wmax
    int has_ab
    int has_two
    int* val_w
    int* val_m
    int* kinds
    int* thresh
    int* exempt
    int* scope_ptr
    int* scope_items
    int* ic_ptr          # item -> constraints CSR
    int* ic_ids
    int* ie_ptr          # item -> exempt-constraint CSR
    int* ie_ids
    int* suffix_red2
    int* cur_sum
    int* cnt_a
    int* cnt_b
    int* cnt_two
    int* unassigned
    int* ex_state        # 2 waived, 1 open, 0 closed/none
    int* values
    int* best_vals
    int total_unmet
    int best_w
    int found
    long long nodes
    long long budget
    int status           # 0 ok, 1 budget


cdef inline int c_unmet(State* s, int c):
    cdef int k
    if s.ex_state[c] == 2:
        return 0
    k = s.kinds[c]
    if k == K_SUM:
        if s.thresh[c] > s.cur_sum[c]:
            return s.thresh[c] - s.cur_sum[c]
        return 0
    if k == K_UNION:
        return (s.cnt_a[c] == 0) + (s.cnt_b[c] == 0)
    return 0 if s.cnt_two[c] else 1


cdef inline int c_reachable(State* s, int c):
    cdef int k, u, miss
    if s.ex_state[c] >= 1:
        return 1
    k = s.kinds[c]
    u = s.unassigned[c]
    if k == K_SUM:
        return s.cur_sum[c] + u * s.wmax >= s.thresh[c]
    if k == K_UNION:
        miss = (s.cnt_a[c] == 0) + (s.cnt_b[c] == 0)
        if miss == 0:
            return 1
        if u == 0:
            return 0
        if s.has_ab or miss == 1:
            return 1
        return u >= 2
    return s.cnt_two[c] > 0 or (u > 0 and s.has_two)


cdef int c_assign(State* s, int i, int v, int* du_out):
    cdef int ok = 1
    cdef int du = 0
    cdef int w = s.val_w[v]
    cdef int m = s.val_m[v]
    cdef int j, c, before
    for j in range(s.ic_ptr[i], s.ic_ptr[i + 1]):
        c = s.ic_ids[j]
        before = c_unmet(s, c)
        s.unassigned[c] -= 1
        if s.kinds[c] == K_SUM:
            s.cur_sum[c] += w
        elif s.kinds[c] == K_UNION:
            if m & 1:
                s.cnt_a[c] += 1
            if m & 2:
                s.cnt_b[c] += 1
        else:
            if w == 2 and m == 0:
                s.cnt_two[c] += 1
        du += c_unmet(s, c) - before
        if not c_reachable(s, c):
            ok = 0
    for j in range(s.ie_ptr[i], s.ie_ptr[i + 1]):
        c = s.ie_ids[j]
        before = c_unmet(s, c)
        s.ex_state[c] = 2 if w >= 1 else 0
        du += c_unmet(s, c) - before
        if s.ex_state[c] == 0 and not c_reachable(s, c):
            ok = 0
    du_out[0] = du
    return ok


cdef void c_unassign(State* s, int i, int v):
    cdef int w = s.val_w[v]
    cdef int m = s.val_m[v]
    cdef int j, c
    for j in range(s.ic_ptr[i], s.ic_ptr[i + 1]):
        c = s.ic_ids[j]
        s.unassigned[c] += 1
        if s.kinds[c] == K_SUM:
            s.cur_sum[c] -= w
        elif s.kinds[c] == K_UNION:
            if m & 1:
                s.cnt_a[c] -= 1
            if m & 2:
                s.cnt_b[c] -= 1
        else:
            if w == 2 and m == 0:
                s.cnt_two[c] -= 1
    for j in range(s.ie_ptr[i], s.ie_ptr[i + 1]):
        s.ex_state[s.ie_ids[j]] = 1


cdef void c_rec(State* s, int i, int weight):
    cdef int v, w, du, ok, lb, mr, k
    if i == s.n_items:
        if weight < s.best_w:
            s.best_w = weight
            s.found = 1
            for k in range(s.n_items):
                s.best_vals[k] = s.values[k]
        return
    mr = s.suffix_red2[i]
    for v in range(s.nvals):
        if s.status == 1:
            return
        s.nodes += 1
        if s.nodes > s.budget:
            s.status = 1
            return
        w = weight + s.val_w[v]
        ok = c_assign(s, i, v, &du)
        s.total_unmet += du
        if ok:
            if s.total_unmet == 0:
                lb = 0
            elif mr == 0:
                lb = 1000000000
            else:
                lb = (2 * s.total_unmet + mr - 1) // mr
            if w + lb < s.best_w:
                s.values[i] = v
                c_rec(s, i + 1, w)
        s.total_unmet -= du
        c_unassign(s, i, v)


cdef int* _alloc(list xs) except NULL:
    cdef int n = len(xs)
    cdef int* p = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        p[i] = xs[i]
    return p


def solve_csp(n_items, val_weights, val_masks, kinds, thresh, exempt,
              scope_ptr, scope_items, init_best, budget):
    """Drop-in replacement for the pure-Python kernel entry point."""
    cdef State s
    cdef int ncons = len(kinds)
    cdef int c, i, j

    s.n_items = n_items
    s.nvals = len(val_weights)
    s.ncons = ncons
    s.wmax = max(val_weights)
    s.has_ab = 1 if any(m == 3 for m in val_masks) else 0
    s.has_two = 1 if any(
        w == 2 and m == 0 for w, m in zip(val_weights, val_masks)
    ) else 0

    item_cons = [[] for _ in range(n_items)]
    for c in range(ncons):
        for i in scope_items[scope_ptr[c]:scope_ptr[c + 1]]:
            item_cons[i].append(c)
    item_ex = [[] for _ in range(n_items)]
    for c in range(ncons):
        if exempt[c] >= 0:
            item_ex[exempt[c]].append(c)

    red2 = [0] * n_items
    for c in range(ncons):
        unit = 1 if kinds[c] == K_EXISTS2 else 2
        for i in scope_items[scope_ptr[c]:scope_ptr[c + 1]]:
            red2[i] += unit
        if exempt[c] >= 0:
            red2[exempt[c]] += 4
    suffix = [0] * (n_items + 1)
    for i in range(n_items - 1, -1, -1):
        suffix[i] = max(suffix[i + 1], red2[i])

    ic_ptr, ic_ids = [0], []
    for i in range(n_items):
        ic_ids.extend(item_cons[i])
        ic_ptr.append(len(ic_ids))
    ie_ptr, ie_ids = [0], []
    for i in range(n_items):
        ie_ids.extend(item_ex[i])
        ie_ptr.append(len(ie_ids))

    s.val_w = _alloc(list(val_weights))
    s.val_m = _alloc(list(val_masks))
    s.kinds = _alloc(list(kinds))
    s.thresh = _alloc(list(thresh))
    s.exempt = _alloc(list(exempt))
    s.scope_ptr = _alloc(list(scope_ptr))
    s.scope_items = _alloc(list(scope_items))
    s.ic_ptr = _alloc(ic_ptr)
    s.ic_ids = _alloc(ic_ids)
    s.ie_ptr = _alloc(ie_ptr)
    s.ie_ids = _alloc(ie_ids)
    s.suffix_red2 = _alloc(suffix)
    s.cur_sum = _alloc([0] * ncons)
    s.cnt_a = _alloc([0] * ncons)
    s.cnt_b = _alloc([0] * ncons)
    s.cnt_two = _alloc([0] * ncons)
    s.unassigned = _alloc(
        [scope_ptr[c + 1] - scope_ptr[c] for c in range(ncons)]
    )
    s.ex_state = _alloc([1 if exempt[c] >= 0 else 0 for c in range(ncons)])
    s.values = _alloc([0] * n_items)
    s.best_vals = _alloc([0] * n_items)

    s.total_unmet = 0
    for c in range(ncons):
        s.total_unmet += c_unmet(&s, c)
    s.best_w = init_best
    s.found = 0
    s.nodes = 0
    s.budget = budget
    s.status = 0

    try:
        c_rec(&s, 0, 0)
        status = int(s.status)
        nodes = int(s.nodes)
        if not s.found:
            return status, None, None, nodes
        best = [s.best_vals[i] for i in range(n_items)]
        return status, int(s.best_w), best, nodes
    finally:
        free(s.val_w); free(s.val_m); free(s.kinds); free(s.thresh)
        free(s.exempt); free(s.scope_ptr); free(s.scope_items)
        free(s.ic_ptr); free(s.ic_ids); free(s.ie_ptr); free(s.ie_ids)
        free(s.suffix_red2); free(s.cur_sum); free(s.cnt_a); free(s.cnt_b)
        free(s.cnt_two); free(s.unassigned); free(s.ex_state)
        free(s.values); free(s.best_vals)
