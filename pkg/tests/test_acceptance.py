"""Acceptance suite: one test per criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
pass/fail lines.
"""

import random
from itertools import combinations, product

import pytest

from dominion.approx import approximate, ratio_bound
from dominion.audit import (
    audit_graph,
    hasse_and_classes,
    sharpness_assignments,
    sharpness_check,
)
from dominion.bounds import COVERING_PAIRS, PREORDER_CLASSES, BoundKind, Condition, bound_table
from dominion.errors import InvalidInstance, SideConditionViolated
from dominion.exact import solve, solve_cover, solve_disjoint
from dominion.families import FamilyId as F, MIN_SIZE, expected_cells, expected_value, generate
from dominion.graph import build
from dominion.params import (
    CODOMAIN_VALUES,
    PARAM_META,
    PARAM_OF_ROW,
    IntWeighting,
    ParameterId as P,
    RainbowLabeling,
    defined_on,
    is_feasible,
    witness_weight,
)
from dominion.reductions import (
    hypergraph,
    hypergraph_to_split,
    set_cover_instance,
    set_cover_to_split,
    two_colorable,
)
from dominion.transforms import DIRECT_TRANSFORMS, _COVERING_PROJECTIONS, verify_guarantee

from .conftest import seeded_random_graphs
from .oracle import set_cover_opt

TABLE4_FAMILIES = (
    F.KK2, F.KC4, F.KNSS, F.KH, F.KK44, F.FN3, F.FN4, F.STAR, F.SK3N,
    F.QN, F.TN,
)
UNION_FAMILIES = {F.KK2, F.KC4, F.KH, F.KK44}


def _criterion(num, name, ok):
    print(f"[acceptance] criterion {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def _family_instances():
    out = []
    for fam in TABLE4_FAMILIES:
        sizes = (1, 2, 3) if fam in UNION_FAMILIES else (3, 4, 5)
        for size in sizes:
            if size >= MIN_SIZE[fam]:
                out.append((fam, size, generate(fam, size)))
    return out


def test_criterion_1_family_oracle():
    failures = []
    checked = 0
    for fam, size, g in _family_instances():
        for p in expected_cells(fam):
            checked += 1
            if solve(p, g).value != expected_value(fam, size, p):
                failures.append((fam, size, p))
    print(f"  [criterion 1] {checked} filled cells checked")
    _criterion(1, "family oracle suite", checked >= 120 and not failures)


def test_criterion_2_auxiliary_claims():
    ok = True
    for n in (2, 3):
        g = generate(F.SKODD, n)
        ok &= solve(P.GAMMA_T, g).value.opt == 3 * n + 1
        ok &= solve(P.GAMMA_2, g).value.opt == 2 * n + 1
        ok &= solve(P.GAMMA_W2, g).value.opt == 2 * n + 1
    for n in (3, 4):
        g = generate(F.SKN2, n)
        ok &= solve(P.GAMMA_R, g).value.opt == 2 * n - 1
        ok &= solve(P.GAMMA_W2, g).value.opt == n
        ok &= solve(P.GAMMA_2, g).value.opt == n
    for n in (3, 4, 5):
        g = generate(F.SSTARMINUS, n)
        ok &= solve(P.GAMMA_R, g).value.opt == n + 1
        ok &= solve(P.GAMMA, g).value.opt == n
        ok &= solve(P.GAMMA_SET2, g).value.opt == 2 * n
    for n in (3, 4):
        g = generate(F.KNSS, n)
        ok &= solve(P.RGAMMA_W2, g).value.opt == 2 * n - 2
        ok &= solve(P.GAMMA_R, g).value.opt == 2 * n - 2
        for p in (P.GAMMA_W2, P.GAMMA_SET2, P.GAMMA_TSET2, P.GAMMA_2,
                  P.GAMMA_X2, P.GAMMA_TX2):
            ok &= solve(p, g).value.opt == n
    _criterion(2, "auxiliary claim suite", ok)


def test_criterion_3_bound_audit(corpus200):
    bad = []
    for g in corpus200:
        if audit_graph(g):
            bad.append(g.edges())
    for fam, size, g in _family_instances():
        if audit_graph(g):
            bad.append((fam, size))
    print(f"  [criterion 3] audited {len(corpus200)} random graphs "
          f"+ {len(_family_instances())} family instances")
    _criterion(3, "bound audit", not bad)


def test_criterion_4_sharpness():
    default_size = {F.KNSS: 3}
    bad = []
    for s in sharpness_assignments():
        size = default_size.get(s.family, MIN_SIZE[s.family])
        rep = sharpness_check(s, size)
        if not rep.passed:
            bad.append(rep)
    print(f"  [criterion 4] {len(sharpness_assignments())} cells checked")
    _criterion(4, "sharpness suite", not bad)


def _enumerate_witnesses(p, g, cap):
    meta = PARAM_META[p]
    vals = [v for v, _, _ in CODOMAIN_VALUES[meta.codomain]]
    for assign in product(vals, repeat=g.n):
        w = RainbowLabeling(assign) if meta.rainbow else IntWeighting(assign)
        if witness_weight(w) <= cap and is_feasible(p, g, w):
            yield w


def test_criterion_5_transform_soundness(small_graph_classes):
    table = bound_table()
    cells = sorted(set(DIRECT_TRANSFORMS) | set(_COVERING_PROJECTIONS))
    violations = []
    checked = 0
    for g in small_graph_classes:
        opt_cache = {}
        for (r, c) in cells:
            pr, pc = PARAM_OF_ROW[r], PARAM_OF_ROW[c]
            e = table[pr, pc]
            if e.kind == BoundKind.NO_BOUND:
                continue
            if not (defined_on(pc, g) and defined_on(pr, g)):
                continue
            if e.condition == Condition.EDGE and g.m == 0:
                continue
            if e.condition == Condition.NOT_K1 and g.n == 1:
                continue
            if pc not in opt_cache:
                opt_cache[pc] = solve(pc, g).value.opt
            for w in _enumerate_witnesses(pc, g, opt_cache[pc] + 1):
                checked += 1
                try:
                    rep = verify_guarantee((r, c), g, w)
                except SideConditionViolated:
                    continue
                if not rep.passed:
                    violations.append(((r, c), g.edges(), w.values))
    print(f"  [criterion 5] {checked} transform applications over "
          f"{len(small_graph_classes)} graphs")
    _criterion(5, "transform soundness", not violations)


def test_criterion_6_identities(corpus_no_isolated):
    ok = True
    for g in corpus_no_isolated:
        ok &= solve(P.RGAMMA_X2, g).value == solve_disjoint(P.GAMMA_GAMMA, g).value
        ok &= (
            solve(P.RGAMMA_TX2, g).value
            == solve_disjoint(P.GAMMA_T_GAMMA_T, g).value
        )
        if g.n:
            ok &= (
                solve_cover(P.RHO_2, g).value.opt
                + solve_cover(P.TAU_2, g).value.opt
                == 2 * g.n
            )
    print(f"  [criterion 6] {len(corpus_no_isolated)} graphs")
    _criterion(6, "identity suite", ok)


def test_criterion_7_greedy_ratio(corpus200):
    params = [P.GAMMA, P.GAMMA_X2, P.GAMMA_T, P.GAMMA_TX2, P.GAMMA_2,
              P.GAMMA_W2, P.GAMMA_SET2, P.GAMMA_TSET2, P.RGAMMA_W2,
              P.GAMMA_R]
    bad = []
    checked = 0
    for g in corpus200:
        for p in params:
            if not defined_on(p, g):
                continue
            if p in (P.GAMMA_T, P.GAMMA_TX2) and g.max_degree() < 2:
                continue
            res = approximate(p, g)
            if not is_feasible(p, g, res.witness):
                bad.append((p, g.edges(), "infeasible"))
                continue
            opt = solve(p, g).value.opt
            checked += 1
            if res.weight > ratio_bound(p, g) * opt + 1e-9:
                bad.append((p, g.edges(), res.weight, opt))
    print(f"  [criterion 7] {checked} greedy runs")
    _criterion(7, "greedy ratio", not bad)


def test_criterion_8_reductions():
    ok = True
    count = 0
    # exhaustive small set-cover instances
    for ns in (1, 2, 3):
        subsets = [
            frozenset(s)
            for r in range(1, ns + 1)
            for s in combinations(range(ns), r)
        ]
        for k in (1, 2, 3):
            for fam in combinations(subsets, k):
                if set().union(*fam) != set(range(ns)):
                    continue
                inst = set_cover_instance(ns, fam)
                gad = set_cover_to_split(inst)
                opt = set_cover_opt(ns, fam)
                count += 1
                ok &= solve(P.RGAMMA_2, gad.graph).value.opt == 2 * opt
                ok &= solve(P.RGAMMA_X2, gad.graph).value.opt == 2 * opt
    # seeded sample across the full |S| <= 5, |F| <= 4 range
    rng = random.Random(0)
    sampled = 0
    while sampled < 60:
        ns, nf = rng.randint(1, 5), rng.randint(1, 4)
        fam = [
            frozenset(x for x in range(ns) if rng.random() < 0.6)
            or frozenset({rng.randrange(ns)})
            for _ in range(nf)
        ]
        if set().union(*fam) != set(range(ns)):
            continue
        sampled += 1
        inst = set_cover_instance(ns, fam)
        gad = set_cover_to_split(inst)
        opt = set_cover_opt(ns, fam)
        ok &= solve(P.RGAMMA_2, gad.graph).value.opt == 2 * opt
        ok &= solve(P.RGAMMA_X2, gad.graph).value.opt == 2 * opt
    # hypergraphs: exhaustive small, then a seeded sample up to 5 vertices
    hyp_count = 0
    for n in (2, 3):
        allsets = [
            frozenset(s)
            for r in range(1, n + 1)
            for s in combinations(range(n), r)
        ]
        for k in (1, 2, 3):
            for es in combinations(allsets, k):
                h = hypergraph(n, es)
                hyp_count += 1
                try:
                    gad = hypergraph_to_split(h)
                except InvalidInstance:
                    ok &= two_colorable(h) and not two_colorable(h, 2)
                    continue
                finite = solve(P.RGAMMA_TX2, gad.graph).value.is_finite
                ok &= finite == two_colorable(h)
    sampled_h = 0
    while sampled_h < 60:
        n, k = rng.randint(2, 5), rng.randint(1, 4)
        es = [
            frozenset(x for x in range(n) if rng.random() < 0.5)
            or frozenset({rng.randrange(n)})
            for _ in range(k)
        ]
        h = hypergraph(n, es)
        sampled_h += 1
        try:
            gad = hypergraph_to_split(h)
        except InvalidInstance:
            ok &= two_colorable(h) and not two_colorable(h, 2)
            continue
        finite = solve(P.RGAMMA_TX2, gad.graph).value.is_finite
        ok &= finite == two_colorable(h)
    print(f"  [criterion 8] {count} exhaustive + {sampled} sampled covers, "
          f"{hyp_count} exhaustive + {sampled_h} sampled hypergraphs")
    _criterion(8, "reduction suite", ok)


def test_criterion_9_structure():
    pairs, classes = hasse_and_classes()
    ok = (
        tuple(classes) == PREORDER_CLASSES
        and len(classes) == 4
        and list(pairs) == list(COVERING_PAIRS)
    )
    _criterion(9, "structure suite", ok)
