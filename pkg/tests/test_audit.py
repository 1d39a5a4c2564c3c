from fractions import Fraction

from dominion.audit import (
    audit_graph,
    hasse_and_classes,
    sharpness_assignments,
    sharpness_check,
)
from dominion.bounds import (
    COVERING_PAIRS,
    BoundKind,
    Condition,
    bound_table,
    table_to_jsonable,
)
from dominion.exact import solve
from dominion.graph import build, cycle_graph
from dominion.params import PARAM_OF_ROW, TABLE_PARAMS, ParameterId as P

from .conftest import seeded_random_graphs


def test_table_checksum_matches_fixture(bound_table_fixture):
    assert table_to_jsonable() == bound_table_fixture


def test_table_invariants():
    table = bound_table()
    no_bound = set()
    for (r, c), e in table.items():
        if r == c:
            assert e.kind == BoundKind.EQUAL
        elif e.kind == BoundKind.LINEAR:
            assert e.a > 0
        else:
            no_bound.add((PARAM_OF_ROW and r, c))
    # the no-bound set: rows 6,7,8 against columns 1..5,9,13; rows 10,11
    # against 1..9,13; row 12 against everything else
    def rows(r):
        return {c for c in TABLE_PARAMS if table[r, c].kind == BoundKind.NO_BOUND}

    low = {P.GAMMA, P.GAMMA_T, P.GAMMA_W2, P.GAMMA_SET2, P.GAMMA_TSET2,
           P.RGAMMA_W2, P.GAMMA_R}
    for r in (P.GAMMA_2, P.GAMMA_X2, P.GAMMA_TX2):
        assert rows(r) == low
    for r in (P.RGAMMA_2, P.RGAMMA_X2):
        assert rows(r) == low | {P.GAMMA_2, P.GAMMA_X2, P.GAMMA_TX2}
    assert rows(P.RGAMMA_TX2) == set(TABLE_PARAMS) - {P.RGAMMA_TX2}
    for r in low:
        assert rows(r) == set()


def test_specific_entries():
    table = bound_table()
    e = table[P.GAMMA_T, P.GAMMA_W2]
    assert (e.a, e.b) == (Fraction(3, 2), Fraction(-1, 2))
    assert table[P.GAMMA_2, P.GAMMA].kind == BoundKind.NO_BOUND
    assert table[P.GAMMA, P.GAMMA].kind == BoundKind.EQUAL
    assert table[P.GAMMA_TX2, P.GAMMA_2].a == 3
    assert table[P.GAMMA, P.RGAMMA_X2].a == Fraction(1, 2)
    assert table[P.GAMMA, P.GAMMA_R].condition == Condition.EDGE
    assert table[P.RGAMMA_W2, P.GAMMA_W2].condition == Condition.NOT_K1


def test_audit_c4_and_petersen_clean():
    assert audit_graph(cycle_graph(4)) == []
    petersen = build(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 7), (7, 9), (9, 6),
         (6, 8), (8, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
    )
    assert audit_graph(petersen) == []


def test_audit_random_sample():
    for g in seeded_random_graphs(40, seed=53):
        assert audit_graph(g) == [], g.edges()


def test_audit_edgeless_rules():
    assert audit_graph(build(3, [])) == []
    assert audit_graph(build(1, [])) == []


def test_sharpness_examples():
    from dominion.families import FamilyId as F

    by_cell = {s.entry: s for s in sharpness_assignments()}
    rep = sharpness_check(by_cell[(2, 3)], 2)
    assert rep.passed and rep.row_value == 7 and rep.col_value == 5
    rep = sharpness_check(by_cell[(1, 13)], 3)
    assert rep.passed and rep.row_value == 3 and rep.col_value == 4
    rep = sharpness_check(by_cell[(8, 7)], 3)
    assert rep.passed and rep.row_value == 7 and rep.col_value == 4
    assert by_cell[(2, 3)].family == F.SKODD


def test_hasse_and_classes():
    pairs, classes = hasse_and_classes()
    assert list(pairs) == list(COVERING_PAIRS)
    assert (P.GAMMA, P.GAMMA_W2) in pairs
    assert len(classes) == 4
    assert classes[-1] == frozenset({P.RGAMMA_TX2})
    # gamma is bounded by a function of rgamma_tx2 but not conversely
    table = bound_table()
    assert table[P.GAMMA, P.RGAMMA_TX2].kind != BoundKind.NO_BOUND
    assert table[P.RGAMMA_TX2, P.GAMMA].kind == BoundKind.NO_BOUND


def test_hasse_consistency_on_corpus():
    for g in seeded_random_graphs(30, seed=59):
        vals = {p: solve(p, g).value for p in TABLE_PARAMS}
        for lo, hi in COVERING_PAIRS:
            if vals[lo].is_finite and vals[hi].is_finite:
                assert vals[lo].opt <= vals[hi].opt


def test_unbounded_cells_witnessed_by_growing_families():
    """Bold families grow the row parameter while the column parameter
    stays bounded, witnessing a few representative no-bound cells."""
    from dominion.families import FamilyId as F, expected_value, generate

    # 2-domination vs total {2}-domination on stars
    for n in (3, 4, 5):
        g = generate(F.STAR, n)
        assert solve(P.GAMMA_2, g).value.opt == n
        assert solve(P.GAMMA_TSET2, g).value.opt == 4
    # rainbow total double domination vs Roman domination on spiders
    for n in (3, 4, 5):
        g = generate(F.TN, n)
        assert solve(P.RGAMMA_TX2, g).value.opt == n + 9
        assert solve(P.GAMMA_R, g).value.opt == 6
    # rainbow 2-domination vs total double domination
    for n in (3, 4):
        g = generate(F.SK3N, n)
        assert solve(P.RGAMMA_2, g).value.opt == n + 3
        assert solve(P.GAMMA_TX2, g).value.opt == 6
