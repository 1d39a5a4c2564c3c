import pytest

from dominion.approx import (
    approximate,
    coverage_instance,
    derived_approx,
    greedy_multicover,
    greedy_vector,
    ratio_bound,
)
from dominion.errors import UndefinedParameter
from dominion.exact import solve
from dominion.graph import build, cycle_graph, disjoint_union, star_graph
from dominion.params import ParameterId as P, defined_on, is_feasible

from .conftest import seeded_random_graphs

K2 = build(2, [(0, 1)])


def test_multicover_examples():
    assert greedy_multicover(P.GAMMA, star_graph(5)).weight == 1
    assert greedy_multicover(P.GAMMA_X2, cycle_graph(4)).weight == 3
    res = greedy_multicover(P.GAMMA_TX2, disjoint_union(cycle_graph(4), 2))
    assert res.weight <= res.ratio_bound * 8


def test_vector_examples():
    assert greedy_vector(P.GAMMA_2, star_graph(4)).weight == 4
    assert greedy_vector(P.GAMMA_W2, K2).weight == 2
    assert greedy_vector(P.GAMMA_W2, cycle_graph(4)).weight == 2


def test_derived_examples():
    assert derived_approx(P.GAMMA_SET2, star_graph(5)).weight == 2
    assert derived_approx(P.GAMMA_R, disjoint_union(K2, 2)).weight == 4
    res = derived_approx(P.RGAMMA_W2, cycle_graph(4))
    assert res.weight <= 2 * greedy_vector(P.GAMMA_W2, cycle_graph(4)).weight


def test_undefined_parameter_rejected():
    kk2 = disjoint_union(K2, 2)
    with pytest.raises(UndefinedParameter):
        greedy_multicover(P.GAMMA_TX2, kk2)
    with pytest.raises(UndefinedParameter):
        approximate(P.RGAMMA_2, kk2)  # exact-only parameter


def test_coverage_instance_shape():
    inst = coverage_instance(P.GAMMA_2, star_graph(3))
    assert inst.self_satisfying
    assert inst.demands == (2, 2, 2, 2)
    assert inst.contributors[1] == (0,)


def test_feasibility_and_determinism_on_corpus():
    params = [P.GAMMA, P.GAMMA_T, P.GAMMA_X2, P.GAMMA_TX2, P.GAMMA_2,
              P.GAMMA_W2, P.GAMMA_SET2, P.GAMMA_TSET2, P.RGAMMA_W2,
              P.GAMMA_R]
    for g in seeded_random_graphs(60, seed=67):
        for p in params:
            if not defined_on(p, g):
                continue
            r1 = approximate(p, g)
            r2 = approximate(p, g)
            assert r1.witness == r2.witness
            assert is_feasible(p, g, r1.witness)


def test_ratio_on_corpus():
    params = [P.GAMMA, P.GAMMA_T, P.GAMMA_X2, P.GAMMA_TX2, P.GAMMA_2,
              P.GAMMA_W2, P.GAMMA_SET2, P.GAMMA_TSET2, P.RGAMMA_W2,
              P.GAMMA_R]
    for g in seeded_random_graphs(50, seed=71):
        for p in params:
            if not defined_on(p, g):
                continue
            res = approximate(p, g)
            opt = solve(p, g).value.opt
            assert res.weight <= ratio_bound(p, g) * opt + 1e-9
