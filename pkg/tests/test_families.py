import pytest

from dominion.errors import SizeBelowThreshold
from dominion.exact import Value, solve
from dominion.families import (
    MIN_SIZE,
    FamilyId as F,
    expected_cells,
    expected_value,
    generate,
)
from dominion.params import ParameterId as P


def test_structural_shapes():
    g = generate(F.FN4, 3)
    assert g.n == 10 and g.degree(0) == 6
    g = generate(F.QN, 3)
    assert g.n == 8
    assert sorted(g.degree(v) for v in range(g.n)).count(3) == 2
    g = generate(F.KNSS, 3)
    assert g.n == 9
    assert sum(1 for v in range(g.n) if g.degree(v) == 2) == 6
    g = generate(F.FN3, 4)
    assert g.n == 9 and g.degree(0) == 8
    g = generate(F.SK3N, 3)
    assert sum(1 for v in range(g.n) if g.degree(v) == 6) == 3
    g = generate(F.TN, 3)
    assert g.n == 14
    g = generate(F.SSTARMINUS, 3)
    assert g.n == 6
    g = generate(F.KH, 2)
    assert g.n == 12 and g.m == 10
    g = generate(F.SKN2, 3)
    assert g.n == 9
    g = generate(F.SKODD, 2)
    assert g.n == 15


def test_size_threshold():
    with pytest.raises(SizeBelowThreshold):
        generate(F.KNSS, 2)
    with pytest.raises(SizeBelowThreshold):
        generate(F.SKODD, 1)


def test_expected_value_cells():
    assert expected_value(F.KNSS, 4, P.RGAMMA_W2) == Value.finite(6)
    assert expected_value(F.FN3, 3, P.GAMMA_X2) == Value.finite(4)
    assert expected_value(F.KK2, 2, P.GAMMA_TX2) == Value.infinite()
    assert expected_value(F.KC4, 2, P.GAMMA) == Value.finite(4)
    assert expected_value(F.KC4, 1, P.GAMMA_SET2) is None  # blank cell
    assert expected_value(F.TN, 4, P.RGAMMA_TX2) == Value.finite(13)


def test_oracle_agreement_small_sizes():
    spot = [
        (F.KK2, 2),
        (F.KC4, 1),
        (F.STAR, 4),
        (F.FN3, 3),
        (F.QN, 3),
        (F.SSTARMINUS, 3),
    ]
    for fam, size in spot:
        g = generate(fam, size)
        for p in expected_cells(fam):
            assert solve(p, g).value == expected_value(fam, size, p), (fam, p)
