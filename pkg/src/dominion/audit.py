"""Audit engines: bound checking, sharpness verification, order structure.

``audit_graph`` computes all thirteen exact values of a graph and checks
every applicable cell of the bound table in exact rational arithmetic.
``sharpness_check`` asserts that a designated family instance achieves a
cell's bound with equality.  ``hasse_and_classes`` exposes the covering
pairs of the pointwise order and computes the equivalence classes of the
mutual-boundedness preorder from the table itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import (
    COVERING_PAIRS,
    EDGELESS_RULES,
    PREORDER_CLASSES,
    BoundEntry,
    BoundKind,
    Condition,
    bound_table,
)
from .errors import SizeBelowThreshold
from .exact import Value, solve
from .families import MIN_SIZE, FamilyId, generate
from .graph import Graph
from .params import PARAM_OF_ROW, ROW_OF, TABLE_PARAMS, ParameterId

P = ParameterId
F = FamilyId


@dataclass(frozen=True)
class Violation:
    row: ParameterId
    col: ParameterId
    row_value: int
    col_value: int
    bound: Fraction
    kind: str  # "table" or "edgeless"


def compute_all(g: Graph, budget: Optional[int] = None) -> dict[ParameterId, Value]:
    """Exact values of all 13 table parameters."""
    kwargs = {} if budget is None else {"budget": budget}
    return {p: solve(p, g, **kwargs).value for p in TABLE_PARAMS}


def audit_graph(
    g: Graph, values: Optional[dict[ParameterId, Value]] = None
) -> list[Violation]:
    """All bound-table violations on g (empty on a bound-respecting graph)."""
    vals = values if values is not None else compute_all(g)
    table = bound_table()
    out = []
    for pr in TABLE_PARAMS:
        for pc in TABLE_PARAMS:
            if pr == pc:
                continue
            e = table[pr, pc]
            if e.kind == BoundKind.NO_BOUND:
                continue
            vr, vc = vals[pr], vals[pc]
            if not (vr.is_finite and vc.is_finite):
                continue
            if e.condition == Condition.EDGE and g.m == 0:
                continue
            if e.condition == Condition.NOT_K1 and g.n == 1:
                continue
            bound = e.bound_at(vc.opt)
            if Fraction(vr.opt) > bound:
                out.append(Violation(pr, pc, vr.opt, vc.opt, bound, "table"))
    if g.m == 0:
        for pr, pc, factor in EDGELESS_RULES:
            vr, vc = vals[pr], vals[pc]
            if vr.is_finite and vc.is_finite and Fraction(vr.opt) != factor * vc.opt:
                out.append(
                    Violation(pr, pc, vr.opt, vc.opt, factor * vc.opt, "edgeless")
                )
    return out


# -- sharpness assignments ----------------------------------------------

# (row, col) -> (family, bracketed).  Bracketed assignments witness the
# at-least-one-edge variant of the cell's bound.
_S: dict[tuple[int, int], tuple[FamilyId, bool]] = {}


def _assign(row: int, cols: dict[int, FamilyId], bracketed=()) -> None:
    for c, fam in cols.items():
        _S[(row, c)] = (fam, c in bracketed)


_assign(1, {2: F.KC4, 3: F.KC4, 4: F.KNSS, 5: F.KNSS, 6: F.KC4, 7: F.KNSS,
            8: F.KNSS, 9: F.KC4, 10: F.KC4, 11: F.KK2, 12: F.KC4,
            13: F.SSTARMINUS}, bracketed=(13,))
_assign(2, {1: F.KK2, 3: F.SKODD, 4: F.KK2, 5: F.KNSS, 6: F.SKODD,
            7: F.KK2, 8: F.KNSS, 9: F.KK2, 10: F.KK2, 11: F.KK2,
            12: F.KC4, 13: F.KK2})
_assign(3, {1: F.KK2, 2: F.KH, 4: F.KK2, 5: F.KH, 6: F.KK2, 7: F.KK2,
            8: F.KNSS, 9: F.KK2, 10: F.KK2, 11: F.KK2, 12: F.KK44,
            13: F.KK2})
_assign(4, {1: F.KK2, 2: F.KH, 3: F.FN4, 5: F.KNSS, 6: F.FN4, 7: F.KK2,
            8: F.KNSS, 9: F.FN4, 10: F.FN4, 11: F.KK2, 12: F.KK44,
            13: F.SSTARMINUS}, bracketed=(3, 6, 9, 10, 13))
_assign(5, {1: F.KK2, 2: F.KK2, 3: F.KK2, 4: F.KK2, 6: F.KK2, 7: F.KK2,
            8: F.KNSS, 9: F.KK2, 10: F.KK2, 11: F.KK2, 12: F.KC4,
            13: F.KK2})
_assign(6, {7: F.KK2, 8: F.KNSS, 10: F.KK2, 11: F.KK2, 12: F.KK44})
_assign(7, {6: F.FN4, 8: F.KNSS, 10: F.FN4, 11: F.KK2, 12: F.KK44})
_assign(8, {6: F.FN4, 7: F.FN3, 10: F.FN4, 11: F.FN3, 12: F.KC4})
_assign(9, {1: F.KK2, 2: F.KH, 3: F.KNSS, 4: F.KNSS, 5: F.KNSS,
            6: F.KNSS, 7: F.KNSS, 8: F.KNSS, 10: F.KK2, 11: F.KK2,
            12: F.KK44, 13: F.KK2})
_assign(10, {11: F.KK2, 12: F.KK44})
_assign(11, {10: F.KC4, 12: F.KC4})
_assign(13, {1: F.KK2, 2: F.KH, 3: F.SKN2, 4: F.KNSS, 5: F.KNSS,
             6: F.SKN2, 7: F.KNSS, 8: F.KNSS, 9: F.KC4, 10: F.KC4,
             11: F.KK2, 12: F.KK44})


@dataclass(frozen=True)
class SharpnessAssignment:
    entry: tuple[int, int]
    family: FamilyId
    bracketed: bool


def sharpness_assignments() -> list[SharpnessAssignment]:
    """One witnessing family per non-diagonal bound cell."""
    return [
        SharpnessAssignment(cell, fam, br)
        for cell, (fam, br) in sorted(_S.items())
    ]


@dataclass(frozen=True)
class SharpnessReport:
    entry: tuple[int, int]
    family: FamilyId
    size: int
    row_value: int
    col_value: int
    bound: Fraction
    passed: bool


def sharpness_check(
    s: SharpnessAssignment, size: Optional[int] = None
) -> SharpnessReport:
    """Assert row = a*col + b with equality on the family instance."""
    r, c = s.entry
    if size is None:
        size = MIN_SIZE[s.family]
    if size < MIN_SIZE[s.family]:
        raise SizeBelowThreshold(f"{s.family} needs size >= {MIN_SIZE[s.family]}")
    g = generate(s.family, size)
    pr, pc = PARAM_OF_ROW[r], PARAM_OF_ROW[c]
    vr = solve(pr, g).value
    vc = solve(pc, g).value
    e = bound_table()[pr, pc]
    bound = e.bound_at(vc.opt)
    return SharpnessReport(
        s.entry, s.family, size, vr.opt, vc.opt, bound,
        Fraction(vr.opt) == bound,
    )


# -- order structure -----------------------------------------------------


def hasse_and_classes():
    """Covering pairs of the pointwise order, plus the preorder classes.

    The classes are the strongly connected components of the directed
    graph with an edge row -> col whenever the table cell is a bound; the
    computed partition is asserted against the committed fixture and is
    linearly ordered bottom to top.
    """
    table = bound_table()
    params = list(TABLE_PARAMS)
    bounded_by = {
        p: {
            q
            for q in params
            if table[p, q].kind != BoundKind.NO_BOUND
        }
        for p in params
    }
    # reachability closure (edges already closed under transitivity here,
    # but close anyway for robustness)
    changed = True
    while changed:
        changed = False
        for p in params:
            for q in list(bounded_by[p]):
                extra = bounded_by[q] - bounded_by[p]
                if extra:
                    bounded_by[p] |= extra
                    changed = True
    classes = []
    seen = set()
    for p in params:
        if p in seen:
            continue
        cls = frozenset(
            q for q in params if q in bounded_by[p] and p in bounded_by[q]
        )
        seen |= cls
        classes.append(cls)
    # order classes bottom-up: a class is below another when its members
    # are bounded by the other's members
    classes.sort(key=lambda cls: -len(bounded_by[next(iter(cls))]))
    assert tuple(classes) == PREORDER_CLASSES, "preorder classes drifted"
    for lo, hi in zip(classes, classes[1:]):
        p, q = next(iter(lo)), next(iter(hi))
        assert q in bounded_by[p] and p not in bounded_by[q]
    return list(COVERING_PAIRS), classes
