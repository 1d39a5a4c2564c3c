"""The 13x13 table of pairwise upper bounds and the order structure.

Cell (r, c) bounds the row parameter by a linear function of the column
parameter, for every graph on which both are finite: row <= a*col + b.
Coefficients are exact rationals.  Cells marked NO_BOUND admit no such
function.  Conditions: ALL (every graph), EDGE (graphs with at least one
edge), NOT_K1 (every graph except the one-vertex graph).

For edgeless graphs the EDGE-conditioned cells are replaced by the sharp
equalities listed in EDGELESS_RULES.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .params import PARAM_OF_ROW, ROW_OF, TABLE_PARAMS, ParameterId

P = ParameterId


class Condition(str, enum.Enum):
    ALL = "all"
    EDGE = "at_least_one_edge"
    NOT_K1 = "not_k1"


class BoundKind(str, enum.Enum):
    EQUAL = "equal"
    LINEAR = "linear"
    NO_BOUND = "no_bound"


@dataclass(frozen=True)
class BoundEntry:
    row: ParameterId
    col: ParameterId
    kind: BoundKind
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    condition: Condition = Condition.ALL

    def bound_at(self, col_value: int) -> Fraction:
        if self.kind == BoundKind.EQUAL:
            return Fraction(col_value)
        return self.a * col_value + self.b


def _lin(a, b, cond=Condition.ALL):
    num, den = a if isinstance(a, tuple) else (a, 1)
    bn, bd = b if isinstance(b, tuple) else (b, 1)
    return (Fraction(num, den), Fraction(bn, bd), cond)


_E = Condition.EDGE
_K = Condition.NOT_K1

# row -> col -> (a, b, condition); missing = NO_BOUND, diagonal = EQUAL.
_RAW = {
    1: {
        2: _lin(1, 0), 3: _lin(1, 0), 4: _lin(1, -1), 5: _lin(1, -1),
        6: _lin(1, 0), 7: _lin(1, -1), 8: _lin(1, -1), 9: _lin(1, 0),
        10: _lin(1, 0), 11: _lin((1, 2), 0), 12: _lin((1, 2), 0),
        13: _lin(1, -1, _E),
    },
    2: {
        1: _lin(2, 0), 3: _lin((3, 2), (-1, 2)), 4: _lin(1, 0),
        5: _lin(1, -1), 6: _lin((3, 2), (-1, 2)), 7: _lin(1, 0),
        8: _lin(1, -1), 9: _lin(1, 0), 10: _lin(1, 0), 11: _lin(1, 0),
        12: _lin((1, 2), 0), 13: _lin(1, 0),
    },
    3: {
        1: _lin(2, 0), 2: _lin(2, 0), 4: _lin(1, 0), 5: _lin(1, 0),
        6: _lin(1, 0), 7: _lin(1, 0), 8: _lin(1, 0), 9: _lin(1, 0),
        10: _lin(1, 0), 11: _lin(1, 0), 12: _lin(1, 0), 13: _lin(1, 0),
    },
    4: {
        1: _lin(2, 0), 2: _lin(2, 0), 3: _lin(2, -1, _E), 5: _lin(1, 0),
        6: _lin(2, -1, _E), 7: _lin(1, 0), 8: _lin(1, 0),
        9: _lin(2, -1, _E), 10: _lin(2, -1, _E), 11: _lin(1, 0),
        12: _lin(1, 0), 13: _lin(2, -2, _E),
    },
    5: {
        1: _lin(4, 0), 2: _lin(2, 0), 3: _lin(2, 0), 4: _lin(2, 0),
        6: _lin(2, 0), 7: _lin(2, 0), 8: _lin(1, 0), 9: _lin(2, 0),
        10: _lin(2, 0), 11: _lin(2, 0), 12: _lin(1, 0), 13: _lin(2, 0),
    },
    6: {
        7: _lin(1, 0), 8: _lin(1, 0), 10: _lin(1, 0), 11: _lin(1, 0),
        12: _lin(1, 0),
    },
    7: {
        6: _lin(2, -1), 8: _lin(1, 0), 10: _lin(2, -1), 11: _lin(1, 0),
        12: _lin(1, 0),
    },
    8: {
        6: _lin(3, -2), 7: _lin(2, -1), 10: _lin(3, -2), 11: _lin(2, -1),
        12: _lin(1, 0),
    },
    9: {
        1: _lin(2, 0), 2: _lin(2, 0), 3: _lin(2, -2, _K), 4: _lin(2, -2),
        5: _lin(2, -2), 6: _lin(2, -2, _K), 7: _lin(2, -2), 8: _lin(2, -2),
        10: _lin(1, 0), 11: _lin(1, 0), 12: _lin(1, 0), 13: _lin(1, 0),
    },
    10: {11: _lin(1, 0), 12: _lin(1, 0)},
    11: {10: _lin(2, 0), 12: _lin(1, 0)},
    12: {},
    13: {
        1: _lin(2, 0), 2: _lin(2, 0), 3: _lin(2, -1), 4: _lin(2, -2),
        5: _lin(2, -2), 6: _lin(2, -1), 7: _lin(2, -2), 8: _lin(2, -2),
        9: _lin((3, 2), 0), 10: _lin((3, 2), 0), 11: _lin(1, 0),
        12: _lin(1, 0),
    },
}


def bound_table() -> dict[tuple[ParameterId, ParameterId], BoundEntry]:
    """The full 13x13 matrix of bound entries."""
    table = {}
    for r in range(1, 14):
        for c in range(1, 14):
            pr, pc = PARAM_OF_ROW[r], PARAM_OF_ROW[c]
            if r == c:
                table[pr, pc] = BoundEntry(pr, pc, BoundKind.EQUAL)
            elif c in _RAW[r]:
                a, b, cond = _RAW[r][c]
                table[pr, pc] = BoundEntry(
                    pr, pc, BoundKind.LINEAR, a, b, cond
                )
            else:
                table[pr, pc] = BoundEntry(pr, pc, BoundKind.NO_BOUND)
    return table


def entry(row: ParameterId, col: ParameterId) -> BoundEntry:
    return bound_table()[row, col]


#: Sharp replacements for the EDGE-conditioned cells on edgeless graphs:
#: each (row, col, factor) states row = factor * col when m = 0.
EDGELESS_RULES = (
    (P.GAMMA, P.GAMMA_R, Fraction(1)),
    (P.GAMMA_SET2, P.GAMMA_W2, Fraction(2)),
    (P.GAMMA_SET2, P.GAMMA_2, Fraction(2)),
    (P.GAMMA_SET2, P.RGAMMA_W2, Fraction(2)),
    (P.GAMMA_SET2, P.RGAMMA_2, Fraction(2)),
    (P.GAMMA_SET2, P.GAMMA_R, Fraction(2)),
)


#: Covering pairs (r below c) of the pointwise order among the 13 table
#: parameters; the full order is the reflexive-transitive closure.
COVERING_PAIRS = (
    (P.GAMMA, P.GAMMA_T),
    (P.GAMMA, P.GAMMA_W2),
    (P.GAMMA_T, P.GAMMA_SET2),
    (P.GAMMA_T, P.RGAMMA_W2),
    (P.GAMMA_W2, P.GAMMA_SET2),
    (P.GAMMA_W2, P.GAMMA_2),
    (P.GAMMA_W2, P.RGAMMA_W2),
    (P.GAMMA_SET2, P.GAMMA_TSET2),
    (P.GAMMA_SET2, P.GAMMA_X2),
    (P.GAMMA_TSET2, P.GAMMA_TX2),
    (P.GAMMA_2, P.GAMMA_X2),
    (P.GAMMA_2, P.RGAMMA_2),
    (P.GAMMA_X2, P.GAMMA_TX2),
    (P.GAMMA_X2, P.RGAMMA_X2),
    (P.GAMMA_TX2, P.RGAMMA_TX2),
    (P.RGAMMA_W2, P.RGAMMA_2),
    (P.RGAMMA_W2, P.GAMMA_R),
    (P.RGAMMA_2, P.RGAMMA_X2),
    (P.RGAMMA_X2, P.RGAMMA_TX2),
    (P.GAMMA_R, P.RGAMMA_X2),
)


def leq_closure() -> set[tuple[ParameterId, ParameterId]]:
    """Reflexive-transitive closure of the covering pairs."""
    rel = {(p, p) for p in TABLE_PARAMS}
    rel.update(COVERING_PAIRS)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


#: The four equivalence classes of the mutual-boundedness preorder,
#: bottom to top (committed fixture; also recomputed from the table).
PREORDER_CLASSES = (
    frozenset(
        {
            P.GAMMA,
            P.GAMMA_T,
            P.GAMMA_W2,
            P.GAMMA_SET2,
            P.GAMMA_TSET2,
            P.RGAMMA_W2,
            P.GAMMA_R,
        }
    ),
    frozenset({P.GAMMA_2, P.GAMMA_X2, P.GAMMA_TX2}),
    frozenset({P.RGAMMA_2, P.RGAMMA_X2}),
    frozenset({P.RGAMMA_TX2}),
)


def table_to_jsonable() -> list[dict]:
    """Stable serialization used by the committed checksum fixture."""
    rows = []
    for r in range(1, 14):
        for c in range(1, 14):
            e = bound_table()[PARAM_OF_ROW[r], PARAM_OF_ROW[c]]
            rows.append(
                {
                    "row": r,
                    "col": c,
                    "kind": e.kind.value,
                    "a": None if e.a is None else [e.a.numerator, e.a.denominator],
                    "b": None if e.b is None else [e.b.numerator, e.b.denominator],
                    "condition": e.condition.value,
                }
            )
    return rows


ROW = ROW_OF  # re-export for callers indexing by number
