"""Graph domination invariants toolkit.

Exact solvers for thirteen domination-style invariants (plus edge/vertex
covers and disjoint domination), constructive witness transforms between
them, the full pairwise bound table with an audit engine, sharpness family
generators, greedy approximation algorithms and split-graph hardness
gadgets.
"""

from .exact import KERNEL, Solution, Value, solve, solve_cover, solve_disjoint
from .graph import (
    Graph,
    MultiGraph,
    build,
    closed_neighborhood,
    disjoint_union,
    is_split,
    multigraph,
    read_graph,
    subdivide,
    write_graph,
)
from .params import (
    EdgeWeighting,
    IntWeighting,
    ParameterId,
    RainbowLabeling,
    defined_on,
    is_cover_feasible,
    is_feasible,
    witness_weight,
)

__all__ = [
    "KERNEL",
    "Graph",
    "MultiGraph",
    "ParameterId",
    "Solution",
    "Value",
    "IntWeighting",
    "RainbowLabeling",
    "EdgeWeighting",
    "build",
    "multigraph",
    "closed_neighborhood",
    "subdivide",
    "disjoint_union",
    "is_split",
    "read_graph",
    "write_graph",
    "solve",
    "solve_cover",
    "solve_disjoint",
    "is_feasible",
    "is_cover_feasible",
    "defined_on",
    "witness_weight",
]

__version__ = "0.1.0"
