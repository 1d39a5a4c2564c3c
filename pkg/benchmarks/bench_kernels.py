#!/usr/bin/env python3
"""Benchmark the compiled branch-and-bound kernel against the pure-Python
fallback on a fixed instance set.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time
from itertools import combinations

import dominion._pykernel as pykernel
from dominion.exact import _greedy_ub, _vertex_csp
from dominion.families import FamilyId as F, generate
from dominion.graph import multigraph, subdivide
from dominion.params import ParameterId as P

try:
    import dominion._core as core
except ImportError:
    core = None


def instances():
    sk5 = subdivide(multigraph(5, list(combinations(range(5), 2))))
    yield "gamma_t on subdivided K5 (15 v)", P.GAMMA_T, sk5
    yield "gamma_w2 on subdivided K7 (28 v)", P.GAMMA_W2, subdivide(
        multigraph(7, list(combinations(range(7), 2)))
    )
    yield "rgamma_w2 on knss(4) (16 v)", P.RGAMMA_W2, generate(F.KNSS, 4)
    yield "rgamma_tx2 on tn(4) (16 v)", P.RGAMMA_TX2, generate(F.TN, 4)
    yield "gamma_tset2 on sk3n(4) (15 v)", P.GAMMA_TSET2, generate(F.SK3N, 4)
    yield "gamma_R on fn4(5) (16 v)", P.GAMMA_R, generate(F.FN4, 5)


def run(kernel, csp, init_best):
    t0 = time.perf_counter()
    status, w, vals, nodes = kernel.solve_csp(
        csp.n_items,
        list(csp.val_weights),
        list(csp.val_masks),
        list(csp.kinds),
        list(csp.thresh),
        list(csp.exempt),
        list(csp.scope_ptr),
        list(csp.scope_items),
        init_best,
        10 ** 9,
    )
    return time.perf_counter() - t0, w, nodes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    header = f"{'instance':42s} {'opt':>4s} {'nodes':>9s} {'python':>9s}"
    if core is not None:
        header += f" {'cython':>9s} {'speedup':>8s}"
    print(header)
    for name, p, g in instances():
        csp = _vertex_csp(p, g)
        ub = _greedy_ub(csp)
        init = (
            csp.n_items * max(csp.val_weights) + 1 if ub is None else ub + 1
        )
        tp = min(
            run(pykernel, csp, init)[0] for _ in range(args.repeat)
        )
        _, w, nodes = run(pykernel, csp, init)
        line = f"{name:42s} {str(w):>4s} {nodes:>9d} {tp:>8.3f}s"
        if core is not None:
            tc = min(run(core, csp, init)[0] for _ in range(args.repeat))
            _, wc, nodes_c = run(core, csp, init)
            assert wc == w and nodes_c == nodes, "kernels disagree"
            line += f" {tc:>8.3f}s {tp / tc:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
