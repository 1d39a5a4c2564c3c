"""Command-line front end: the ``dominion`` tool.

Subcommands: compute, approx, transform, generate, audit, sharpness,
reduce, covers, identities.  All numeric output is exact (rationals are
rendered as strings); exit code 0 on success, 1 on domain errors, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import approx as approx_mod
from . import audit as audit_mod
from . import exact, families, reductions, transforms
from .errors import DominionError
from .graph import read_graph_file, write_graph_file
from .params import (
    ParameterId,
    witness_from_json,
    witness_to_json,
)

P = ParameterId


def _frac(x) -> object:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _value_json(v: exact.Value):
    return v.opt if v.is_finite else "infinity"


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_compute(args) -> int:
    g = read_graph_file(args.graph)
    p = ParameterId(args.param)
    kwargs = {"budget": args.budget} if args.budget else {}
    sol = exact.solve(p, g, **kwargs)
    out = {"value": _value_json(sol.value)}
    if args.witness and sol.witness is not None:
        out["witness"] = witness_to_json(p, sol.witness)
    _emit(out)
    return 0


def cmd_approx(args) -> int:
    g = read_graph_file(args.graph)
    p = ParameterId(args.param)
    res = approx_mod.approximate(p, g)
    _emit(
        {
            "witness": witness_to_json(p, res.witness),
            "weight": res.weight,
            "ratio_bound": res.ratio_bound,
        }
    )
    return 0


def cmd_transform(args) -> int:
    g = read_graph_file(args.graph)
    r, c = (int(x) for x in args.entry.split(","))
    with open(args.witness, "r", encoding="utf-8") as fh:
        _, src = witness_from_json(fh.read())
    rep = transforms.verify_guarantee((r, c), g, src)
    out_param = transforms._param_of(r)
    _emit(
        {
            "witness": witness_to_json(out_param, transforms.apply((r, c), g, src)),
            "report": {
                "entry": list(rep.entry),
                "source_weight": rep.source_weight,
                "target_weight": rep.target_weight,
                "bound": _frac(rep.bound),
                "passed": rep.passed,
            },
        }
    )
    return 0


def cmd_generate(args) -> int:
    g = families.generate(families.FamilyId(args.family), args.size)
    write_graph_file(g, args.out)
    _emit({"family": args.family, "size": args.size, "n": g.n, "m": g.m})
    return 0


def cmd_audit(args) -> int:
    g = read_graph_file(args.graph)
    violations = audit_mod.audit_graph(g)
    _emit(
        {
            "violations": [
                {
                    "row": v.row.value,
                    "col": v.col.value,
                    "row_value": v.row_value,
                    "col_value": v.col_value,
                    "bound": _frac(v.bound),
                    "kind": v.kind,
                }
                for v in violations
            ]
        }
    )
    return 0


def cmd_sharpness(args) -> int:
    rows = []
    for s in audit_mod.sharpness_assignments():
        size = args.size
        if size is not None:
            size = max(
                families.MIN_SIZE[s.family],
                min(size, families.MAX_DESK_SIZE.get(s.family, size)),
            )
        rep = audit_mod.sharpness_check(s, size)
        rows.append(
            {
                "row": rep.entry[0],
                "col": rep.entry[1],
                "family": rep.family.value,
                "size": rep.size,
                "row_value": rep.row_value,
                "col_value": rep.col_value,
                "bound": _frac(rep.bound),
                "passed": rep.passed,
            }
        )
    if args.format == "csv":
        cols = ["row", "col", "family", "size", "row_value", "col_value",
                "bound", "passed"]
        print(",".join(cols))
        for r in rows:
            print(",".join(str(r[c]) for c in cols))
    else:
        _emit({"sharpness": rows, "all_passed": all(r["passed"] for r in rows)})
    return 0


def cmd_reduce(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    if args.kind == "setcover":
        inst = reductions.set_cover_instance(spec["ground"], spec["sets"])
        gadget = reductions.set_cover_to_split(inst)
    else:
        h = reductions.hypergraph(spec["ground"], spec["sets"])
        gadget = reductions.hypergraph_to_split(h)
    write_graph_file(gadget.graph, args.out)
    _emit({"n": gadget.graph.n, "m": gadget.graph.m})
    return 0


def cmd_covers(args) -> int:
    g = read_graph_file(args.graph)
    rho = exact.solve_cover(P.RHO, g)
    rho2 = exact.solve_cover(P.RHO_2, g)
    tau2 = exact.solve_cover(P.TAU_2, g)
    _emit(
        {
            "rho": _value_json(rho.value),
            "rho_2": _value_json(rho2.value),
            "tau_2": _value_json(tau2.value),
            "gallai": {
                "rho_2_plus_tau_2": rho2.value.opt + tau2.value.opt,
                "two_n": 2 * g.n,
                "pass": rho2.value.opt + tau2.value.opt == 2 * g.n,
            },
        }
    )
    return 0


def cmd_identities(args) -> int:
    g = read_graph_file(args.graph)
    report = {}
    rx2 = exact.solve(P.RGAMMA_X2, g).value
    gg = exact.solve_disjoint(P.GAMMA_GAMMA, g).value
    report["rainbow_double_vs_disjoint"] = {
        "rgamma_x2": _value_json(rx2),
        "gammagamma": _value_json(gg),
        "pass": rx2 == gg,
    }
    rtx2 = exact.solve(P.RGAMMA_TX2, g).value
    tgg = exact.solve_disjoint(P.GAMMA_T_GAMMA_T, g).value
    report["rainbow_total_double_vs_disjoint"] = {
        "rgamma_tx2": _value_json(rtx2),
        "gamma_t_gamma_t": _value_json(tgg),
        "pass": rtx2 == tgg,
    }
    gamma = exact.solve(P.GAMMA, g).value
    gamma_t = exact.solve(P.GAMMA_T, g).value
    report["rainbow_set2_doubling"] = {
        "two_gamma": 2 * gamma.opt if gamma.is_finite else "infinity",
        "two_gamma_t": (
            2 * gamma_t.opt if gamma_t.is_finite else "infinity"
        ),
    }
    if g.n == 0 or g.min_degree() >= 1:
        rho2 = exact.solve_cover(P.RHO_2, g).value
        tau2 = exact.solve_cover(P.TAU_2, g).value
        report["gallai"] = {
            "rho_2": _value_json(rho2),
            "tau_2": _value_json(tau2),
            "pass": rho2.opt + tau2.opt == 2 * g.n,
        }
    _emit(report)
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dominion",
        description="Graph domination invariants: exact values, bounds, "
        "transforms, approximations and hardness gadgets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact value of a parameter")
    c.add_argument("--param", required=True,
                   choices=[p.value for p in ParameterId])
    c.add_argument("--graph", required=True)
    c.add_argument("--witness", action="store_true")
    c.add_argument("--budget", type=int, default=None)
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("approx", help="greedy approximation")
    c.add_argument("--param", required=True)
    c.add_argument("--graph", required=True)
    c.set_defaults(func=cmd_approx)

    c = sub.add_parser("transform", help="apply a bound-table transform")
    c.add_argument("--entry", required=True, metavar="r,c")
    c.add_argument("--graph", required=True)
    c.add_argument("--witness", required=True, help="witness JSON file")
    c.set_defaults(func=cmd_transform)

    c = sub.add_parser("generate", help="emit a family instance")
    c.add_argument("--family", required=True,
                   choices=[f.value for f in families.FamilyId])
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_generate)

    c = sub.add_parser("audit", help="check all table bounds on a graph")
    c.add_argument("--graph", required=True)
    c.set_defaults(func=cmd_audit)

    c = sub.add_parser("sharpness", help="verify bound sharpness")
    c.add_argument("--all", action="store_true")
    c.add_argument("--size", type=int, default=None)
    c.add_argument("--max-size", type=int, default=None, dest="size")
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.set_defaults(func=cmd_sharpness)

    c = sub.add_parser("reduce", help="build a hardness gadget")
    c.add_argument("--kind", required=True, choices=["setcover", "hyp2col"])
    c.add_argument("--in", required=True, dest="infile")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("covers", help="edge/vertex cover numbers + identity")
    c.add_argument("--graph", required=True)
    c.set_defaults(func=cmd_covers)

    c = sub.add_parser("identities", help="cross-check the exact identities")
    c.add_argument("--graph", required=True)
    c.set_defaults(func=cmd_identities)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except DominionError as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"})
        return 1


if __name__ == "__main__":
    sys.exit(main())
