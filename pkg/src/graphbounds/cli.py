"""Command-line front end.

Exit codes: 0 when every verdict holds, 2 on a violated verdict or failed
verification, 1 on input errors.  Numbers in the machine-readable block are
printed with 12 digits after the decimal point.
"""

from __future__ import annotations

import argparse
import math
import numbers
import os
import sys

from . import graph as gmod
from . import selftest
from .bounds import dirichlet_pair, neumann_bound
from .graph import GraphError, SubsetSpec
from .lazy import (DIRECT, GENERATORS, INVERSE, comb_nearest_center, comb_window,
                   extract_window, truncation_study)
from .metric import DistanceOracle
from .optimality import minimize_lambda1
from .resistance import ResistanceOracle, refined_neumann_bound
from .spectral import lambda_dirichlet
from .voronoi import build_voronoi, cell_radius_bound, cellwise_constants, verify_voronoi

OK, INPUT_ERROR, VIOLATION = 0, 1, 2


def fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, numbers.Integral):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.12f}"


class Out:
    def __init__(self, stream):
        self.stream = stream

    def line(self, *parts):
        print("\t".join(str(p) for p in parts), file=self.stream)

    def kv(self, key, value):
        print(f"{key} {value if isinstance(value, str) else fmt(value)}", file=self.stream)

    def section(self, name):
        print(f"\n[{name}]", file=self.stream)


def _header(out, argv, instance):
    g, d = instance
    out.kv("command", " ".join(argv))
    out.kv("vertices", g.n)
    out.kv("edges", len(g.edges))
    out.kv("dirichlet", len(d))
    out.kv("sha256", gmod.digest(g, d))


def _load(path):
    inst = gmod.load(path)
    gmod.require_valid(inst.graph)
    return inst


def _report(out, rep):
    out.section(rep.theorem)
    out.kv("theorem", rep.theorem)
    for k, v in rep.inputs.items():
        out.kv(k, v)
    out.kv("bound", rep.bound)
    out.kv(rep.eigenvalue_name, rep.eigenvalue)
    out.kv("ratio", rep.ratio)
    for note in rep.notes:
        out.kv("note", note)
    out.kv("verdict", rep.verdict)


def _table(out, reports):
    out.section("summary")
    out.line(f"{'theorem':<28}{'bound':>18}{'eigenvalue':>18}{'ratio':>12}  verdict")
    for r in reports:
        out.line(f"{r.theorem:<28}{r.bound:>18.10g}{r.eigenvalue:>18.10g}{r.ratio:>12.6g}  {r.verdict}")


def cmd_check_neumann(args, out):
    inst = _load(args.graph)
    _header(out, args.argv, inst)
    reps = [neumann_bound(inst.graph), refined_neumann_bound(inst.graph)]
    for r in reps:
        _report(out, r)
    _table(out, reps)
    return OK if all(r.holds for r in reps) else VIOLATION


def cmd_check_dirichlet(args, out):
    inst = _load(args.graph)
    if not inst.dirichlet:
        raise GraphError("empty Dirichlet set")
    _header(out, args.argv, inst)
    reps = dirichlet_pair(inst.graph, SubsetSpec.from_dirichlet(inst.graph, inst.dirichlet))
    for r in reps:
        _report(out, r)
    _table(out, reps)
    return OK if all(r.holds for r in reps) else VIOLATION


def cmd_voronoi(args, out):
    inst = _load(args.graph)
    g = inst.graph
    if not inst.dirichlet:
        raise GraphError("empty Dirichlet set")
    _header(out, args.argv, inst)
    dec = build_voronoi(g, inst.dirichlet)
    ver = verify_voronoi(g, dec)
    out.section("verification")
    for name, chk in (("V1", ver.v1), ("V2", ver.v2), ("V3", ver.v3)):
        out.kv(name, "pass" if chk.ok else f"fail {chk.detail}")
    out.section("assignment")
    out.line("vertex", "center", "distance")
    for x in g.vertices:
        out.line(gmod.format_vertex(x), gmod.format_vertex(dec.assignment[x]),
                 fmt(dec.distance[x]))
    subset = SubsetSpec.from_dirichlet(g, inst.dirichlet)
    oracle = DistanceOracle(g)
    radii = cell_radius_bound(g, dec, subset, oracle)
    out.section("cell-radii")
    out.kv("inradius", radii.inradius)
    out.line("center", "max_distance")
    for p, r in radii.radii.items():
        out.line(gmod.format_vertex(p), fmt(r))
    out.kv("within_inradius", radii.ok)
    consts = cellwise_constants(g, dec)
    out.section("cell-constants")
    out.line("center", "size", "radius", "volume", "constant", "eigenvalue")
    for c in consts:
        out.line(gmod.format_vertex(c.center), c.size, fmt(c.radius), fmt(c.volume),
                 fmt(c.constant), fmt(c.eigenvalue))
    inf_c = min(c.constant for c in consts)
    out.kv("inf_constant", inf_c)
    summation_ok = True
    if subset.omega:
        lam = lambda_dirichlet(g, subset).eigenvalue
        summation_ok = inf_c <= lam + 1e-9 * max(1.0, lam)
        out.kv("lambda0_D", lam)
        out.kv("summation", "holds" if summation_ok else "violated")
    return OK if ver.ok and radii.ok and summation_ok else VIOLATION


def cmd_resistance(args, out):
    inst = _load(args.graph)
    g = inst.graph
    _header(out, args.argv, inst)
    oracle = ResistanceOracle(g)
    out.section("resistance")
    out.line("x", "y", "r")
    if args.pairs == "all":
        verts = g.vertices
        pairs = [(verts[a], verts[b]) for a in range(g.n) for b in range(a + 1, g.n)]
    else:
        try:
            x, y = args.pairs.split(",")
        except ValueError:
            raise GraphError("--pairs expects 'all' or 'x,y'") from None
        pairs = [(x, y)]
    for x, y in pairs:
        out.line(gmod.format_vertex(x), gmod.format_vertex(y), fmt(oracle.resistance(x, y)))
    if args.diam:
        out.section("diameter")
        out.kv("diameter_r", oracle.diameter_r())
    return OK


def _seed(args):
    env = os.environ.get("GB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise GraphError(f"GB_SEED is not an integer: {env!r}") from None
    return args.seed


def cmd_optimize(args, out):
    inst = _load(args.graph)
    g = inst.graph
    _header(out, args.argv, inst)
    seed = _seed(args)
    res = minimize_lambda1(g, max_iters=args.iters, tol=args.tol, seed=seed)
    out.kv("seed", seed)
    out.section("trace")
    out.line("iter", "lambda1", "gap_to_target")
    for row in res.trace:
        out.line(row.iteration, fmt(row.lambda1), fmt(row.gap_to_target))
    out.section("result")
    out.kv("target", res.target)
    out.kv("lambda1", res.lambda1)
    out.kv("final_gap", res.relative_gap)
    out.kv("stop", res.reason)
    out.section("measure")
    for x, mx in zip(g.vertices, res.measure):
        out.line(gmod.format_vertex(x), fmt(mx))
    below = any(r.lambda1 < res.target - 1e-9 for r in res.trace)
    return VIOLATION if below else OK


def _params(items):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise GraphError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _radii(text):
    try:
        return [float(r) for r in text.split(",") if r.strip()]
    except ValueError:
        raise GraphError(f"bad --radii {text!r}") from None


def cmd_lazy(args, out):
    if args.generator not in GENERATORS:
        raise GraphError(f"unknown generator {args.generator!r}; "
                         f"choose from {', '.join(sorted(GENERATORS))}")
    params = _params(args.param)
    radii = _radii(args.radii)
    out.kv("command", " ".join(args.argv))
    if args.generator == "comb":
        return _lazy_comb(args, out, params, radii)
    cap = int(params.pop("vertex_cap", 10**6))
    kwargs = {}
    if "period" in params:
        kwargs["period"] = int(params.pop("period"))
    if args.generator == "tree":
        kwargs["k"] = int(params.pop("k", 3))
    if params:
        raise GraphError(f"unknown parameters: {', '.join(sorted(params))}")
    gen = GENERATORS[args.generator](**kwargs)
    study = truncation_study(gen, radii, cap)
    out.section(f"truncation {study.generator}")
    out.kv("values", "window")
    out.line("radius", "vertices", "edges", "lambda0_D", "inradius", "vol_sharp", "bound",
             "verdict", "boundary_affected", "interior_inradius")
    for r in study.rows:
        out.line(fmt(r.radius), r.vertices, r.edges, fmt(r.lambda0), fmt(r.inradius),
                 fmt(r.vol_sharp), fmt(r.bound), r.verdict if not r.error else f"error {r.error}",
                 r.boundary_affected, fmt(r.interior_inradius))
    if args.dump_window and radii:
        win = extract_window(gen, radii[-1], cap)
        gmod.dump(win.graph, args.dump_window, win.dirichlet)
    if any(r.error for r in study.rows):
        return INPUT_ERROR
    return OK if study.all_hold else VIOLATION


def _lazy_comb(args, out, params, sizes):
    conv = params.pop("convention", "both")
    if params:
        raise GraphError(f"unknown parameters: {', '.join(sorted(params))}")
    convs = [INVERSE, DIRECT] if conv == "both" else [conv]
    sizes = [int(s) for s in sizes]
    for c in convs:
        out.section(f"comb nearest center ({c} lengths)")
        out.line("n_max", "nearest", "distance", "at_truncation_edge")
        for row in comb_nearest_center(sizes, c):
            out.line(row.n_max, gmod.format_vertex(row.nearest), fmt(row.distance),
                     fmt(row.at_truncation_edge))
    if args.dump_window and sizes:
        g = comb_window(sizes[-1], convs[0])
        gmod.dump(g, args.dump_window, [v for v in g.vertices if v != (1, 1)])
    return OK


def cmd_selftest(args, out):
    failures = selftest.run(out.stream)
    out.kv("failures", failures)
    return OK if failures == 0 else VIOLATION


def build_parser():
    p = argparse.ArgumentParser(prog="graphbounds",
                                description="Eigenvalue lower bounds for weighted graph Laplacians.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-neumann", help="diameter and resistance Neumann bounds")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check_neumann)

    s = sub.add_parser("check-dirichlet", help="inradius Dirichlet bounds, D from 'd' lines")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check_dirichlet)

    s = sub.add_parser("voronoi", help="Voronoi decomposition with centers from 'd' lines")
    s.add_argument("graph")
    s.set_defaults(func=cmd_voronoi)

    s = sub.add_parser("resistance", help="effective resistance table")
    s.add_argument("graph")
    s.add_argument("--pairs", default="all", help="'all' or 'x,y'")
    s.add_argument("--diam", action="store_true", help="print diam_r")
    s.set_defaults(func=cmd_resistance)

    s = sub.add_parser("optimize-measure", help="minimize lambda1 over probability measures")
    s.add_argument("graph")
    s.add_argument("--iters", type=int, default=2000)
    s.add_argument("--tol", type=float, default=1e-3)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_optimize)

    s = sub.add_parser("lazy", help="truncation study on an implicit graph",
                       description="Generators: line, lattice, tree (param k) with param "
                                   "period for the Dirichlet set; comb (param convention="
                                   "inverse|direct|both), for which --radii are truncation sizes.")
    s.add_argument("generator")
    s.add_argument("--param", action="append", metavar="K=V")
    s.add_argument("--radii", required=True)
    s.add_argument("--dump-window", metavar="FILE")
    s.set_defaults(func=cmd_lazy)

    s = sub.add_parser("selftest", help="run the embedded desk examples")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, stdout=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    args.argv = argv
    try:
        return args.func(args, Out(stdout))
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
