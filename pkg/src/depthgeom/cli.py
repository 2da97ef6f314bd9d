"""Command-line surface.

Subcommands: tukey, simplicial, centerpoint, projdepth,
partition --method {planar,samestype}, certify, helly --beta,
kirchberger --beta, gen, plot.  Instances come from --points / --family /
--red + --blue, the query from --query "x,y".  Reports are JSON on stdout
(deterministic with --no-timing); --svg renders a figure.

Exit codes: 0 success, 2 parse error, 3 precondition/degeneracy, 4 budget
exceeded, 5 internal-consistency failure (a guarantee that must hold failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .core import Point, PointSet
from .depth import centerpoint, simplicial_depth, tukey_depth
from .errors import DepthGeomError, ParseError
from .hellykirch import ConvexBody, Family, helly_witness, kirchberger_witness
from .instances import (
    gen_random,
    parse_pointset,
    parse_query,
    rational_str,
    write_pointset,
)
from .partition import certify_partition, partition_planar, partition_same_type
from .projection import projection_depth
from .report import (
    build_report,
    coords_json,
    dump_report,
    halfspace_json,
    hyperplane_json,
    instance_json,
    instance_pointset,
)
from .svg import render_svg


def _load_points(args, need_query: bool):
    X, meta = parse_pointset(args.points, args.format)
    for w in meta["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    q = meta.get("query")
    if getattr(args, "query", None):
        q = parse_query(args.query)
    if need_query and q is None:
        raise ParseError("this operation needs --query (or a query in the JSON file)")
    return X, q


def _load_family(path) -> Family:
    names = sorted(
        f for f in os.listdir(path) if f.endswith(".csv") or f.endswith(".json")
    )
    if not names:
        raise ParseError(f"no body files in {path!r}")
    bodies = []
    for name in names:
        X, _ = parse_pointset(os.path.join(path, name))
        bodies.append(ConvexBody(X, id=os.path.splitext(name)[0]))
    return Family(tuple(bodies))


def _guarantee_json(g: dict) -> dict:
    out = {}
    for k, v in g.items():
        if isinstance(v, Fraction):
            out[k] = rational_str(v)
        elif isinstance(v, tuple) and k == "bisect":
            out[k] = [[rational_str(c) for c in v[0]], rational_str(v[1])]
        elif isinstance(v, tuple):
            out[k] = list(v)
        elif isinstance(v, dict):
            out[k] = {kk: bool(vv) if isinstance(vv, bool) else vv for kk, vv in v.items()}
        else:
            out[k] = v
    return out


def _cert_json(cert) -> dict:
    if cert is None:
        return {"status": "not-applicable", "ok": None, "mode": None, "checked": None}
    status = ("verified" if cert.ok else "failed") if cert.mode == "exhaustive" else "sampled"
    return {"status": status, "ok": cert.ok, "mode": cert.mode, "checked": cert.checked}


def _run_tukey(args):
    X, q = _load_points(args, need_query=True)
    rep = tukey_depth(X, q)
    outputs = {
        "raw": rep.raw,
        "normalized": rational_str(rep.normalized),
        "witness_halfspace": halfspace_json(rep.witness),
    }
    return "tukey", instance_json(X, q), outputs, {}, None


def _run_simplicial(args):
    X, q = _load_points(args, need_query=True)
    rep = simplicial_depth(X, q)
    outputs = {
        "raw": rep.raw,
        "normalized": rational_str(rep.normalized),
        "witness_tuple": list(rep.witness) if rep.witness else None,
        "degenerate": rep.degenerate,
        "boundary_count": rep.boundary_count,
    }
    return "simplicial", instance_json(X, q), outputs, {}, None


def _run_centerpoint(args):
    X, _ = _load_points(args, need_query=False)
    pt, rep = centerpoint(X)
    outputs = {
        "point": coords_json(pt),
        "raw": rep.raw,
        "normalized": rational_str(rep.normalized),
        "witness_halfspace": halfspace_json(rep.witness),
    }
    return "centerpoint", instance_json(X), outputs, {}, None


def _run_projdepth(args):
    X, q = _load_points(args, need_query=True)
    rep = projection_depth(X, q)
    outputs = {
        "value": rational_str(rep.value),
        "witness_line_direction": (
            [rational_str(c) for c in rep.witness_line] if rep.witness_line else None
        ),
        "witness_pi": hyperplane_json(rep.witness_pi) if rep.witness_pi else None,
    }
    return "projdepth", instance_json(X, q), outputs, {}, None


def _run_partition(args):
    X, q = _load_points(args, need_query=True)
    fn = partition_planar if args.method == "planar" else partition_same_type
    part = fn(X, q)
    cert = certify_partition(part)
    outputs = {
        "method": part.guarantee["method"],
        "parts": [list(idx) for idx in part.part_indices],
        "sizes": list(part.guarantee["sizes"]),
        "product": part.guarantee["product"],
        "sigma_raw": part.guarantee.get("sigma_raw"),
        "bound": (
            rational_str(part.guarantee["bound"])
            if part.guarantee.get("bound") is not None
            else None
        ),
        "guarantee": _guarantee_json(part.guarantee),
    }
    return (
        "partition",
        instance_json(X, q),
        outputs,
        {"method": args.method},
        cert,
    )


def _run_helly(args):
    fam = _load_family(args.family)
    w = helly_witness(fam, Fraction(args.beta))
    outputs = {
        "kind": w.kind,
        "q_star": coords_json(w.q_star),
        "f_value": rational_str(w.f_value),
        "subfamily": list(w.subfamily) if w.subfamily else None,
        "common_point": coords_json(w.common_point) if w.common_point else None,
        "color_classes": [list(c) for c in w.color_classes] if w.color_classes else None,
        "verified_empty": w.verified_empty,
    }
    cert = w.partition.certification if w.partition is not None else None
    return (
        "helly",
        instance_json(family=fam),
        outputs,
        {"beta": str(Fraction(args.beta))},
        cert,
    )


def _run_kirchberger(args):
    R, _ = parse_pointset(args.red)
    B, _ = parse_pointset(args.blue)
    res = kirchberger_witness(R, B, Fraction(args.beta))
    if res is None:
        outputs = {"witness": False}
    else:
        Rp, Bp, sep, idx = res
        outputs = {
            "witness": True,
            "red_indices": list(idx[0]),
            "blue_indices": list(idx[1]),
            "size": Rp.n + Bp.n,
            "separator": hyperplane_json(sep),
        }
    return (
        "kirchberger",
        instance_json(red=R, blue=B),
        outputs,
        {"beta": str(Fraction(args.beta))},
        None,
    )


def _run_gen(args):
    X, meta = gen_random(args.n, args.dim, args.dist, args.seed)
    if args.out:
        write_pointset(X, args.out, args.format)
    outputs = {
        "points": [coords_json(p) for p in X.points],
        "multiplicity": list(X.multiplicity),
        "resamples": meta["resamples"],
    }
    return (
        "gen",
        {"dim": args.dim},
        outputs,
        {"n": args.n, "dim": args.dim, "dist": args.dist},
        None,
    )


def _run_certify(args):
    with open(args.report, "r", encoding="utf-8") as fh:
        rep = json.load(fh)
    op = rep.get("operation")
    inst = rep.get("instance", {})
    outputs = rep.get("outputs", {})
    X, q = instance_pointset(inst)
    ok = True
    detail = {}
    if op == "tukey":
        got = tukey_depth(X, q)
        ok = got.raw == outputs["raw"]
        detail["recomputed_raw"] = got.raw
    elif op == "simplicial":
        got = simplicial_depth(X, q)
        ok = got.raw == outputs["raw"]
        detail["recomputed_raw"] = got.raw
    elif op == "centerpoint":
        pt = Point([Fraction(c) for c in outputs["point"]])
        got = tukey_depth(X, pt)
        ok = got.raw == outputs["raw"]
        detail["recomputed_raw"] = got.raw
    elif op == "partition":
        from .partition import TransversalPartition

        parts = tuple(X.subset([int(i) for i in idx]) for idx in outputs["parts"])
        part = TransversalPartition(
            parts=parts,
            part_indices=tuple(tuple(int(i) for i in idx) for idx in outputs["parts"]),
            query=q,
            guarantee={},
        )
        cert = certify_partition(part)
        ok = bool(cert)
        detail["mode"] = cert.mode
    elif op == "projdepth":
        from .projection import projection_depth as pd

        got = pd(X, q)
        ok = rational_str(got.value) == outputs["value"]
        detail["recomputed_value"] = rational_str(got.value)
    else:
        raise ParseError(f"certify does not support operation {op!r}")
    outputs2 = {"verified": ok, "operation": op, "detail": detail}
    if not ok:
        from .errors import ConsistencyError

        print(dump_report(build_report("certify", inst, outputs2)), end="")
        raise ConsistencyError(f"report claims for {op} failed re-verification")
    return "certify", inst, outputs2, {"report": os.path.basename(args.report)}, None


def _run_plot(args):
    with open(args.report, "r", encoding="utf-8") as fh:
        rep = json.load(fh)
    render_svg(rep, args.svg)
    return "plot", rep.get("instance", {}), {"svg": args.svg}, {}, None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="depthgeom",
        description="Exact data-depth geometry with certified constructions",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, query=False, points=True):
        if points:
            p.add_argument("--points", required=True, help="instance file (csv or json)")
            p.add_argument("--format", choices=["csv", "json"], default=None)
        if query:
            p.add_argument("--query", default=None, help='query point, e.g. "1,1/2"')
        p.add_argument("--out", default=None, help="write the JSON report here")
        p.add_argument("--svg", default=None, help="render an SVG figure here")
        p.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("tukey", help="Tukey (halfspace) depth of a query point")
    common(p, query=True)
    p.set_defaults(fn=_run_tukey)

    p = sub.add_parser("simplicial", help="simplicial depth of a query point")
    common(p, query=True)
    p.set_defaults(fn=_run_simplicial)

    p = sub.add_parser("centerpoint", help="deepest point (exact for d <= 2)")
    common(p)
    p.set_defaults(fn=_run_centerpoint)

    p = sub.add_parser("projdepth", help="projected depth over all lines through q")
    common(p, query=True)
    p.set_defaults(fn=_run_projdepth)

    p = sub.add_parser("partition", help="certified transversal partition")
    common(p, query=True)
    p.add_argument("--method", choices=["planar", "samestype"], default="planar")
    p.set_defaults(fn=_run_partition)

    p = sub.add_parser("certify", help="re-verify the claims of a report file")
    p.add_argument("--report", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_run_certify)

    p = sub.add_parser("helly", help="depth-Helly witness for a body family")
    p.add_argument("--family", required=True, help="directory of body vertex files")
    p.add_argument("--beta", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_run_helly)

    p = sub.add_parser("kirchberger", help="depth-Kirchberger separable witness")
    p.add_argument("--red", required=True)
    p.add_argument("--blue", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_run_kirchberger)

    p = sub.add_parser("gen", help="seeded random instance generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument(
        "--dist",
        default="uniform-square",
        help="uniform-square | gaussian-rounded | clustered(k) | convex-position",
    )
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None, help="also write the instance file here")
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.add_argument("--report-out", dest="out_report", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(fn=_run_gen)

    p = sub.add_parser("plot", help="render an SVG from a report file")
    p.add_argument("--report", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_run_plot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.monotonic()
    try:
        op, inst, outputs, params, cert = args.fn(args)
    except DepthGeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    timing = None if getattr(args, "no_timing", False) else time.monotonic() - t0
    rep = build_report(
        op,
        inst,
        outputs,
        parameters=params,
        certification=_cert_json(cert),
        seed=getattr(args, "seed", None),
        timing_s=timing,
    )
    text = dump_report(rep)
    # for gen, --out names the generated instance file; the report path is
    # --report-out there and --out everywhere else
    if op == "gen":
        out_path = getattr(args, "out_report", None)
    else:
        out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    svg_path = getattr(args, "svg", None)
    if svg_path and op != "plot":
        render_svg(rep, svg_path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
