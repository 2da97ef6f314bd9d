"""Machine-readable run reports.

Every geometric claim in a report can be re-verified from the report alone:
the instance is embedded verbatim (exact rational strings), outputs carry
witnesses, and the digest pins instance + parameters + seed.  Byte-identical
reports for identical invocations when timings are excluded.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .core import Halfspace, OrientedHyperplane, Point, PointSet
from .instances import pointset_to_json, rational_str

SCHEMA_ID = "depthgeom-report/1"


def coords_json(p: Point):
    return [rational_str(c) for c in p.coords]


def hyperplane_json(h: OrientedHyperplane):
    return {
        "normal": [rational_str(c) for c in h.normal],
        "offset": rational_str(h.offset),
    }


def halfspace_json(h: Halfspace):
    out = hyperplane_json(h.boundary)
    out["closed"] = h.closed
    out["side"] = h.side
    return out


def parse_hyperplane(obj) -> OrientedHyperplane:
    return OrientedHyperplane([Fraction(c) for c in obj["normal"]], Fraction(obj["offset"]))


def instance_json(
    X: PointSet | None = None,
    query: Point | None = None,
    family=None,
    red: PointSet | None = None,
    blue: PointSet | None = None,
) -> dict:
    inst: dict = {}
    if X is not None:
        inst.update(pointset_to_json(X, query))
    elif query is not None:
        inst["query"] = coords_json(query)
    if family is not None:
        inst["family"] = [
            {"id": b.id, "vertices": [coords_json(p) for p in b.vertices.points]}
            for b in family.bodies
        ]
        inst["dim"] = family.dim
    if red is not None:
        inst["red"] = pointset_to_json(red)
    if blue is not None:
        inst["blue"] = pointset_to_json(blue)
    return inst


def digest(instance: dict, parameters: dict, seed) -> str:
    blob = json.dumps(
        {"instance": instance, "parameters": parameters, "seed": seed},
        sort_keys=True,
        separators=(",", ":"),
    ).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def build_report(
    operation: str,
    instance: dict,
    outputs: dict,
    parameters: dict | None = None,
    certification: dict | None = None,
    seed=None,
    timing_s: float | None = None,
) -> dict:
    parameters = parameters or {}
    rep = {
        "schema": SCHEMA_ID,
        "operation": operation,
        "instance": instance,
        "parameters": parameters,
        "seed": seed,
        "inputs_digest": digest(instance, parameters, seed),
        "outputs": outputs,
        "certification": certification
        or {"status": "not-applicable", "ok": None, "mode": None, "checked": None},
    }
    if timing_s is not None:
        rep["timings"] = {"total_s": timing_s}
    return rep


def dump_report(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, indent=1) + "\n"


def instance_pointset(inst: dict):
    """Rebuild (PointSet, query) from an embedded instance."""
    pts = [Point([Fraction(c) for c in row]) for row in inst.get("points", [])]
    mult = inst.get("multiplicity")
    X = (
        PointSet(pts, dim=inst.get("dim"), multiplicity=mult)
        if pts
        else None
    )
    q = None
    if inst.get("query") is not None:
        q = Point([Fraction(c) for c in inst["query"]])
    return X, q
