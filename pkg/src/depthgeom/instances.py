"""Instance files and random instance generation.

CSV: one point per row, coordinates as 'p/q' or decimal strings.  JSON:
{"dim": d, "points": [["1/2", "3"], ...], "multiplicity": [...], "query":
[...]} with the last two optional.  Parsing is exact and emit/parse round
trips losslessly; duplicate rows merge into multiplicities with a warning.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import kernels
from .core import Point, PointSet, integerize, orientation, to_rational
from .errors import BudgetExceededError, ParseError, PreconditionError


def rational_str(v) -> str:
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_query(text: str) -> Point:
    try:
        return Point([to_rational(t) for t in text.split(",")])
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad query point {text!r}: {exc}") from exc


def parse_pointset(path: str, fmt: str | None = None):
    """(PointSet, meta) where meta holds 'query' (optional Point), 'warnings'
    and the source format.  Exit code 2 territory on malformed input."""
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "csv"
    if fmt == "csv":
        return _parse_csv(path)
    if fmt == "json":
        return _parse_json(path)
    raise ParseError(f"unknown format {fmt!r}")


def _parse_csv(path):
    pts = []
    dim = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            fields = [f.strip() for f in s.split(",")]
            coords = []
            for col, f in enumerate(fields, start=1):
                try:
                    coords.append(to_rational(f))
                except (ValueError, TypeError) as exc:
                    raise ParseError(
                        f"bad coordinate {f!r}", line=lineno, column=col
                    ) from exc
            if dim is None:
                dim = len(coords)
            elif len(coords) != dim:
                raise ParseError(
                    f"row has {len(coords)} fields, expected {dim}", line=lineno
                )
            pts.append(Point(coords))
    if not pts:
        raise ParseError("no points in file")
    warnings = []
    merged = PointSet.merged(pts)
    if merged.size != len(pts):
        warnings.append(
            f"merged {len(pts) - merged.size} duplicate point(s) into multiplicities"
        )
    return merged, {"format": "csv", "query": None, "warnings": warnings}


def _parse_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    try:
        raw_pts = data["points"]
        dim = int(data.get("dim", len(raw_pts[0]) if raw_pts else 0))
        pts = [Point([to_rational(c) for c in row]) for row in raw_pts]
        mult = data.get("multiplicity")
        if mult is not None:
            mult = [int(m) for m in mult]
        query = data.get("query")
        qpt = Point([to_rational(c) for c in query]) if query is not None else None
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        raise ParseError(f"bad instance JSON: {exc}") from exc
    warnings = []
    merged = PointSet.merged(pts, dim=dim, multiplicity=mult)
    if merged.size != len(pts):
        warnings.append(
            f"merged {len(pts) - merged.size} duplicate point(s) into multiplicities"
        )
    return merged, {"format": "json", "query": qpt, "warnings": warnings}


def pointset_to_json(X: PointSet, query: Point | None = None) -> dict:
    out = {
        "dim": X.dim,
        "points": [[rational_str(c) for c in p.coords] for p in X.points],
    }
    if any(m != 1 for m in X.multiplicity):
        out["multiplicity"] = list(X.multiplicity)
    if query is not None:
        out["query"] = [rational_str(c) for c in query.coords]
    return out


def pointset_to_csv(X: PointSet) -> str:
    lines = []
    for p, m in zip(X.points, X.multiplicity):
        for _ in range(m):
            lines.append(",".join(rational_str(c) for c in p.coords))
    return "\n".join(lines) + "\n"


def write_pointset(X: PointSet, path: str, fmt: str | None = None, query=None):
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "csv"
    with open(path, "w", encoding="utf-8") as fh:
        if fmt == "json":
            json.dump(pointset_to_json(X, query), fh, sort_keys=True, indent=1)
            fh.write("\n")
        else:
            fh.write(pointset_to_csv(X))


def _affinely_degenerate(points: list[Point], dim: int):
    """Index of a point participating in an affinely-degenerate (d+1)-tuple,
    or None.  Planar case runs on the collinearity kernel."""
    n = len(points)
    seen = {}
    for i, p in enumerate(points):
        if p.coords in seen:
            return i
        seen[p.coords] = i
    if dim == 1 or n <= dim:
        return None
    if dim == 2:
        rows, _ = integerize([p.coords for p in points])
        if not kernels.has_collinear_triple([r[0] for r in rows], [r[1] for r in rows]):
            return None
        # locate one offending triple for targeted resampling
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                for k in range(j + 1, n):
                    if orientation([points[i], points[j], points[k]]) == 0:
                        return k
        return None
    from itertools import combinations

    for tup in combinations(range(n), dim + 1):
        if orientation([points[t] for t in tup]) == 0:
            return tup[-1]
    return None


def gen_random(
    n: int,
    dim: int,
    distribution: str,
    seed: int,
    general_position: bool = True,
    coord_range: int = 10**6,
):
    """Deterministic seeded instance generator with rationalized coordinates.

    distributions: uniform-square, gaussian-rounded, clustered(k),
    convex-position (planar).  General position is enforced by resampling
    offending points, with the retry count reported.  coord_range scales the
    integer lattice the samples land on."""
    if n < 1:
        raise PreconditionError("n must be positive")
    rng = random.Random(seed)
    dist = distribution.strip()
    kclusters = None
    if dist.startswith("clustered"):
        try:
            kclusters = int(dist[dist.index("(") + 1 : dist.index(")")])
        except (ValueError, IndexError) as exc:
            raise ParseError(f"bad clustered spec {distribution!r}") from exc
        if kclusters < 1:
            raise PreconditionError("clustered(k) needs k >= 1")
        dist = "clustered"

    R = coord_range
    centers = None
    if dist == "clustered":
        centers = [
            tuple(rng.randrange(-R, R + 1) for _ in range(dim))
            for _ in range(kclusters)
        ]

    def draw(idx: int) -> Point:
        if dist == "uniform-square":
            return Point(tuple(rng.randrange(-R, R + 1) for _ in range(dim)))
        if dist == "gaussian-rounded":
            return Point(tuple(round(rng.gauss(0, 1) * R / 10) for _ in range(dim)))
        if dist == "clustered":
            c = centers[idx % kclusters]
            spread = max(2, R // 100)
            return Point(tuple(ci + rng.randrange(-spread, spread + 1) for ci in c))
        if dist == "convex-position":
            if dim != 2:
                raise PreconditionError("convex-position generation is planar")
            t = Fraction(rng.randrange(-R, R + 1), 10**4)
            den = 1 + t * t
            return Point(((R * (1 - t * t)) / den, (2 * R * t) / den))
        raise ParseError(f"unknown distribution {distribution!r}")

    points = [draw(i) for i in range(n)]
    resamples = 0
    if general_position:
        while True:
            bad = _affinely_degenerate(points, dim)
            if bad is None:
                break
            resamples += 1
            if resamples > 1000:
                raise BudgetExceededError("general-position resampling budget exceeded")
            points[bad] = draw(bad)
    X = PointSet.merged(points, dim=dim)
    return X, {"resamples": resamples, "distribution": distribution, "seed": seed}
