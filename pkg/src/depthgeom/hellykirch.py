"""Halfspace-link lemma tools, the depth-Helly witness search, and the
depth-Kirchberger lift.

helly_witness minimizes the pointwise order statistic f(x) = (ceil(beta n))-th
smallest distance to the bodies (multi-start simplex descent in floats, then
exact re-evaluation).  f = 0 certifies an intersecting subfamily; otherwise
the nearest points form a weighted multiset whose transversal partition maps
back to three color classes of bodies with exhaustively verified empty
colorful intersections.  Every verdict is re-checked in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .core import Halfspace, OrientedHyperplane, Point, PointSet, convex_hull_2d
from .depth import tukey_depth
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionMismatchError,
    OptimizationFailure,
    PreconditionError,
)
from .lp import conv_contains, lp_feasible, separable
from .oracles import OracleBudget, DEFAULT_BUDGET
from .partition import certify_partition, partition_same_type


@dataclass(frozen=True)
class ConvexBody:
    """Vertex-represented compact convex set (the hull of `vertices`)."""

    vertices: PointSet
    id: str = ""

    def __post_init__(self):
        if self.vertices.size == 0:
            raise PreconditionError("a convex body needs at least one vertex")


@dataclass(frozen=True)
class Family:
    bodies: tuple

    def __post_init__(self):
        if not self.bodies:
            raise PreconditionError("empty family")
        d = self.bodies[0].vertices.dim
        for b in self.bodies:
            if b.vertices.dim != d:
                raise DimensionMismatchError("family bodies of mixed dimension")

    @property
    def n(self):
        return len(self.bodies)

    @property
    def dim(self):
        return self.bodies[0].vertices.dim


@dataclass
class HellyWitness:
    kind: str  # "intersecting" | "colorful"
    q_star: Point
    f_value: Fraction
    subfamily: Optional[tuple] = None
    common_point: Optional[Point] = None
    color_classes: Optional[tuple] = None
    verified_empty: Optional[bool] = None
    partition: Optional[object] = None


def perp_halfspaces(X: PointSet, q: Point) -> list[Halfspace]:
    """For each x_i the closed halfspace bounded by the hyperplane through
    x_i perpendicular to the segment to q, on the far side from q."""
    if X.dim != q.dim:
        raise DimensionMismatchError("perp_halfspaces: dimension mismatch")
    out = []
    for p in X.points:
        normal = tuple(qc - pc for qc, pc in zip(q.coords, p.coords))
        if all(c == 0 for c in normal):
            raise PreconditionError("q coincides with a point of X")
        offset = sum(a * b for a, b in zip(normal, p.coords))
        h = Halfspace(OrientedHyperplane(normal, offset), closed=True, side=-1)
        if h.contains(q):
            raise ConsistencyError("constructed halfspace contains q")
        out.append(h)
    return out


def _affine_foot(x: Point, S):
    """Orthogonal projection of x onto aff(S) with barycentric coordinates,
    or None when S is affinely dependent."""
    p0 = S[0]
    basis = [tuple(p.coords[i] - p0.coords[i] for i in range(x.dim)) for p in S[1:]]
    k = len(basis)
    if k == 0:
        return p0, [Fraction(1)]
    G = [[sum(a * b for a, b in zip(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [
        sum((x.coords[t] - p0.coords[t]) * basis[i][t] for t in range(x.dim))
        for i in range(k)
    ]
    lam = _solve_exact(G, rhs)
    if lam is None:
        return None
    foot = tuple(
        p0.coords[t] + sum(lam[i] * basis[i][t] for i in range(k)) for t in range(x.dim)
    )
    bary = [Fraction(1) - sum(lam)] + list(lam)
    return Point(foot), bary


def _solve_exact(A, b):
    n = len(A)
    m = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def dist_to_hull(x: Point, C: ConvexBody):
    """Exact squared Euclidean distance from x to the hull, with the nearest
    point; certified by the variational inequality over all vertices."""
    V = C.vertices
    if V.dim != x.dim:
        raise DimensionMismatchError("dist_to_hull: dimension mismatch")
    if conv_contains(V, x):
        return Fraction(0), x
    d = V.dim
    best = None
    for size in range(1, d + 1):
        for S in combinations(V.points, size):
            got = _affine_foot(x, S)
            if got is None:
                continue
            foot, bary = got
            if any(c < 0 for c in bary):
                continue
            d2 = sum((a - b) ** 2 for a, b in zip(x.coords, foot.coords))
            if best is None or d2 < best[0]:
                best = (d2, foot)
    if best is None:
        raise ConsistencyError("no valid projection foot found")
    d2, z = best
    for v in V.points:
        lhs = sum(
            (vc - zc) * (xc - zc) for vc, zc, xc in zip(v.coords, z.coords, x.coords)
        )
        if lhs > 0:
            raise ConsistencyError("nearest-point variational inequality failed")
    return d2, z


def f_eval(x: Point, F: Family, beta):
    """Value of the subfamily order statistic: the ceil(beta n)-th smallest
    of the squared distances d(x, C_i)^2, with the minimizing index set."""
    beta = Fraction(beta)
    if not 0 < beta <= 1:
        raise PreconditionError("beta must lie in (0, 1]")
    k = math.ceil(beta * F.n)
    dists = []
    for i, body in enumerate(F.bodies):
        d2, _ = dist_to_hull(x, body)
        dists.append((d2, i))
    dists.sort()
    chosen = dists[:k]
    return chosen[-1][0], tuple(sorted(i for _, i in chosen))


def body_halfplanes(C: ConvexBody) -> list[Halfspace]:
    """H-representation of a planar body (handles segment and point bodies)."""
    V = C.vertices
    if V.dim != 2:
        raise PreconditionError("body_halfplanes is planar")
    hull = convex_hull_2d(V.points)
    pts = [V.points[i] for i in hull]
    out = []
    if len(pts) == 1:
        p = pts[0]
        for nx, ny in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            out.append(
                Halfspace(
                    OrientedHyperplane((nx, ny), nx * p.coords[0] + ny * p.coords[1]),
                    closed=True,
                    side=-1,
                )
            )
        return out
    if len(pts) == 2:
        a, b = pts
        dx = b.coords[0] - a.coords[0]
        dy = b.coords[1] - a.coords[1]
        for n in ((-dy, dx), (dy, -dx)):
            out.append(
                Halfspace(
                    OrientedHyperplane(n, n[0] * a.coords[0] + n[1] * a.coords[1]),
                    closed=True,
                    side=-1,
                )
            )
        for n, p in (((dx, dy), b), ((-dx, -dy), a)):
            out.append(
                Halfspace(
                    OrientedHyperplane(n, n[0] * p.coords[0] + n[1] * p.coords[1]),
                    closed=True,
                    side=-1,
                )
            )
        return out
    m = len(pts)
    for i in range(m):
        a = pts[i]
        b = pts[(i + 1) % m]
        n = (-(b.coords[1] - a.coords[1]), b.coords[0] - a.coords[0])
        out.append(
            Halfspace(
                OrientedHyperplane(n, n[0] * a.coords[0] + n[1] * a.coords[1]),
                closed=True,
                side=1,
            )
        )
    for h in out:
        if not all(h.contains(p) for p in V.points):
            raise ConsistencyError("H-representation drops a vertex")
    return out


def _float_dist2(px, py, polys):
    out = []
    for vx, vy in polys:
        m = len(vx)
        if m == 1:
            out.append((px - vx[0]) ** 2 + (py - vy[0]) ** 2)
            continue
        inside = True
        best = float("inf")
        for i in range(m):
            ax, ay = vx[i], vy[i]
            bx, by = vx[(i + 1) % m], vy[(i + 1) % m]
            ex, ey = bx - ax, by - ay
            cross = ex * (py - ay) - ey * (px - ax)
            if m > 2 and cross < 0:
                inside = False
            ll = ex * ex + ey * ey
            if ll > 0:
                t = max(0.0, min(1.0, ((px - ax) * ex + (py - ay) * ey) / ll))
            else:
                t = 0.0
            qx, qy = ax + t * ex, ay + t * ey
            best = min(best, (px - qx) ** 2 + (py - qy) ** 2)
            if m == 2:
                inside = False
        out.append(0.0 if (inside and m > 2) else best)
    return out


def _prune_collinear(order, nearest, q):
    """Remove feet until no three are collinear, preferring removals that
    keep the Tukey depth of q as large as possible; None when it collapses."""
    pts = list(order)

    def collinear_triple(pts_):
        from .core import integerize

        rows, _ = integerize([p.coords for p in pts_])
        n = len(rows)
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                dx = rows[j][0] - rows[i][0]
                dy = rows[j][1] - rows[i][1]
                for k in range(j + 1, n):
                    if dx * (rows[k][1] - rows[i][1]) == dy * (rows[k][0] - rows[i][0]):
                        return i, j, k
        return None

    def depth_of(pts_):
        if len(pts_) < 3:
            return 0
        Xm = PointSet(pts_, dim=2, multiplicity=[len(nearest[p.coords]) for p in pts_])
        return tukey_depth(Xm, q).raw

    for _ in range(len(pts)):
        tri = collinear_triple(pts)
        if tri is None:
            return pts if depth_of(pts) > 0 and len(pts) >= 3 else None
        best_pts, best_depth = None, -1
        for drop in tri:
            cand = [p for t, p in enumerate(pts) if t != drop]
            dep = depth_of(cand)
            if dep > best_depth:
                best_depth, best_pts = dep, cand
        if best_depth <= 0:
            return None
        pts = best_pts
    return None


def helly_witness(
    F: Family,
    beta,
    budget: OracleBudget = DEFAULT_BUDGET,
    starts: int = 16,
    tol: float = 1e-9,
) -> HellyWitness:
    """Self-verifying depth-Helly alternative for planar vertex families.

    Either an intersecting subfamily of ceil(beta n) bodies with a common
    point, or three body classes whose every colorful triple has empty
    intersection (checked by exact LP, exhaustively within budget)."""
    if F.dim != 2:
        raise PreconditionError("helly_witness is planar")
    if F.n > 40:
        raise PreconditionError("helly_witness supports up to 40 bodies")
    beta = Fraction(beta)
    k = math.ceil(beta * F.n)

    polys = []
    for b in F.bodies:
        hull = convex_hull_2d(b.vertices.points)
        vx = [float(b.vertices.points[i].coords[0]) for i in hull]
        vy = [float(b.vertices.points[i].coords[1]) for i in hull]
        polys.append((vx, vy))

    def g(xy):
        ds = _float_dist2(xy[0], xy[1], polys)
        ds.sort()
        return ds[k - 1]

    all_x = [float(p.coords[0]) for b in F.bodies for p in b.vertices.points]
    all_y = [float(p.coords[1]) for b in F.bodies for p in b.vertices.points]
    lo_x, hi_x = min(all_x), max(all_x)
    lo_y, hi_y = min(all_y), max(all_y)
    side = max(1, int(round(math.sqrt(starts))))
    best_xy, best_val = None, float("inf")
    for i in range(side):
        for j in range(side):
            x0 = lo_x + (hi_x - lo_x) * (i + 0.5) / side
            y0 = lo_y + (hi_y - lo_y) * (j + 0.5) / side
            res = minimize(
                g,
                np.array([x0, y0]),
                method="Nelder-Mead",
                options={"xatol": tol, "fatol": tol, "maxiter": 2000},
            )
            if res.fun < best_val:
                best_val, best_xy = res.fun, res.x
    q_star = Point((Fraction(float(best_xy[0])), Fraction(float(best_xy[1]))))
    f_exact, selected = f_eval(q_star, F, beta)
    if f_exact == 0:
        for i in selected:
            if not conv_contains(F.bodies[i].vertices, q_star):
                raise ConsistencyError("intersecting alternative failed membership")
        return HellyWitness(
            kind="intersecting",
            q_star=q_star,
            f_value=f_exact,
            subfamily=selected,
            common_point=q_star,
        )

    # Build the nearest-point multiset and partition it.  A minimizer with
    # exactly two active bodies puts their nearest points collinear with it,
    # so the exact pipeline may need a tiny deterministic jitter; the
    # emptiness chain below is valid for any point whose partition certifies
    # (sizes are reported, not asserted).
    import random as _random

    spread = max(hi_x - lo_x, hi_y - lo_y, 1.0)
    rng = _random.Random(budget.seed)
    offsets = [(Fraction(0), Fraction(0))]
    for expo in (30, 24, 18, 12):
        eps = Fraction(int(spread * 2**10), 2 ** (expo + 10))
        for _ in range(4):
            offsets.append(
                (eps * rng.randrange(-8, 9), eps * rng.randrange(-8, 9))
            )
    part = None
    nearest: dict[tuple, list[int]] = {}
    q_used = q_star
    for off in offsets:
        qq = Point((q_star.coords[0] + off[0], q_star.coords[1] + off[1]))
        nearest = {}
        order = []
        for i, body in enumerate(F.bodies):
            d2, z = dist_to_hull(qq, body)
            if d2 == 0:
                continue  # a body containing the point has no far halfspace
            if z.coords not in nearest:
                nearest[z.coords] = []
                order.append(z)
            nearest[z.coords].append(i)
        # collinear triples among the feet are jitter-immune (vertex feet do
        # not move); drop offenders greedily, keeping the depth positive --
        # the emptiness chain holds for any sub-multiset that partitions
        order = _prune_collinear(order, nearest, qq)
        if order is None:
            continue
        Xm = PointSet(order, dim=2, multiplicity=[len(nearest[p.coords]) for p in order])
        if Xm.size < 3 or tukey_depth(Xm, qq).raw == 0:
            continue
        try:
            part = partition_same_type(Xm, qq)
        except (DegeneracyError, PreconditionError):
            continue
        q_used = qq
        break
    if part is None:
        raise OptimizationFailure(
            "no certifiable nearest-point partition near the incumbent",
            best=q_star,
            value=f_exact,
        )
    cert = certify_partition(part, budget)
    if not cert.ok:
        raise ConsistencyError("nearest-point partition failed certification")
    q_star = q_used
    f_exact, _ = f_eval(q_star, F, beta)
    classes = tuple(
        tuple(sorted(i for p in pp.points for i in nearest[p.coords]))
        for pp in part.parts
    )
    hreps = {i: body_halfplanes(F.bodies[i]) for cls in classes for i in cls}
    count = len(classes[0]) * len(classes[1]) * len(classes[2])
    if count <= budget.max_enumerations:
        combos = product(*classes)
    else:
        import random as _random

        rng = _random.Random(budget.seed)
        combos = (
            tuple(cls[rng.randrange(len(cls))] for cls in classes)
            for _ in range(budget.sample_size)
        )
    for tup in combos:
        cons = [h for i in tup for h in hreps[i]]
        if lp_feasible(cons) is not None:
            raise OptimizationFailure(
                f"colorful triple {tup} intersects; incumbent not a minimizer",
                best=q_star,
                value=f_exact,
            )
    return HellyWitness(
        kind="colorful",
        q_star=q_star,
        f_value=f_exact,
        color_classes=classes,
        verified_empty=True,
        partition=part,
    )


@dataclass(frozen=True)
class LiftedSet:
    points: PointSet
    tags: tuple  # ("R", i) or ("B", i) per point


def bichromatic_lift(R: PointSet, B: PointSet) -> LiftedSet:
    """Embed R at height +1 and the negation of B at height -1; hyperplane
    separation of (R', B') downstairs becomes separation of the lifted set
    from the origin upstairs."""
    if B.size and R.size and R.dim != B.dim:
        raise DimensionMismatchError("bichromatic_lift: dimension mismatch")
    pts = []
    tags = []
    mult = []
    for i, (p, m) in enumerate(zip(R.points, R.multiplicity)):
        pts.append(Point(tuple(p.coords) + (Fraction(1),)))
        tags.append(("R", i))
        mult.append(m)
    for i, (p, m) in enumerate(zip(B.points, B.multiplicity)):
        pts.append(Point(tuple(-c for c in p.coords) + (Fraction(-1),)))
        tags.append(("B", i))
        mult.append(m)
    dim = (R.dim if R.size else B.dim) + 1
    return LiftedSet(points=PointSet(pts, dim=dim, multiplicity=mult), tags=tuple(tags))


def kirchberger_witness(R: PointSet, B: PointSet, beta):
    """Large separable sub-pair via the lift: when the origin's Tukey depth
    upstairs is below (1-beta)n, the complement of a minimal halfspace maps
    back to (R', B') of size > beta n with a verified strict separator."""
    beta = Fraction(beta)
    if not 0 <= beta <= 1:
        raise PreconditionError("beta must lie in [0, 1]")
    n = R.n + B.n
    if n == 0 or n > 60:
        raise PreconditionError("kirchberger_witness supports 1..60 points")
    lifted = bichromatic_lift(R, B)
    origin = Point((0,) * lifted.points.dim)
    rep = tukey_depth(lifted.points, origin)
    if rep.raw != 0 and Fraction(rep.raw, n) >= 1 - beta:
        return None
    H = rep.witness
    keep = [i for i, p in enumerate(lifted.points.points) if not H.contains(p)]
    if rep.raw == 0:
        keep = list(range(len(lifted.points.points)))
    r_idx = sorted(lifted.tags[i][1] for i in keep if lifted.tags[i][0] == "R")
    b_idx = sorted(lifted.tags[i][1] for i in keep if lifted.tags[i][0] == "B")
    Rp = R.subset(r_idx) if r_idx else PointSet([], dim=R.dim)
    Bp = B.subset(b_idx) if b_idx else PointSet([], dim=B.dim)
    size = sum(R.multiplicity[i] for i in r_idx) + sum(B.multiplicity[i] for i in b_idx)
    if size < math.ceil(beta * n):
        raise ConsistencyError("witness smaller than the guaranteed size")
    if r_idx and b_idx:
        sep = separable(Rp, Bp, strict=True)
        if sep is None:
            raise ConsistencyError("complement pair is not separable")
    elif r_idx:
        # R' strictly positive: first coordinate beyond its minimum
        vals = [p.coords[0] for p in Rp.points]
        sep = OrientedHyperplane((1,) + (0,) * (R.dim - 1), min(vals) - 1)
    else:
        # B' strictly negative
        vals = [p.coords[0] for p in Bp.points]
        sep = OrientedHyperplane((1,) + (0,) * (B.dim - 1), max(vals) + 1)
    return Rp, Bp, sep, (tuple(r_idx), tuple(b_idx))
