"""Tukey depth, simplicial depth, centerpoints, and maximum separable subsets.

Everything is exact over rationals.  The planar paths run on the integer
kernels; dimensions 3..6 use a recursive candidate-direction enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .core import (
    Halfspace,
    OrientedHyperplane,
    Point,
    PointSet,
    integerize,
    orientation,
)
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    DimensionMismatchError,
    PreconditionError,
)
from .lp import conv_contains, solve_constraints

SIMPLICIAL_BUDGET = 10**7
TUKEY_SUBSET_BUDGET = 300_000


@dataclass(frozen=True)
class DepthReport:
    """Raw count, normalized value in [0, 1], and the attaining witness.

    witness is a Halfspace for Tukey depth and an index tuple (into the
    distinct points of X) for simplicial depth; degenerate marks query points
    hitting simplex boundaries, with boundary_count closed-minus-strict."""

    raw: int
    normalized: Fraction
    witness: object
    degenerate: bool = False
    boundary_count: int = 0


def _center(X: PointSet, q: Point):
    """Integer vectors x_i - q (common scaling), their weights, weight at q."""
    coords, _ = integerize([p.coords for p in X.points] + [list(q.coords)])
    qi = coords[-1]
    vecs = []
    weights = []
    at_q = 0
    for row, wgt in zip(coords[:-1], X.multiplicity):
        v = tuple(a - b for a, b in zip(row, qi))
        if all(c == 0 for c in v):
            at_q += wgt
        else:
            vecs.append(v)
            weights.append(wgt)
    return vecs, weights, at_q


def _rot_ccw(v):
    return (-v[1], v[0])


def _rot_cw(v):
    return (v[1], -v[0])


def _next_event_direction(vecs, e1):
    """Direction strictly inside the angular arc that starts at event e1.

    Events are the +-90 degree rotations of the data directions, an
    antipodally symmetric set, so the arc after e1 spans at most a half-turn
    and its interior contains either e1 + next_event or the +90 rotation of
    e1 (when the next event is exactly antipodal)."""
    best = None
    for v in vecs:
        for e in (_rot_ccw(v), _rot_cw(v)):
            cr = e1[0] * e[1] - e1[1] * e[0]
            dt = e1[0] * e[0] + e1[1] * e[1]
            if cr == 0 and dt > 0:
                continue  # same direction as e1
            if best is None or _ccw_before(e1, e, best):
                best = e
    if best is None:
        return _rot_ccw(e1)
    cr = e1[0] * best[1] - e1[1] * best[0]
    dt = e1[0] * best[0] + e1[1] * best[1]
    if cr == 0 and dt < 0:
        return _rot_ccw(e1)  # next event antipodal; take the arc midpoint
    return (e1[0] + best[0], e1[1] + best[1])


def _ccw_before(base, a, b):
    """True when a comes strictly before b rotating ccw from base (angles in
    (0, 2pi), exact)."""

    def half(v):
        cr = base[0] * v[1] - base[1] * v[0]
        dt = base[0] * v[0] + base[1] * v[1]
        if cr > 0:
            return 0
        if cr == 0 and dt < 0:
            return 1
        return 2

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha < hb
    cr = a[0] * b[1] - a[1] * b[0]
    return cr > 0


def _tukey_vectors_2d(vecs, weights):
    """(min closed-halfplane weight, exact witness direction u)."""
    vx = [v[0] for v in vecs]
    vy = [v[1] for v in vecs]
    raw, rep, kind = kernels.tukey_sweep(vx, vy, weights)
    vrep = (vx[rep], vy[rep])
    e1 = _rot_ccw(vrep) if kind == 0 else _rot_cw(vrep)
    u = _next_event_direction(vecs, e1)
    got, _ = kernels.count_halfplane(vx, vy, weights, u[0], u[1])
    if got != raw:
        raise ConsistencyError("tukey witness reconstruction mismatch")
    return raw, u


def _gram_schmidt_complement(u):
    """Integer basis of the hyperplane orthogonal to integer vector u."""
    d = len(u)
    basis = []
    # seed with coordinate axes, orthogonalize against u and previous rows
    for i in range(d):
        v = [Fraction(0)] * d
        v[i] = Fraction(1)
        uu = sum(Fraction(x) * x for x in u)
        proj = sum(Fraction(x) * y for x, y in zip(u, v)) / uu
        v = [y - proj * x for x, y in zip(u, v)]
        for b in basis:
            bb = sum(x * x for x in b)
            pb = sum(x * y for x, y in zip(b, v)) / bb
            v = [y - pb * x for x, y in zip(b, v)]
        if any(x != 0 for x in v):
            scaled, _ = integerize([v])
            g = math.gcd(*(abs(int(c)) for c in scaled[0]))
            basis.append(tuple(int(c) // g for c in scaled[0]))
        if len(basis) == d - 1:
            break
    return basis


def _nullspace_direction(rows, d):
    """One integer direction orthogonal to all rows when their rank is d-1,
    else None.  Exact Gaussian elimination over rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for col in range(d):
        piv = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    if r != d - 1:
        return None
    free = next(c for c in range(d) if c not in pivots)
    sol = [Fraction(0)] * d
    sol[free] = Fraction(1)
    for row_i, col in enumerate(pivots):
        sol[col] = -m[row_i][free]
    scaled, _ = integerize([sol])
    g = math.gcd(*(abs(int(c)) for c in scaled[0]))
    out = [int(c) // g for c in scaled[0]]
    lead = next(c for c in out if c != 0)
    if lead < 0:  # canonical sign, so duplicate hyperplanes dedupe
        out = [-c for c in out]
    return tuple(out)


def _project_to_basis(vecs, weights, basis):
    """Map vectors into basis-dot coordinates: a linear isomorphism of their
    span, so halfplane counts are preserved."""
    out = []
    for v in vecs:
        out.append(tuple(sum(b[i] * v[i] for i in range(len(v))) for b in basis))
    return out, list(weights)


def _rank_basis(vecs, d):
    """Orthogonal (rational) row basis of span(vecs); exact."""
    basis: list[list[Fraction]] = []
    for v in vecs:
        w = [Fraction(x) for x in v]
        for b in basis:
            bb = sum(x * x for x in b)
            f = sum(x * y for x, y in zip(b, w)) / bb
            w = [y - f * x for x, y in zip(b, w)]
        if any(x != 0 for x in w):
            basis.append(w)
        if len(basis) == d:
            break
    out = []
    for b in basis:
        scaled, _ = integerize([b])
        g = math.gcd(*(abs(int(c)) for c in scaled[0]))
        out.append(tuple(int(c) // g for c in scaled[0]))
    return out


def _tukey_vectors(vecs, weights):
    """Depth of the origin w.r.t. nonzero integer vectors: the minimum weight
    of a closed halfspace {v : u.v >= 0}, with an exact witness direction u."""
    total = sum(weights)
    if not vecs:
        return 0, None
    d = len(vecs[0])
    if d == 1:
        pos = sum(w for v, w in zip(vecs, weights) if v[0] > 0)
        neg = total - pos
        return (pos, (1,)) if pos <= neg else (neg, (-1,))
    if d == 2:
        return _tukey_vectors_2d(vecs, weights)

    basis = _rank_basis(vecs, d)
    if len(basis) < d:
        proj, wts = _project_to_basis(vecs, weights, basis)
        raw, uw = _tukey_vectors(proj, wts)
        if uw is None:
            return raw, None
        lift = tuple(
            sum(Fraction(uw[i]) * basis[i][j] for i in range(len(basis)))
            for j in range(d)
        )
        scaled, _ = integerize([lift])
        return raw, tuple(int(c) for c in scaled[0])

    n = len(vecs)
    if math.comb(n, d - 1) > TUKEY_SUBSET_BUDGET:
        raise BudgetExceededError(
            f"tukey depth candidate enumeration too large (n={n}, d={d})"
        )
    from itertools import combinations

    best = total + 1
    best_u = None
    seen_dirs = set()  # many subsets span one hyperplane; process each once
    for subset in combinations(range(n), d - 1):
        u0 = _nullspace_direction([vecs[i] for i in subset], d)
        if u0 is None or u0 in seen_dirs:
            continue
        seen_dirs.add(u0)
        for su in (u0, tuple(-c for c in u0)):
            strictpos = 0
            zero_idx = []
            for i, v in enumerate(vecs):
                dv = sum(a * b for a, b in zip(su, v))
                if dv > 0:
                    strictpos += weights[i]
                elif dv == 0:
                    zero_idx.append(i)
            if strictpos >= best:
                continue
            if zero_idx:
                hb = _gram_schmidt_complement(su)
                zvecs, zw = _project_to_basis(
                    [vecs[i] for i in zero_idx], [weights[i] for i in zero_idx], hb
                )
                inner, inner_u = _tukey_vectors(zvecs, zw)
            else:
                inner, inner_u, hb = 0, None, None
            cand = strictpos + inner
            if cand < best:
                if inner_u is not None:
                    wvec = tuple(
                        sum(Fraction(inner_u[i]) * hb[i][j] for i in range(len(hb)))
                        for j in range(len(su))
                    )
                    wint, _ = integerize([wvec])
                    wvec = wint[0]
                    lam = 1
                    for i, v in enumerate(vecs):
                        du = sum(a * b for a, b in zip(su, v))
                        if du != 0:
                            dw = sum(a * b for a, b in zip(wvec, v))
                            lam = max(lam, abs(dw) // abs(du) + 1)
                    u_fin = tuple(lam * a + b for a, b in zip(su, wvec))
                else:
                    u_fin = su
                got = sum(
                    w
                    for v, w in zip(vecs, weights)
                    if sum(a * b for a, b in zip(u_fin, v)) >= 0
                )
                if got != cand:
                    raise ConsistencyError("tukey witness lift mismatch")
                best, best_u = cand, u_fin
    if best_u is None:
        raise ConsistencyError("tukey candidate enumeration found no direction")
    return best, best_u


def tukey_depth(X: PointSet, q: Point) -> DepthReport:
    """Minimum weight of points of X in a closed halfspace containing q.

    The witness halfspace has its boundary through q and attains the raw
    count exactly (verified by recount)."""
    if X.dim != q.dim:
        raise DimensionMismatchError("tukey_depth: dimension mismatch")
    if X.dim > 6:
        raise PreconditionError("tukey_depth supports dimensions 1..6")
    if X.size == 0:
        raise PreconditionError("tukey_depth of an empty set")
    n = X.n
    vecs, weights, at_q = _center(X, q)
    raw_vec, u = _tukey_vectors(vecs, weights)
    raw = at_q + raw_vec
    if u is None:
        u = tuple([1] + [0] * (X.dim - 1))
    normal = tuple(Fraction(c) for c in u)
    offset = sum(a * b for a, b in zip(normal, q.coords))
    witness = Halfspace(OrientedHyperplane(normal, offset), closed=True, side=1)
    count = at_q
    for p, w in zip(X.points, X.multiplicity):
        if p != q and witness.contains(p):
            count += w
    if count != raw:
        raise ConsistencyError("tukey witness does not attain the reported depth")
    return DepthReport(raw=raw, normalized=Fraction(raw, n), witness=witness)


def _find_containing_triple(vecs, order):
    """Indices (into vecs) of a triangle strictly containing the origin.

    Assumes general position (no zero vector, no collinear pair) and that the
    origin is interior to the hull; then every angular gap is < pi and the
    gap holding -v_a together with a itself spans a containing triangle."""
    n = len(order)
    a = order[0]
    base = vecs[a]
    target = (-base[0], -base[1])
    lo = 0
    for i in range(1, n):
        if _ccw_before(base, vecs[order[i]], target):
            lo = i
        else:
            break
    if lo == 0 or lo + 1 >= n:
        raise ConsistencyError("containing-triple gap search failed")
    return a, order[lo], order[lo + 1]


def simplicial_depth(X: PointSet, q: Point) -> DepthReport:
    """Number of (d+1)-subsets of X (multiset) whose closed hull contains q.

    Subsets hitting q only on their boundary are included in raw and flagged
    via degenerate/boundary_count."""
    if X.dim != q.dim:
        raise DimensionMismatchError("simplicial_depth: dimension mismatch")
    d = X.dim
    n = X.n
    if n < d + 1:
        return DepthReport(raw=0, normalized=Fraction(0), witness=None)
    if math.comb(n, d + 1) > SIMPLICIAL_BUDGET:
        raise BudgetExceededError(
            f"simplicial enumeration C({n},{d + 1}) exceeds the budget"
        )
    vecs, weights, at_q = _center(X, q)
    # expansion indices: one entry per multiplicity unit, tagged by point index
    expand = []
    point_index = []
    vi = 0
    for i, (p, m) in enumerate(zip(X.points, X.multiplicity)):
        if p == q:
            for _ in range(m):
                expand.append(None)
                point_index.append(i)
        else:
            for _ in range(m):
                expand.append(vi)
                point_index.append(i)
            vi += 1

    if d == 2:
        clean = at_q == 0 and all(m == 1 for m in X.multiplicity)
        if clean:
            keys = set()
            for v in vecs:
                g = math.gcd(abs(v[0]), abs(v[1]))
                k = (v[0] // g, v[1] // g)
                if k in keys or (-k[0], -k[1]) in keys:
                    clean = False
                    break
                keys.add(k)
        vx = [v[0] for v in vecs]
        vy = [v[1] for v in vecs]
        if clean and n >= 3:
            raw = kernels.simplicial_fast(vx, vy)
            boundary = 0
            witness = None
            if raw > 0:
                from functools import cmp_to_key

                from ._pykernels import _angle_cmp

                order = sorted(
                    range(len(vecs)),
                    key=cmp_to_key(lambda a, b: _angle_cmp(vx[a], vy[a], vx[b], vy[b])),
                )
                tri = _find_containing_triple(vecs, order)
                if not _strict_triangle(vecs, tri):
                    raise ConsistencyError("simplicial witness construction failed")
                witness = tuple(sorted(tri))
            return DepthReport(
                raw=raw,
                normalized=Fraction(raw, math.comb(n, 3)),
                witness=witness,
                degenerate=False,
                boundary_count=0,
            )
        # expanded enumeration with boundary flags
        evx = [vx[e] if e is not None else 0 for e in expand]
        evy = [vy[e] if e is not None else 0 for e in expand]
        strict, boundary = kernels.simplicial_enum(evx, evy)
        raw = strict + boundary
        witness = None
        if raw > 0:
            witness = _search_witness_triple(evx, evy, point_index)
        return DepthReport(
            raw=raw,
            normalized=Fraction(raw, math.comb(n, 3)),
            witness=witness,
            degenerate=boundary > 0,
            boundary_count=boundary,
        )

    # generic dimensions: exhaustive over expanded tuples
    from itertools import combinations

    ex_pts = []
    for e, pi in zip(expand, point_index):
        ex_pts.append(q if e is None else X.points[pi])
    strict = 0
    boundary = 0
    witness = None
    for idxs in combinations(range(len(ex_pts)), d + 1):
        res = _closed_simplex_contains([ex_pts[i] for i in idxs], q)
        if res == 2:
            strict += 1
            if witness is None:
                witness = tuple(sorted({point_index[i] for i in idxs}))
        elif res == 1:
            boundary += 1
            if witness is None:
                witness = tuple(sorted({point_index[i] for i in idxs}))
    raw = strict + boundary
    return DepthReport(
        raw=raw,
        normalized=Fraction(raw, math.comb(n, d + 1)),
        witness=witness,
        degenerate=boundary > 0,
        boundary_count=boundary,
    )


def _strict_triangle(vecs, tri):
    a, b, c = (vecs[i] for i in tri)
    c1 = a[0] * b[1] - a[1] * b[0]
    c2 = b[0] * c[1] - b[1] * c[0]
    c3 = c[0] * a[1] - c[1] * a[0]
    return (c1 > 0 and c2 > 0 and c3 > 0) or (c1 < 0 and c2 < 0 and c3 < 0)


def _search_witness_triple(evx, evy, point_index):
    from ._pykernels import _origin_in_closed_triangle

    n = len(evx)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                if _origin_in_closed_triangle(
                    evx[i], evy[i], evx[j], evy[j], evx[k], evy[k]
                ):
                    return tuple(sorted({point_index[i], point_index[j], point_index[k]}))
    return None


def _closed_simplex_contains(points, q) -> int:
    """2 = strict interior, 1 = boundary, 0 = outside (closed containment)."""
    s0 = orientation(points)
    if s0 == 0:
        try:
            inside = conv_contains(PointSet.merged(points), q)
        except Exception:
            inside = False
        return 1 if inside else 0
    has_zero = False
    for i in range(len(points)):
        repl = list(points)
        repl[i] = q
        s = orientation(repl)
        if s == 0:
            has_zero = True
        elif s != s0:
            return 0
    return 1 if has_zero else 2


def centerpoint(X: PointSet) -> tuple[Point, DepthReport]:
    """A deepest point for d <= 2 (exact Tukey median over the plane), and an
    exact maximizer via candidate directions for d = 3 (small n).

    The returned depth always satisfies raw >= ceil(n / (d+1))."""
    if X.size == 0:
        raise PreconditionError("centerpoint of an empty set")
    n = X.n
    d = X.dim
    if d == 1:
        vals = sorted(zip([p.coords[0] for p in X.points], X.multiplicity))
        acc = 0
        med = vals[0][0]
        for v, m in vals:
            acc += m
            if 2 * acc >= n:
                med = v
                break
        pt = Point([med])
    elif d == 2:
        pt = _centerpoint_2d(X)
    elif d == 3:
        pt = _centerpoint_3d(X)
    else:
        raise PreconditionError("centerpoint supports dimensions 1..3")
    rep = tukey_depth(X, pt)
    if rep.raw < -(-n // (d + 1)):
        raise ConsistencyError("centerpoint below the guaranteed depth")
    return pt, rep


def _weighted_kth_largest(vals, weights, k):
    order = sorted(zip(vals, weights), reverse=True)
    acc = 0
    for v, m in order:
        acc += m
        if acc >= k:
            return v
    return order[-1][0]


def _depth_region_constraints(coords, weights, k, L, On):
    """Halfplanes whose intersection is exactly {q : tukey_depth(q) >= k}.

    Tie-spanning pair directions plus the four axis directions; the axis
    constraints keep every angular gap below a half-turn, which the
    between-directions implication needs (collinear inputs otherwise leave
    the region unbounded along the common line)."""
    cons = []
    nn = len(coords)
    for i in range(nn):
        xi, yi = coords[i]
        for j in range(nn):
            if i == j:
                continue
            tie = weights[i] + weights[j] + On[i][j]
            if L[i][j] < k <= L[i][j] + tie:
                ux = -(coords[j][1] - yi)
                uy = coords[j][0] - xi
                cons.append(((Fraction(ux), Fraction(uy)), Fraction(ux * xi + uy * yi)))
    for ux, uy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        rhs = _weighted_kth_largest([ux * x + uy * y for x, y in coords], weights, k)
        cons.append(((Fraction(ux), Fraction(uy)), Fraction(rhs)))
    return cons


def _centerpoint_2d(X: PointSet) -> Point:
    coords, scale = integerize([p.coords for p in X.points])
    if len(coords) == 1:
        return X.points[0]
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    w = list(X.multiplicity)
    n = sum(w)
    L, On = kernels.pair_counts(xs, ys, w)
    lo_b = min(min(xs), min(ys)) - 1
    hi_b = max(max(xs), max(ys)) + 1

    def solve(k, objective=None):
        cons = _depth_region_constraints(coords, w, k, L, On)
        from .lp import _seidel
        import random as _random

        c = [Fraction(0), Fraction(0)] if objective is None else list(objective)
        return _seidel(
            cons,
            c,
            [(Fraction(lo_b), Fraction(hi_b))] * 2,
            _random.Random(0x5E1DE1),
        )

    lo = -(-n // 3)
    hi = -(-n // 2)
    if solve(lo) is None:
        raise ConsistencyError("centerpoint: guaranteed depth region is empty")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if solve(mid) is not None:
            lo = mid
        else:
            hi = mid - 1
    # a relative-interior point of the deepest region: the average of four
    # directional extremes (the depth is constant on the region, and interior
    # points avoid collinearities with data pairs that region vertices have)
    sols = []
    for obj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        s = solve(lo, objective=[Fraction(v) for v in obj])
        if s is None:
            raise ConsistencyError("deepest region vanished during re-solve")
        sols.append(s)
    cx = sum(s[0] for s in sols) / 4
    cy = sum(s[1] for s in sols) / 4
    # snap to small denominators while staying inside the region (verified
    # against the exact constraint list, so the depth value is unchanged)
    cons = _depth_region_constraints(coords, w, lo, L, On)
    for den in (1, 8, 64, 4096, 10**6, 10**9, 10**15):
        cand = (cx.limit_denominator(den), cy.limit_denominator(den))
        if all(a[0] * cand[0] + a[1] * cand[1] <= b for a, b in cons):
            return Point((cand[0] / scale, cand[1] / scale))
    return Point((cx / scale, cy / scale))


def _centerpoint_3d(X: PointSet) -> Point:
    if X.size > 32:
        raise BudgetExceededError("d=3 centerpoint limited to 32 distinct points")
    coords, scale = integerize([p.coords for p in X.points])
    w = list(X.multiplicity)
    n = sum(w)
    diffs = set()
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            d = tuple(a - b for a, b in zip(coords[i], coords[j]))
            g = math.gcd(*(abs(c) for c in d))
            diffs.add(tuple(c // g for c in d))
    diffs.update([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    diffs = list(diffs)
    dirs = set()
    for i in range(len(diffs)):
        for j in range(i + 1, len(diffs)):
            a, b = diffs[i], diffs[j]
            u = (
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            )
            if u == (0, 0, 0):
                continue
            g = math.gcd(*(abs(c) for c in u))
            u = (u[0] // g, u[1] // g, u[2] // g)
            dirs.add(u)
            dirs.add((-u[0], -u[1], -u[2]))
    dirs = sorted(dirs)

    def kth_largest(u, k):
        vals = sorted(
            ((sum(a * b for a, b in zip(u, c)), m) for c, m in zip(coords, w)),
            reverse=True,
        )
        acc = 0
        for v, m in vals:
            acc += m
            if acc >= k:
                return v
        return vals[-1][0]

    lo_b = Fraction(min(min(c) for c in coords) - 1)
    hi_b = Fraction(max(max(c) for c in coords) + 1)

    def feasible(k):
        cons = [
            ((Fraction(u[0]), Fraction(u[1]), Fraction(u[2])), Fraction(kth_largest(u, k)))
            for u in dirs
        ]
        from .lp import _seidel
        import random as _random

        return _seidel(
            cons,
            [Fraction(0)] * 3,
            [(lo_b, hi_b)] * 3,
            _random.Random(0x5E1DE1),
        )

    lo = -(-n // 4)
    hi = -(-n // 2)
    best = feasible(lo)
    if best is None:
        raise ConsistencyError("centerpoint: guaranteed depth region is empty")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        sol = feasible(mid)
        if sol is not None:
            lo, best = mid, sol
        else:
            hi = mid - 1
    return Point([c / scale for c in best])


def max_separable_subset(X: PointSet, q: Point):
    """Maximum-cardinality X' of X with q outside conv(X'), plus a strictly
    separating hyperplane; |X'| = n - tukey_depth(X, q) by complementation."""
    if X.dim != q.dim:
        raise DimensionMismatchError("max_separable_subset: dimension mismatch")
    if X.dim > 3:
        raise PreconditionError("max_separable_subset supports dimensions 1..3")
    if any(p == q for p in X.points):
        raise PreconditionError("query point must not belong to X")
    rep = tukey_depth(X, q)
    H = rep.witness
    outside = [i for i, p in enumerate(X.points) if not H.contains(p)]
    sub = X.subset(outside) if outside else PointSet([], dim=X.dim)
    size = sum(X.multiplicity[i] for i in outside)
    if size != X.n - rep.raw:
        raise ConsistencyError("separable-subset size identity failed")
    u = tuple(-c for c in H.boundary.normal)
    if outside:
        vals = [sum(a * b for a, b in zip(u, p.coords)) for p in sub.points]
        qval = sum(a * b for a, b in zip(u, q.coords))
        hp = OrientedHyperplane(u, (min(vals) + qval) / 2)
        if any(hp.eval(p) <= 0 for p in sub.points) or hp.eval(q) >= 0:
            raise ConsistencyError("separable-subset witness failed")
    else:
        hp = OrientedHyperplane(u, sum(a * b for a, b in zip(u, q.coords)) - 1)
    return sub, hp, rep
