"""Independent brute-force ground truth.

These implementations deliberately share nothing with the main modules except
the Rational coordinate type: they carry their own determinant, containment,
and separation predicates, so agreement between a main-path operation and its
oracle is a meaningful check, not a tautology.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .core import Point, PointSet
from .errors import BudgetExceededError, PreconditionError


@dataclass(frozen=True)
class OracleBudget:
    max_enumerations: int = 10**6
    sample_size: int = 10**5
    seed: int = 20260809


DEFAULT_BUDGET = OracleBudget()


def _scale_rows(rows):
    dens = [c.denominator for row in rows for c in row]
    s = math.lcm(*dens) if dens else 1
    return [tuple(int(c * s) for c in row) for row in rows]


def _center_int(X: PointSet, q: Point):
    rows = _scale_rows([p.coords for p in X.points] + [q.coords])
    qi = rows[-1]
    vecs, weights, at_q = [], [], 0
    for row, w in zip(rows[:-1], X.multiplicity):
        v = tuple(a - b for a, b in zip(row, qi))
        if all(c == 0 for c in v):
            at_q += w
        else:
            vecs.append(v)
            weights.append(w)
    return vecs, weights, at_q


def _lex_ge0(*comps) -> bool:
    for c in comps:
        if c > 0:
            return True
        if c < 0:
            return False
    return True


def oracle_tukey(X: PointSet, q: Point) -> int:
    """Exact Tukey depth by direct enumeration of halfspaces bounded by
    hyperplanes through q and through d-1 data points, with symbolic
    (lexicographic epsilon) samples between angular events."""
    d = X.dim
    if d > 3:
        raise PreconditionError("oracle_tukey supports dimensions 1..3")
    if X.n > 600:
        raise BudgetExceededError("oracle_tukey size cap exceeded")
    vecs, weights, at_q = _center_int(X, q)
    total = sum(weights)
    if not vecs:
        return at_q
    if d == 1:
        pos = sum(w for v, w in zip(vecs, weights) if v[0] > 0)
        return at_q + min(pos, total - pos)
    if d == 2:
        best = total
        for v in vecs:
            for u in ((-v[1], v[0]), (v[1], -v[0])):
                for w in ((v[0], v[1]), (-v[0], -v[1])):
                    c = 0
                    for vv, wt in zip(vecs, weights):
                        l1 = u[0] * vv[0] + u[1] * vv[1]
                        l2 = w[0] * vv[0] + w[1] * vv[1]
                        if _lex_ge0(l1, l2):
                            c += wt
                    if c < best:
                        best = c
        return at_q + best

    def cross3(a, b):
        return (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )

    cands = set()
    for i in range(len(vecs)):
        v = vecs[i]
        cands.add(v)
        cands.add(tuple(-c for c in v))
        for j in range(i + 1, len(vecs)):
            u = cross3(vecs[i], vecs[j])
            if u != (0, 0, 0):
                cands.add(u)
                cands.add(tuple(-c for c in u))
    cands.update([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    best = total
    work = 0
    for u0 in cands:
        d0 = [sum(a * b for a, b in zip(u0, v)) for v in vecs]
        zero1 = [i for i in range(len(vecs)) if d0[i] == 0]
        w1_opts = [(0, 0, 0)]
        for k in zero1:
            c = cross3(u0, vecs[k])
            if c != (0, 0, 0):
                w1_opts.append(c)
                w1_opts.append(tuple(-x for x in c))
        for w1 in w1_opts:
            d1 = {i: sum(a * b for a, b in zip(w1, vecs[i])) for i in zero1}
            zero2 = [i for i in zero1 if d1[i] == 0]
            w2_opts = [(0, 0, 0)]
            for k in zero2:
                w2_opts.append(vecs[k])
                w2_opts.append(tuple(-x for x in vecs[k]))
            for w2 in w2_opts:
                work += 1
                if work > 20_000_000:
                    raise BudgetExceededError("oracle_tukey enumeration blow-up")
                c = 0
                for i, (vv, wt) in enumerate(zip(vecs, weights)):
                    l1 = d0[i]
                    l2 = d1[i] if l1 == 0 else 0
                    l3 = (
                        sum(a * b for a, b in zip(w2, vv))
                        if (l1 == 0 and l2 == 0)
                        else 0
                    )
                    if _lex_ge0(l1, l2, l3):
                        c += wt
                if c < best:
                    best = c
    return at_q + best


def _det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _contains_closed_2d(a, b, c, q):
    """(contained, strict) for the closed triangle abc and query q."""
    va = (a[0] - q[0], a[1] - q[1])
    vb = (b[0] - q[0], b[1] - q[1])
    vc = (c[0] - q[0], c[1] - q[1])
    s1, s2, s3 = _det2(va, vb), _det2(vb, vc), _det2(vc, va)
    if (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0):
        return True, True
    if s1 == 0 and s2 == 0 and s3 == 0:
        on = (
            va[0] * vb[0] + va[1] * vb[1] <= 0
            or vb[0] * vc[0] + vb[1] * vc[1] <= 0
            or vc[0] * va[0] + vc[1] * va[1] <= 0
        )
        return on, False
    if (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0):
        return True, False
    return False, False


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _orient3(a, b, c, e):
    return _det3(
        [
            [b[0] - a[0], b[1] - a[1], b[2] - a[2]],
            [c[0] - a[0], c[1] - a[1], c[2] - a[2]],
            [e[0] - a[0], e[1] - a[1], e[2] - a[2]],
        ]
    )


def _contains_closed_3d(p0, p1, p2, p3, q):
    s0 = _orient3(p0, p1, p2, p3)
    pts = (p0, p1, p2, p3)
    if s0 == 0:
        # flat tuple: q contained iff some 3-subset's closed triangle holds it
        # after dropping to a plane; check via 3d collinearity/coplanarity
        if _orient3(p0, p1, p2, q) != 0:
            return False, False
        for tri in combinations(pts, 3):
            if _flat_triangle_contains_3d(*tri, q):
                return True, False
        return False, False
    zero = False
    for i in range(4):
        repl = list(pts)
        repl[i] = q
        s = _orient3(*repl)
        if s == 0:
            zero = True
        elif (s > 0) != (s0 > 0):
            return False, False
    return True, not zero


def _flat_triangle_contains_3d(a, b, c, q):
    """Closed containment of q in the (possibly degenerate) triangle abc,
    all four points coplanar; projects out one axis exactly."""
    u = (
        (b[1] - a[1]) * (c[2] - a[2]) - (b[2] - a[2]) * (c[1] - a[1]),
        (b[2] - a[2]) * (c[0] - a[0]) - (b[0] - a[0]) * (c[2] - a[2]),
        (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]),
    )
    if u == (0, 0, 0):
        # collinear triangle: q on one of the segments?
        for s, t in combinations((a, b, c), 2):
            ds = tuple(x - y for x, y in zip(s, q))
            dt = tuple(x - y for x, y in zip(t, q))
            cr = (
                ds[1] * dt[2] - ds[2] * dt[1],
                ds[2] * dt[0] - ds[0] * dt[2],
                ds[0] * dt[1] - ds[1] * dt[0],
            )
            if cr == (0, 0, 0) and sum(x * y for x, y in zip(ds, dt)) <= 0:
                return True
        return False
    k = max(range(3), key=lambda i: abs(u[i]))
    proj = lambda p: tuple(p[i] for i in range(3) if i != k)  # noqa: E731
    got, _ = _contains_closed_2d(proj(a), proj(b), proj(c), proj(q))
    return got


def oracle_simplicial(X: PointSet, q: Point):
    """(closed count, boundary count) over all (d+1)-subsets of the expanded
    multiset, by full enumeration with independent containment predicates."""
    d = X.dim
    n = X.n
    if math.comb(n, d + 1) > 10**7:
        raise BudgetExceededError("oracle_simplicial enumeration budget")
    rows = _scale_rows([p.coords for p in X.points] + [q.coords])
    qi = rows[-1]
    expanded = []
    for row, m in zip(rows[:-1], X.multiplicity):
        expanded.extend([row] * m)
    closed = 0
    boundary = 0
    if d == 1:
        for a, b in combinations(expanded, 2):
            lo, hi = min(a[0], b[0]), max(a[0], b[0])
            if lo <= qi[0] <= hi:
                closed += 1
                if qi[0] == lo or qi[0] == hi:
                    boundary += 1
    elif d == 2:
        for a, b, c in combinations(expanded, 3):
            got, strict = _contains_closed_2d(a, b, c, qi)
            if got:
                closed += 1
                if not strict:
                    boundary += 1
    elif d == 3:
        for a, b, c, e in combinations(expanded, 4):
            got, strict = _contains_closed_3d(a, b, c, e, qi)
            if got:
                closed += 1
                if not strict:
                    boundary += 1
    else:
        raise PreconditionError("oracle_simplicial supports dimensions 1..3")
    return closed, boundary


def oracle_transversal_containment(
    parts, q: Point, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Ground-truth verdict: does every transversal triangle of the three
    parts contain q (closed)?  Exhaustive within budget, else seeded sampling."""
    rows = _scale_rows(
        [p.coords for part in parts for p in part.points] + [q.coords]
    )
    qi = rows[-1]
    sizes = [part.size for part in parts]
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    groups = [rows[offs[i] : offs[i + 1]] for i in range(len(parts))]
    if len(groups) != 3:
        raise PreconditionError("transversal containment oracle is planar (3 parts)")
    total = sizes[0] * sizes[1] * sizes[2]
    if total <= budget.max_enumerations:
        for a, b, c in product(*groups):
            got, _ = _contains_closed_2d(a, b, c, qi)
            if not got:
                return False
        return True
    rng = random.Random(budget.seed)
    for _ in range(budget.sample_size):
        a = groups[0][rng.randrange(sizes[0])]
        b = groups[1][rng.randrange(sizes[1])]
        c = groups[2][rng.randrange(sizes[2])]
        got, _ = _contains_closed_2d(a, b, c, qi)
        if not got:
            return False
    return True


def oracle_point_in_hull_2d(points: PointSet, q: Point) -> bool:
    """q in the closed hull, via Caratheodory: some <=3-subset contains it."""
    rows = _scale_rows([p.coords for p in points.points] + [q.coords])
    qi = rows[-1]
    pts = rows[:-1]
    if len(pts) == 1:
        return pts[0] == qi
    if len(pts) == 2:
        a, b = pts
        va = (a[0] - qi[0], a[1] - qi[1])
        vb = (b[0] - qi[0], b[1] - qi[1])
        return _det2(va, vb) == 0 and va[0] * vb[0] + va[1] * vb[1] <= 0
    for a, b, c in combinations(pts, 3):
        got, _ = _contains_closed_2d(a, b, c, qi)
        if got:
            return True
    return False


def _segments_intersect_2d(p1, p2, p3, p4) -> bool:
    """Closed segment intersection, collinear overlaps included."""

    def orient(a, b, c):
        return _det2((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1]))

    def on_seg(a, b, c):
        return (
            min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1])
        )

    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and on_seg(p3, p4, p1):
        return True
    if d2 == 0 and on_seg(p3, p4, p2):
        return True
    if d3 == 0 and on_seg(p1, p2, p3):
        return True
    if d4 == 0 and on_seg(p1, p2, p4):
        return True
    return False


def oracle_separable_strict_2d(A: PointSet, B: PointSet) -> bool:
    """Strict line separability of planar sets == disjointness of their
    closed hulls (checked by segment crossings and mutual hull membership)."""
    for q in A.points:
        if oracle_point_in_hull_2d(B, q):
            return False
    for q in B.points:
        if oracle_point_in_hull_2d(A, q):
            return False
    ra = _scale_rows([p.coords for p in A.points] + [p.coords for p in B.points])
    pa = ra[: A.size]
    pb = ra[A.size :]
    for s1 in combinations(pa, 2):
        for s2 in combinations(pb, 2):
            if _segments_intersect_2d(s1[0], s1[1], s2[0], s2[1]):
                return False
    return True


def arrangement_vertices_2d(X: PointSet) -> list[Point]:
    """All intersection points of lines through pairs of points of X
    (including the data points), deduplicated; own Cramer solve."""
    pts = [p.coords for p in X.points]
    n = len(pts)
    lines = []
    for i in range(n):
        for j in range(i + 1, n):
            a = pts[j][1] - pts[i][1]
            b = pts[i][0] - pts[j][0]
            c = a * pts[i][0] + b * pts[i][1]
            lines.append((a, b, c))
    seen = set()
    out = []
    for p in pts:
        key = (p[0], p[1])
        if key not in seen:
            seen.add(key)
            out.append(Point(p))
    for (a1, b1, c1), (a2, b2, c2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = Fraction(c1 * b2 - c2 * b1, det)
        y = Fraction(a1 * c2 - a2 * c1, det)
        if (x, y) not in seen:
            seen.add((x, y))
            out.append(Point((x, y)))
    return out


def oracle_max_separable_size(X: PointSet, q: Point) -> int:
    """Size of the largest subset whose hull misses q, by exhaustive search
    from the top (expanded multiset; planar)."""
    expanded = []
    for p, m in zip(X.points, X.multiplicity):
        expanded.extend([p] * m)
    n = len(expanded)
    if n > 18:
        raise BudgetExceededError("oracle_max_separable_size cap")
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            ps = PointSet.merged([expanded[i] for i in sub])
            if not oracle_point_in_hull_2d(ps, q):
                return size
    return 0
