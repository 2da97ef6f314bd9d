"""Certified transversal partitions.

Two constructions return disjoint parts X_1..X_{d+1} of X such that every
transversal simplex (one vertex per part) contains the query q:

* partition_same_type: the halving pipeline (bisect through q, pick a deep
  projection line, run the 1-d base case on both parallel copies, refine the
  four groups plus {q} to same-type transversals, select a containing triple);
* partition_planar: the left/right projection algorithm whose part-size
  product is at least sigma / (16 ln n) for n >= 16.

certify_partition re-checks every transversal (exhaustively within budget)
with closed containment tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Context, Decimal, ROUND_CEILING, ROUND_FLOOR
from fractions import Fraction
from typing import Optional

from . import kernels
from .core import OrientedHyperplane, Point, PointSet, integerize
from .depth import simplicial_depth, tukey_depth
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionMismatchError,
    PreconditionError,
)
from .oracles import OracleBudget, DEFAULT_BUDGET
from .projection import _side_data, projection_witness_line
from .sametype import ColoredFamily, same_type_refine


@dataclass(frozen=True)
class CertificationResult:
    ok: bool
    mode: str
    checked: int
    violation: Optional[tuple] = None

    def __bool__(self):
        return self.ok


@dataclass
class TransversalPartition:
    parts: tuple
    part_indices: tuple
    query: Point
    guarantee: dict
    certification: Optional[CertificationResult] = field(default=None)


def _require_general_position(X: PointSet, q: Point):
    if any(p == q for p in X.points):
        raise PreconditionError("q must not belong to X")
    rows, _ = integerize([p.coords for p in X.points] + [q.coords])
    if len(rows) >= 3 and kernels.has_collinear_triple(
        [r[0] for r in rows], [r[1] for r in rows]
    ):
        raise DegeneracyError("X together with q must be in general position")


def bisecting_line(X: PointSet, q: Point) -> OrientedHyperplane:
    """Line through q with at least floor(W/2) of the weight strictly on each
    side and no points on the line; found by an exact angular sweep."""
    rows, _ = integerize([p.coords for p in X.points] + [q.coords])
    qi = rows[-1]
    vecs = []
    weights = []
    for row, w in zip(rows[:-1], X.multiplicity):
        v = (row[0] - qi[0], row[1] - qi[1])
        if v == (0, 0):
            raise PreconditionError("q must not belong to X")
        vecs.append(v)
        weights.append(w)
    W = sum(weights)
    events = set()
    for vx, vy in vecs:
        events.add((-vy, vx))
        events.add((vy, -vx))
    from functools import cmp_to_key

    from ._pykernels import _angle_cmp

    evs = sorted(events, key=cmp_to_key(lambda a, b: _angle_cmp(a[0], a[1], b[0], b[1])))
    m = len(evs)
    best = None
    best_bal = -1
    for i in range(m):
        a, b = evs[i], evs[(i + 1) % m]
        cr = a[0] * b[1] - a[1] * b[0]
        dt = a[0] * b[0] + a[1] * b[1]
        if cr == 0 and dt > 0:
            continue
        u = (-a[1], a[0]) if (cr == 0 and dt < 0) else (a[0] + b[0], a[1] + b[1])
        above = 0
        for (vx, vy), w in zip(vecs, weights):
            h = u[0] * vx + u[1] * vy
            if h == 0:
                raise ConsistencyError("bisecting sweep sample hit a data point")
            if h > 0:
                above += w
        bal = min(above, W - above)
        if bal > best_bal:
            best_bal, best = bal, u
        if bal >= W // 2:
            break
    if best_bal < W // 2:
        raise DegeneracyError("no bisecting line through q (weight atoms)")
    return OrientedHyperplane(
        best, best[0] * q.coords[0] + best[1] * q.coords[1]
    )


def _ln_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds for ln n, certified by directed rounding."""
    ctx_up = Context(prec=40, rounding=ROUND_CEILING)
    ctx_lo = Context(prec=40, rounding=ROUND_FLOOR)
    return Fraction(ctx_lo.ln(Decimal(n))), Fraction(ctx_up.ln(Decimal(n)))


def _split_t_for_base_case(above, below, lo, hi):
    """A coordinate that both sides' images straddle, maximizing the smallest
    of the four strict side weights; preferred inside the deep interval
    [lo, hi] (which carries the size guarantee), widened to all image gaps
    when the interval pins the cut onto a data coordinate.

    Any straddled coordinate yields a valid partition (the containment proof
    only needs the split ray inside both image cones); the interval matters
    for sizes alone."""
    coords = sorted({rho for rho, _, _ in above} | {rho for rho, _, _ in below})

    def score(t):
        a_lo = sum(w for rho, w, _ in above if rho < t)
        a_hi = sum(w for rho, w, _ in above if rho > t)
        b_lo = sum(w for rho, w, _ in below if rho < t)
        b_hi = sum(w for rho, w, _ in below if rho > t)
        return min(a_lo, a_hi, b_lo, b_hi)

    def best_of(cands):
        bt, bs = None, -1
        for t in cands:
            s = score(t)
            if s > bs:
                bs, bt = s, t
        return bt, bs

    inner = [c for c in coords if lo <= c <= hi]
    cands = [lo, hi] if lo <= hi else []
    for a, b in zip(inner, inner[1:]):
        cands.append((a + b) / 2)
    if lo < hi:
        if inner and inner[0] > lo:
            cands.append((lo + inner[0]) / 2)
        if inner and inner[-1] < hi:
            cands.append((inner[-1] + hi) / 2)
        if not inner:
            cands.append((lo + hi) / 2)
    t, s = best_of(cands)
    if s >= 1:
        return t
    wide = [(a + b) / 2 for a, b in zip(coords, coords[1:])]
    t, s = best_of(wide)
    if s >= 1:
        return t
    raise DegeneracyError("no split coordinate leaves both sides straddled")


def partition_same_type(
    X: PointSet, q: Point, budget: OracleBudget = DEFAULT_BUDGET
) -> TransversalPartition:
    """Halving pipeline for d in {1, 2}.

    d = 1: points left and right of q.  d = 2: bisect X with a line through
    q, take the witness line of the deep-projection construction, apply the
    1-d case on both parallel copies, refine the four groups together with
    {q} to same-type transversals, and keep a triple whose representative
    triangle contains q."""
    if X.dim != q.dim:
        raise DimensionMismatchError("partition: dimension mismatch")
    trep = tukey_depth(X, q)
    if trep.raw <= 0:
        raise PreconditionError("partition needs positive Tukey depth")
    n = X.n
    if X.dim == 1:
        left = [i for i, p in enumerate(X.points) if p.coords[0] < q.coords[0]]
        right = [i for i, p in enumerate(X.points) if p.coords[0] > q.coords[0]]
        if any(p == q for p in X.points):
            raise PreconditionError("q must not belong to X")
        parts = (X.subset(left), X.subset(right))
        sizes = tuple(sum(X.multiplicity[i] for i in idx) for idx in (left, right))
        if min(sizes) < trep.raw:
            raise ConsistencyError("1-d split smaller than the depth")
        return TransversalPartition(
            parts=parts,
            part_indices=(tuple(left), tuple(right)),
            query=q,
            guarantee={
                "method": "general",
                "dim": 1,
                "sizes": sizes,
                "product": sizes[0] * sizes[1],
                "sigma_raw": None,
                "tau_raw": trep.raw,
                "bound": trep.raw,
            },
        )
    if X.dim != 2:
        raise PreconditionError("partition supports dimensions 1 and 2")
    _require_general_position(X, q)
    if X.size == 3:
        # three distinct points of positive depth: conv(X) is the unique
        # transversal triangle, so the singleton parts already certify
        parts = tuple(X.subset([i]) for i in range(3))
        sizes = tuple(X.multiplicity)
        return TransversalPartition(
            parts=parts,
            part_indices=((0,), (1,), (2,)),
            query=q,
            guarantee={
                "method": "general",
                "dim": 2,
                "sizes": sizes,
                "product": sizes[0] * sizes[1] * sizes[2],
                "sigma_raw": None,
                "tau_raw": trep.raw,
                "min_ratio": Fraction(min(sizes), n),
                "bound": None,
            },
        )
    pi = bisecting_line(X, q)
    delta = min(trep.normalized, Fraction(1, 2))
    u, d0, above, below, on = _side_data(X, q, pi, Fraction(1))
    if on:
        raise ConsistencyError("bisecting line passes through a data point")
    wa = sum(w for _, w, _ in above)
    wb = sum(w for _, w, _ in below)
    mm = max(wa, wb)
    eps = min(delta / 2, Fraction(1, 2 * delta.denominator * mm + 1))
    wl = projection_witness_line(X, q, pi, eps)
    from .projection import _median_interval

    dprime = delta - eps
    vals = [rho for rho, _, _ in above] + [rho for rho, _, _ in below]
    lo_s, hi_s = min(vals) - 1, max(vals) + 1
    lo1, hi1 = _median_interval(above, dprime * wa, lo_s, hi_s)
    lo2, hi2 = _median_interval(below, dprime * wb, lo_s, hi_s)
    lo, hi = max(lo1, lo2), min(hi1, hi2)
    if lo > hi:
        raise ConsistencyError("deep 1-d regions do not intersect")
    tstar = _split_t_for_base_case(above, below, lo, hi)
    groups_idx = [
        [i for rho, _, i in above if rho < tstar],
        [i for rho, _, i in above if rho > tstar],
        [i for rho, _, i in below if rho < tstar],
        [i for rho, _, i in below if rho > tstar],
    ]
    if any(not g for g in groups_idx):
        raise ConsistencyError("a halving group came out empty")
    base_sizes = tuple(sum(X.multiplicity[i] for i in g) for g in groups_idx)
    family = ColoredFamily(
        tuple(X.subset(sorted(g)) for g in groups_idx) + (PointSet([q]),)
    )
    cert = same_type_refine(family, budget)
    zsets = cert.subsets[:4]
    rep = [s.points[0] for s in zsets]
    coordsmap = {p.coords: i for i, p in enumerate(X.points)}
    chosen = None
    from ._pykernels import _origin_in_closed_triangle

    rows, _ = integerize([p.coords for p in rep] + [q.coords])
    qi = rows[-1]
    vec = [(r[0] - qi[0], r[1] - qi[1]) for r in rows[:4]]
    for tri in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        a, b, c = (vec[t] for t in tri)
        if _origin_in_closed_triangle(a[0], a[1], b[0], b[1], c[0], c[1]):
            chosen = tri
            break
    if chosen is None:
        raise ConsistencyError("no representative triple contains q")
    parts = tuple(zsets[t] for t in chosen)
    part_indices = tuple(
        tuple(coordsmap[p.coords] for p in part.points) for part in parts
    )
    sizes = tuple(
        sum(X.multiplicity[i] for i in idx) for idx in part_indices
    )
    guarantee = {
        "method": "general",
        "dim": 2,
        "sizes": sizes,
        "product": sizes[0] * sizes[1] * sizes[2],
        "sigma_raw": None,
        "tau_raw": trep.raw,
        "delta": delta,
        "epsilon": eps,
        "base_sizes": base_sizes,
        "min_ratio": Fraction(min(sizes), n),
        "witness_coordinate": wl.coordinate,
        "split_coordinate": tstar,
        "same_type_sizes": cert.sizes,
        "bound": None,
        "bisect": (tuple(pi.normal), pi.offset),
    }
    return TransversalPartition(
        parts=parts, part_indices=part_indices, query=q, guarantee=guarantee
    )


def _lr_counts(up, down):
    """Weighted left/right counts of down-image coordinates around each
    up-image coordinate; exact, no ties allowed."""
    dsorted = sorted((rho, w) for rho, w, _ in down)
    coords = [rho for rho, _ in dsorted]
    pre = [0]
    for _, w in dsorted:
        pre.append(pre[-1] + w)
    total = pre[-1]
    from bisect import bisect_left, bisect_right

    out = []
    for rho, w, idx in up:
        lo = bisect_left(coords, rho)
        hi = bisect_right(coords, rho)
        if lo != hi:
            raise DegeneracyError("coincident projection images (collinear with q)")
        out.append((pre[lo], total - pre[lo]))
    return out


def partition_planar(
    X: PointSet, q: Point, budget: OracleBudget = DEFAULT_BUDGET
) -> TransversalPartition:
    """Left/right projection algorithm with the product guarantee.

    Bisect X through q, keep the side pairing carrying at least half of the
    q-containing triangles with two vertices below, project everything from q
    onto a far line, and cut at the maximizing term of the weighted
    left-count sum.  Exact internal identities are asserted along the way."""
    if X.dim != 2 or q.dim != 2:
        raise DimensionMismatchError("partition_planar is planar")
    n = X.n
    if n < 3:
        raise PreconditionError("partition_planar needs at least three points")
    _require_general_position(X, q)
    srep = simplicial_depth(X, q)
    if srep.boundary_count:
        raise DegeneracyError("query lies on a simplex boundary")
    sigma = srep.raw
    if sigma < 1:
        raise PreconditionError("partition_planar needs positive simplicial depth")
    pi = bisecting_line(X, q)
    u, d0, above, below, on = _side_data(X, q, pi, Fraction(1))
    if on:
        raise ConsistencyError("bisecting line passes through a data point")
    # image order on the far line: kappa = -rho (the sign only fixes chirality)
    up0 = [(-rho, w, i) for rho, w, i in above]
    dn0 = [(-rho, w, i) for rho, w, i in below]

    def t_two_below(up, down):
        lr = _lr_counts(up, down)
        return sum(w * l * r for (_, w, _), (l, r) in zip(up, lr))

    t_below = t_two_below(up0, dn0)
    t_above = t_two_below(dn0, up0)
    if t_below + t_above != sigma:
        raise ConsistencyError("triangle split identity failed")
    if t_below >= t_above:
        up, down, T = up0, dn0, t_below
    else:
        up, down, T = dn0, up0, t_above

    # independent recount of |T| straight from the triangle definition
    rows, _ = integerize([p.coords for p in X.points] + [q.coords])
    qi = rows[-1]

    def unit_vectors(entries):
        xs, ys = [], []
        for _, w, i in entries:
            vx = rows[i][0] - qi[0]
            vy = rows[i][1] - qi[1]
            xs.extend([vx] * w)
            ys.extend([vy] * w)
        return xs, ys

    dx, dy = unit_vectors(down)
    ux, uy = unit_vectors(up)
    direct = kernels.count_two_below(dx, dy, ux, uy)
    if direct != T:
        raise ConsistencyError("left-right count identity |T| = sum l*r failed")

    for flip in (False, True):
        cu = [(-k, w, i) for k, w, i in up] if flip else up
        cd = [(-k, w, i) for k, w, i in down] if flip else down
        lr = _lr_counts(cu, cd)
        lset = [
            (k, w, i, l, r)
            for (k, w, i), (l, r) in zip(cu, lr)
            if r >= l
        ]
        s_l = sum(w * l * r for _, w, _, l, r in lset)
        if 2 * s_l >= T:
            break
    else:
        raise ConsistencyError("neither orientation carries half the triangles")

    units = []  # one entry per weight unit of the L side, sorted left to right
    for k, w, i, l, r in sorted(lset):
        units.extend([(k, i, l, r)] * w)
    m = len(units)
    if m == 0:
        raise ConsistencyError("left-heavy side is empty")
    M = -1
    i_star = -1
    for pos in range(1, m + 1):
        val = units[pos - 1][2] * (m - pos + 1)
        if val > M:
            M, i_star = val, pos
    k_star = units[i_star - 1][0]
    k_last = units[m - 1][0]
    if i_star > 1 and units[i_star - 2][0] == k_star:
        raise ConsistencyError("cut index landed inside a weight group")

    down_total = sum(w for _, w, _ in cd)
    x1_idx = sorted({i for k, w, i in cd if k < k_star})
    x2_idx = sorted({i for k, i, l, r in units[i_star - 1 :]})
    x3_idx = sorted({i for k, w, i in cd if k > k_last})
    s1 = sum(X.multiplicity[i] for i in x1_idx)
    s2 = m - i_star + 1
    s3 = sum(X.multiplicity[i] for i in x3_idx)
    if s1 * s2 != M:
        raise ConsistencyError("|X1||X2| does not match the maximizing term")
    if 2 * s3 < down_total:
        raise ConsistencyError("right count at the last L point below half")
    if any(s == 0 for s in (s1, s2, s3)):
        raise ConsistencyError("an output part is empty")
    harmonic = sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))
    if M * 2 * n * harmonic < T:
        raise ConsistencyError("harmonic bound failed")
    product = s1 * s2 * s3
    checks = {
        "identity_lr": True,
        "t_at_least_half_sigma": 2 * T >= sigma,
        "harmonic_bound": True,
        "x3_half_of_down": True,
        "x3_quarter": 4 * s3 >= n,
    }
    if not checks["t_at_least_half_sigma"]:
        raise ConsistencyError("chosen side carries less than half the triangles")
    if n % 2 == 0 and not checks["x3_quarter"]:
        raise ConsistencyError("|X3| >= n/4 failed for even n")
    if n % 2 == 0 and product * 16 * harmonic < sigma:
        raise ConsistencyError("exact harmonic product bound failed")
    bound = None
    if n >= 16:
        ln_lo, ln_up = _ln_bounds(n)
        bound = Fraction(sigma) / (16 * ln_up)
        checks["harmonic_le_ln"] = harmonic <= ln_lo
        checks["ln_bound"] = Fraction(product) >= bound
        if not checks["ln_bound"]:
            raise ConsistencyError("product fell below sigma / (16 ln n)")
    parts = tuple(X.subset(idx) for idx in (x1_idx, x2_idx, x3_idx))
    guarantee = {
        "method": "planar_sigma",
        "dim": 2,
        "sizes": (s1, s2, s3),
        "product": product,
        "sigma_raw": sigma,
        "t_count": T,
        "m": m,
        "M": M,
        "i_star": i_star,
        "harmonic": harmonic,
        "bound": bound,
        "checks": checks,
        "mirrored": flip,
        "bisect": (tuple(pi.normal), pi.offset),
    }
    return TransversalPartition(
        parts=parts,
        part_indices=(tuple(x1_idx), tuple(x2_idx), tuple(x3_idx)),
        query=q,
        guarantee=guarantee,
    )


def certify_partition(
    partition: TransversalPartition, budget: OracleBudget = DEFAULT_BUDGET
) -> CertificationResult:
    """True iff every checked transversal simplex contains q (closed).

    Exhaustive when the size product fits the budget; otherwise seeded random
    transversals, flagged by mode."""
    parts = partition.parts
    q = partition.query
    if len(parts) == 2 and q.dim == 1:
        ok = all(
            min(a.coords[0], b.coords[0]) <= q.coords[0] <= max(a.coords[0], b.coords[0])
            for a in parts[0].points
            for b in parts[1].points
        )
        res = CertificationResult(ok=ok, mode="exhaustive", checked=parts[0].size * parts[1].size)
        partition.certification = res
        return res
    if len(parts) != 3:
        raise PreconditionError("certify_partition expects 3 planar parts")
    rows, _ = integerize(
        [p.coords for part in parts for p in part.points] + [q.coords]
    )
    qi = rows[-1]
    offs = [0]
    for part in parts:
        offs.append(offs[-1] + part.size)
    vecs = [
        [(rows[k][0] - qi[0], rows[k][1] - qi[1]) for k in range(offs[i], offs[i + 1])]
        for i in range(3)
    ]
    product = parts[0].size * parts[1].size * parts[2].size
    if product <= budget.max_enumerations:
        ok, i, j, k = kernels.transversals_contain(
            [v[0] for v in vecs[0]],
            [v[1] for v in vecs[0]],
            [v[0] for v in vecs[1]],
            [v[1] for v in vecs[1]],
            [v[0] for v in vecs[2]],
            [v[1] for v in vecs[2]],
        )
        res = CertificationResult(
            ok=bool(ok),
            mode="exhaustive",
            checked=product,
            violation=None if ok else (i, j, k),
        )
    else:
        import random as _random

        from ._pykernels import _origin_in_closed_triangle

        rng = _random.Random(budget.seed)
        ok = True
        viol = None
        for _ in range(budget.sample_size):
            a = vecs[0][rng.randrange(len(vecs[0]))]
            b = vecs[1][rng.randrange(len(vecs[1]))]
            c = vecs[2][rng.randrange(len(vecs[2]))]
            if not _origin_in_closed_triangle(a[0], a[1], b[0], b[1], c[0], c[1]):
                ok = False
                viol = (a, b, c)
                break
        res = CertificationResult(
            ok=ok, mode="sampled", checked=budget.sample_size, violation=viol
        )
    partition.certification = res
    return res
