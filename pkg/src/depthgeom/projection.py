"""Split-and-project depth in the plane.

A line pi through the query q splits X into the sides above and below; each
point projects along its ray from q onto a parallel copy of pi (above onto
pi_plus, below onto pi_minus).  The projected depth of q w.r.t. pi is the
best min of the two 1-dimensional Tukey depths over all lines through q, and
the projected depth of q w.r.t. X is the worst of that over all pi.

The key coordinate: with pi = {y : u.(y-q) = 0}, direction d0 = rot90(u) and
offset parameter s > 0 (pi_plus = {u.(y-q) = s|u|^2}), the image of x on its
parallel line has coordinate rho(x) = s * (d0.(x-q)) / (u.(x-q)) along d0
when x lies above, and -rho(x) when x lies below; the reflection of a below
point through q onto pi_plus sits at +rho(x).  Orders of images do not depend
on s (tested, not assumed).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import OrientedHyperplane, Point, PointSet
from .depth import tukey_depth
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionMismatchError,
    PreconditionError,
)


@dataclass(frozen=True)
class ProjectionSplit:
    pi: OrientedHyperplane
    pi_plus: OrientedHyperplane
    pi_minus: OrientedHyperplane
    x_plus: PointSet
    x_minus: PointSet
    on_pi: tuple
    plus_sources: tuple
    minus_sources: tuple
    plus_coords: tuple
    minus_coords: tuple
    base_plus: Point
    base_minus: Point
    direction: tuple


@dataclass(frozen=True)
class ProjectionDepthReport:
    value: Fraction
    witness_line: Optional[tuple]
    witness_pi: Optional[OrientedHyperplane]


@dataclass(frozen=True)
class WitnessLine:
    """Line through `point` with direction vector `direction`."""

    point: Point
    direction: tuple
    coordinate: Fraction
    side_values: tuple


def _check_pi(X: PointSet, q: Point, pi: OrientedHyperplane):
    if X.dim != 2 or q.dim != 2 or pi.dim != 2:
        raise DimensionMismatchError("projection operations are planar")
    if pi.eval(q) != 0:
        raise PreconditionError("pi must pass through q")


def _side_data(X: PointSet, q: Point, pi: OrientedHyperplane, offset: Fraction):
    """(above, below, on) where above/below are lists of (rho, weight, index)."""
    u = pi.normal
    d0 = (-u[1], u[0])
    above, below, on = [], [], []
    for idx, (p, w) in enumerate(zip(X.points, X.multiplicity)):
        if p == q:
            raise PreconditionError("q must not belong to X")
        vx = (p.coords[0] - q.coords[0], p.coords[1] - q.coords[1])
        h = u[0] * vx[0] + u[1] * vx[1]
        if h == 0:
            on.append(idx)
            continue
        rho = offset * (d0[0] * vx[0] + d0[1] * vx[1]) / h
        (above if h > 0 else below).append((rho, w, idx))
    return u, d0, above, below, on


def project_split(
    X: PointSet, q: Point, pi: OrientedHyperplane, offset=Fraction(1)
) -> ProjectionSplit:
    """Project X along rays from q onto the two parallels of pi.

    Points strictly above pi land on pi_plus, strictly below on pi_minus;
    points on pi are excluded and reported.  offset scales the parallel
    distance (the combinatorics of the images do not depend on it)."""
    _check_pi(X, q, pi)
    offset = Fraction(offset)
    if offset <= 0:
        raise PreconditionError("offset must be positive")
    u, d0, above, below, on = _side_data(X, q, pi, offset)
    uu = u[0] * u[0] + u[1] * u[1]
    base_plus = Point((q.coords[0] + offset * u[0], q.coords[1] + offset * u[1]))
    base_minus = Point((q.coords[0] - offset * u[0], q.coords[1] - offset * u[1]))
    qdot = u[0] * q.coords[0] + u[1] * q.coords[1]
    pi_plus = OrientedHyperplane(u, qdot + offset * uu)
    pi_minus = OrientedHyperplane(u, qdot - offset * uu)

    def images(entries, base, sign):
        pts, wts, srcs, coords = [], [], [], []
        for rho, w, idx in entries:
            t = sign * rho
            pts.append(
                Point((base.coords[0] + t * d0[0], base.coords[1] + t * d0[1]))
            )
            wts.append(w)
            srcs.append(idx)
            coords.append(t)
        return pts, wts, srcs, coords

    ppts, pw, psrc, pcoord = images(above, base_plus, 1)
    mpts, mw, msrc, mcoord = images(below, base_minus, -1)
    x_plus = PointSet.merged(ppts, dim=2, multiplicity=pw) if ppts else PointSet([], dim=2)
    x_minus = PointSet.merged(mpts, dim=2, multiplicity=mw) if mpts else PointSet([], dim=2)
    for img in ppts:
        if pi_plus.eval(img) != 0:
            raise ConsistencyError("plus image off its line")
    for img in mpts:
        if pi_minus.eval(img) != 0:
            raise ConsistencyError("minus image off its line")
    return ProjectionSplit(
        pi=pi,
        pi_plus=pi_plus,
        pi_minus=pi_minus,
        x_plus=x_plus,
        x_minus=x_minus,
        on_pi=tuple(X.points[i] for i in on),
        plus_sources=tuple(psrc),
        minus_sources=tuple(msrc),
        plus_coords=tuple(pcoord),
        minus_coords=tuple(mcoord),
        base_plus=base_plus,
        base_minus=base_minus,
        direction=d0,
    )


class _Weighted1D:
    """Sorted multiset of rationals with prefix weights; closed 1D depth."""

    def __init__(self, entries):
        pairs = sorted((v, w) for v, w, _ in entries)
        self.vals = [v for v, _ in pairs]
        self.pre = [0]
        for _, w in pairs:
            self.pre.append(self.pre[-1] + w)
        self.total = self.pre[-1]

    def w_le(self, t):
        return self.pre[bisect_right(self.vals, t)]

    def w_ge(self, t):
        return self.total - self.pre[bisect_left(self.vals, t)]

    def depth(self, t):
        return min(self.w_le(t), self.w_ge(t))


def _value_at(aplus: _Weighted1D, aminus: _Weighted1D, t) -> Fraction:
    dp = Fraction(aplus.depth(t), aplus.total)
    dm = Fraction(aminus.depth(-t), aminus.total)
    return min(dp, dm)


def projection_depth_wrt(X: PointSet, q: Point, pi: OrientedHyperplane) -> ProjectionDepthReport:
    """max over lines ell through q of min of the two normalized 1D depths of
    the projected images; exact enumeration over the image coordinates."""
    _check_pi(X, q, pi)
    u, d0, above, below, _on = _side_data(X, q, pi, Fraction(1))
    if not above or not below:
        raise PreconditionError("projection depth w.r.t. pi needs points on both sides")
    aplus = _Weighted1D([(rho, w, i) for rho, w, i in above])
    # below-side images live at coordinate -rho on pi_minus
    aminus = _Weighted1D([(-rho, w, i) for rho, w, i in below])
    cands = sorted(set(aplus.vals) | {-v for v in aminus.vals})
    ts = [cands[0] - 1]
    for a, b in zip(cands, cands[1:]):
        ts.append(a)
        ts.append((a + b) / 2)
    ts.append(cands[-1])
    ts.append(cands[-1] + 1)
    best_t = ts[0]
    best_v = Fraction(-1)
    for t in ts:
        v = _value_at(aplus, aminus, t)
        if v > best_v:
            best_v, best_t = v, t
    wdir = (u[0] + best_t * d0[0], u[1] + best_t * d0[1])
    return ProjectionDepthReport(value=best_v, witness_line=wdir, witness_pi=pi)


def value_at_line(X: PointSet, q: Point, pi: OrientedHyperplane, direction) -> Fraction:
    """min of the two normalized projected 1D depths for the specific line
    through q with the given direction vector."""
    _check_pi(X, q, pi)
    u, d0, above, below, _on = _side_data(X, q, pi, Fraction(1))
    if not above or not below:
        raise PreconditionError("projection value needs points on both sides of pi")
    w = (Fraction(direction[0]), Fraction(direction[1]))
    uw = u[0] * w[0] + u[1] * w[1]
    if uw == 0:
        raise PreconditionError("line parallel to pi never meets the parallels")
    t = (d0[0] * w[0] + d0[1] * w[1]) / uw
    aplus = _Weighted1D(above)
    aminus = _Weighted1D([(-rho, wt, i) for rho, wt, i in below])
    return _value_at(aplus, aminus, t)


def _event_normals(X: PointSet, q: Point):
    dirs = set()
    for p in X.points:
        vx = p.coords[0] - q.coords[0]
        vy = p.coords[1] - q.coords[1]
        if vx == 0 and vy == 0:
            raise PreconditionError("q must not belong to X")
        dirs.add((-vy, vx))
        dirs.add((vy, -vx))
    return dirs


def projection_depth(X: PointSet, q: Point) -> ProjectionDepthReport:
    """min over the combinatorially distinct lines pi through q (one sample
    per open angular interval between data directions) of the fixed-pi value;
    0 when q lies outside the hull (some pi has an empty open side)."""
    if X.dim != 2 or q.dim != 2:
        raise DimensionMismatchError("projection_depth is planar")
    if X.n < 2:
        raise PreconditionError("projection_depth needs at least two points")
    from .core import integerize

    rows, _ = integerize([p.coords for p in X.points] + [q.coords])
    qi = rows[-1]
    events = set()
    for row in rows[:-1]:
        vx, vy = row[0] - qi[0], row[1] - qi[1]
        if vx == 0 and vy == 0:
            raise PreconditionError("q must not belong to X")
        events.add((-vy, vx))
        events.add((vy, -vx))
    from functools import cmp_to_key

    from ._pykernels import _angle_cmp

    evs = sorted(events, key=cmp_to_key(lambda a, b: _angle_cmp(a[0], a[1], b[0], b[1])))
    samples = []
    m = len(evs)
    for i in range(m):
        a = evs[i]
        b = evs[(i + 1) % m]
        cr = a[0] * b[1] - a[1] * b[0]
        dt = a[0] * b[0] + a[1] * b[1]
        if cr == 0 and dt > 0:
            continue  # coincident directions
        if cr == 0 and dt < 0:
            samples.append((-a[1], a[0]))  # half-turn gap: midpoint
        else:
            samples.append((a[0] + b[0], a[1] + b[1]))
    best: Optional[ProjectionDepthReport] = None
    for unorm in samples:
        pi = OrientedHyperplane(unorm, unorm[0] * q.coords[0] + unorm[1] * q.coords[1])
        above = below = 0
        for row, w in zip(rows[:-1], X.multiplicity):
            h = unorm[0] * (row[0] - qi[0]) + unorm[1] * (row[1] - qi[1])
            if h > 0:
                above += w
            elif h < 0:
                below += w
            else:
                raise ConsistencyError("sample direction hit a data point")
        if above == 0 or below == 0:
            return ProjectionDepthReport(value=Fraction(0), witness_line=None, witness_pi=pi)
        rep = projection_depth_wrt(X, q, pi)
        if best is None or rep.value < best.value:
            best = rep
    if best is None:
        raise ConsistencyError("no candidate hyperplane was sampled")
    return best


def _median_interval(entries, threshold, lo_sentinel, hi_sentinel):
    """[lo, hi] holding every t whose one-sided weights reach threshold."""
    box = _Weighted1D(entries)
    if threshold <= 0:
        return lo_sentinel, hi_sentinel
    lo = None
    for v in box.vals:
        if box.w_le(v) >= threshold:
            lo = v
            break
    hi = None
    for v in reversed(box.vals):
        if box.w_ge(v) >= threshold:
            hi = v
            break
    if lo is None or hi is None:
        raise ConsistencyError("median interval empty below the 1/2 threshold")
    return lo, hi


def projection_witness_line(
    X: PointSet, q: Point, pi: OrientedHyperplane, epsilon
) -> WitnessLine:
    """Constructive deep line: reflect the below side through q onto pi_plus,
    intersect the two one-dimensional deep regions, and return the line of a
    common coordinate.  Both projected 1D depths of the result are at least
    min(tukey(q), 1/2) - epsilon (verified exactly before returning)."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise PreconditionError("epsilon must be positive")
    _check_pi(X, q, pi)
    tau = tukey_depth(X, q).normalized
    if tau <= 0:
        raise PreconditionError("projection witness needs positive Tukey depth")
    delta = min(tau, Fraction(1, 2))
    dprime = delta - epsilon
    u, d0, above, below, _on = _side_data(X, q, pi, Fraction(1))
    if not above or not below:
        raise PreconditionError("pi must have points on both open sides")
    wa = sum(w for _, w, _ in above)
    wb = sum(w for _, w, _ in below)
    vals = [rho for rho, _, _ in above] + [rho for rho, _, _ in below]
    lo_s, hi_s = min(vals) - 1, max(vals) + 1
    lo1, hi1 = _median_interval(above, dprime * wa, lo_s, hi_s)
    # reflections of the below side onto pi_plus sit at +rho
    lo2, hi2 = _median_interval(below, dprime * wb, lo_s, hi_s)
    lo, hi = max(lo1, lo2), min(hi1, hi2)
    if lo > hi:
        raise ConsistencyError("deep 1D regions do not intersect")
    t = (lo + hi) / 2
    wdir = (u[0] + t * d0[0], u[1] + t * d0[1])
    got = value_at_line(X, q, pi, wdir)
    if got < delta - epsilon:
        raise ConsistencyError("witness line misses the depth bound")
    dp = Fraction(_Weighted1D(above).depth(t), wa)
    dm = Fraction(_Weighted1D([(-r, w, i) for r, w, i in below]).depth(-t), wb)
    return WitnessLine(point=q, direction=wdir, coordinate=t, side_values=(dp, dm))
