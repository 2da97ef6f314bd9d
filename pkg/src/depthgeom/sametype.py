"""Planar same-type machinery: ham-sandwich cuts, well-separation, iterative
refinement and exhaustive certification of same-type transversals.

A family Y_1..Y_m has same-type transversals when every choice of one point
per set realizes one fixed orientation for each index triple.  Refinement
halves offending sets with ham-sandwich cuts until the planar well-separation
criterion holds; certification (not the criterion) is the source of truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from . import kernels
from .core import OrientedHyperplane, OrientedLine, PointSet, integerize
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionMismatchError,
    PreconditionError,
)
from .lp import separable
from .oracles import OracleBudget, DEFAULT_BUDGET


@dataclass(frozen=True)
class ColoredFamily:
    sets: tuple

    def __post_init__(self):
        if not (1 <= len(self.sets) <= 6):
            raise PreconditionError("family supports 1..6 color classes")
        seen = set()
        for s in self.sets:
            if not isinstance(s, PointSet) or s.dim != 2:
                raise DimensionMismatchError("family sets must be planar PointSets")
            if s.size == 0:
                raise PreconditionError("family sets must be nonempty")
            for p in s.points:
                if p.coords in seen:
                    raise PreconditionError("family sets must be pairwise disjoint")
                seen.add(p.coords)

    @property
    def m(self):
        return len(self.sets)


@dataclass(frozen=True)
class CertificationOutcome:
    ok: bool
    mode: str
    checked: int
    reference: Optional[dict] = None
    failing_triple: Optional[tuple] = None
    degenerate: bool = False

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SameTypeCertificate:
    subsets: tuple
    reference_orientation: dict
    sizes: tuple
    ratios: tuple
    size_bound: Fraction
    meets_bound: bool
    certification: CertificationOutcome


def _line_through(p: Point, r: Point) -> OrientedHyperplane:
    dx = r.coords[0] - p.coords[0]
    dy = r.coords[1] - p.coords[1]
    normal = (-dy, dx)
    return OrientedHyperplane(normal, normal[0] * p.coords[0] + normal[1] * p.coords[1])


def ham_sandwich_2d(A: PointSet, B: PointSet) -> OrientedLine:
    """A line leaving at most ceil(|A|/2) of A and ceil(|B|/2) of B strictly
    on each side.  Found exactly among lines through two of the points (a
    translate/rotate argument shows one such line always achieves the floor
    bounds)."""
    if A.dim != 2 or B.dim != 2:
        raise DimensionMismatchError("ham_sandwich_2d is planar")
    if A.size == 0 or B.size == 0:
        raise PreconditionError("ham_sandwich_2d needs nonempty sets")
    rows, _ = integerize([p.coords for p in A.points] + [p.coords for p in B.points])
    ax = [r[0] for r in rows[: A.size]]
    ay = [r[1] for r in rows[: A.size]]
    bx = [r[0] for r in rows[A.size :]]
    by = [r[1] for r in rows[A.size :]]
    i, j = kernels.hs_pair_line(ax, ay, bx, by)
    if i < 0:
        raise ConsistencyError("no balanced pair line exists")
    pts = list(A.points) + list(B.points)
    line = _line_through(pts[i], pts[j])
    for S in (A, B):
        left = sum(1 for p in S.points if line.eval(p) > 0)
        right = sum(1 for p in S.points if line.eval(p) < 0)
        if max(left, right) > -(-S.size // 2):
            raise ConsistencyError("ham-sandwich balance check failed")
    return line


def well_separated(family: ColoredFamily):
    """None when every disjoint index pair (I, J) with |I|+|J| <= 3 gives
    strictly line-separable hull unions; else the first violating pair."""
    m = family.m
    idx = range(m)
    cands = []
    for a in idx:
        for b in idx:
            if a != b:
                cands.append(((a,), (b,)))
    for a in idx:
        for b, c in combinations(idx, 2):
            if a not in (b, c):
                cands.append(((a,), (b, c)))
    seen = set()
    for I, J in sorted(cands, key=lambda t: (len(t[0]) + len(t[1]), t)):
        key = (I, J) if I <= J else (J, I)
        if key in seen:
            continue
        seen.add(key)
        U = PointSet([p for i in I for p in family.sets[i].points])
        V = PointSet([p for j in J for p in family.sets[j].points])
        if separable(U, V, strict=True) is None:
            return I, J
    return None


def certify_same_type(
    subsets, budget: OracleBudget = DEFAULT_BUDGET
) -> CertificationOutcome:
    """Exhaustive triple-orientation check when the transversal product fits
    the budget, else seeded random transversals; any zero orientation fails."""
    sets = [s if isinstance(s, PointSet) else PointSet(s) for s in subsets]
    m = len(sets)
    if m < 3:
        return CertificationOutcome(ok=True, mode="exhaustive", checked=0, reference={})
    rows, _ = integerize([p.coords for s in sets for p in s.points])
    offs = [0]
    for s in sets:
        offs.append(offs[-1] + s.size)
    xs = [[rows[k][0] for k in range(offs[i], offs[i + 1])] for i in range(m)]
    ys = [[rows[k][1] for k in range(offs[i], offs[i + 1])] for i in range(m)]
    product = 1
    for s in sets:
        product *= s.size
    if product <= budget.max_enumerations:
        ref = {}
        checked = 0
        for i, j, k in combinations(range(m), 3):
            sgn = kernels.triple_orient_status(xs[i], ys[i], xs[j], ys[j], xs[k], ys[k])
            checked += len(xs[i]) * len(xs[j]) * len(xs[k])
            if sgn == 0:
                return CertificationOutcome(
                    ok=False,
                    mode="exhaustive",
                    checked=checked,
                    failing_triple=(i, j, k),
                    degenerate=True,
                )
            ref[(i, j, k)] = sgn
        return CertificationOutcome(ok=True, mode="exhaustive", checked=checked, reference=ref)
    rng = random.Random(budget.seed)
    ref = {}
    first = [0] * m
    for i, j, k in combinations(range(m), 3):
        a, b, c = first[i], first[j], first[k]
        v = (xs[j][b] - xs[i][a]) * (ys[k][c] - ys[i][a]) - (ys[j][b] - ys[i][a]) * (
            xs[k][c] - xs[i][a]
        )
        s = (v > 0) - (v < 0)
        if s == 0:
            return CertificationOutcome(
                ok=False, mode="sampled", checked=1, failing_triple=(i, j, k), degenerate=True
            )
        ref[(i, j, k)] = s
    checked = 0
    for _ in range(budget.sample_size):
        pick = [rng.randrange(len(x)) for x in xs]
        checked += 1
        for i, j, k in combinations(range(m), 3):
            a, b, c = pick[i], pick[j], pick[k]
            v = (xs[j][b] - xs[i][a]) * (ys[k][c] - ys[i][a]) - (
                ys[j][b] - ys[i][a]
            ) * (xs[k][c] - xs[i][a])
            s = (v > 0) - (v < 0)
            if s != ref[(i, j, k)]:
                return CertificationOutcome(
                    ok=False,
                    mode="sampled",
                    checked=checked,
                    failing_triple=(i, j, k),
                    degenerate=(s == 0),
                )
    return CertificationOutcome(ok=True, mode="sampled", checked=checked, reference=ref)


def size_bound(m: int) -> Fraction:
    """Planar same-type size constant 3^(-3 * C(m-1, 2))."""
    from math import comb

    return Fraction(1, 3 ** (3 * comb(m - 1, 2)))


def _split_by_line(S: PointSet, line: OrientedHyperplane):
    left, right, on = [], [], []
    for i, p in enumerate(S.points):
        v = line.eval(p)
        if v > 0:
            left.append(i)
        elif v < 0:
            right.append(i)
        else:
            on.append(i)
    for k in on:  # balance the on-line points
        (left if len(left) <= len(right) else right).append(k)
    if not left:
        left.append(right.pop())
    if not right:
        right.append(left.pop())
    return S.subset(sorted(left)), S.subset(sorted(right))


def _median_split(S: PointSet):
    order = sorted(range(S.size), key=lambda i: S.points[i].coords)
    h = S.size // 2
    return S.subset(order[:h]), S.subset(order[h:])


def same_type_refine(
    family: ColoredFamily, budget: OracleBudget = DEFAULT_BUDGET
) -> SameTypeCertificate:
    """Shrink the classes with ham-sandwich cuts until every transversal
    realizes one order type; singletons are never refined.  The result is
    certified (exhaustively within budget) before being returned."""
    originals = family.sets
    m = family.m
    union = [p for s in originals for p in s.points]
    rows, _ = integerize([p.coords for p in union])
    if len(rows) >= 3 and kernels.has_collinear_triple(
        [r[0] for r in rows], [r[1] for r in rows]
    ):
        raise DegeneracyError("same_type_refine needs no three collinear points")
    current = list(originals)
    if m >= 3:
        max_iters = 2 * sum(s.size for s in originals) + 10
        for _ in range(max_iters):
            viol = well_separated(ColoredFamily(tuple(current)))
            if viol is None:
                outcome = certify_same_type(current, budget)
                if outcome.ok:
                    break
                involved = list(outcome.failing_triple)
            else:
                involved = sorted(set(viol[0]) | set(viol[1]))

            def resolved(cand):
                if viol is not None:
                    I, J = viol
                    U = PointSet([p for i in I for p in cand[i].points])
                    V = PointSet([p for j in J for p in cand[j].points])
                    return separable(U, V, strict=True) is not None
                i, j, k = involved
                ri, _ = integerize(
                    [p.coords for p in cand[i].points]
                    + [p.coords for p in cand[j].points]
                    + [p.coords for p in cand[k].points]
                )
                ni, nj = cand[i].size, cand[j].size
                return (
                    kernels.triple_orient_status(
                        [r[0] for r in ri[:ni]],
                        [r[1] for r in ri[:ni]],
                        [r[0] for r in ri[ni : ni + nj]],
                        [r[1] for r in ri[ni : ni + nj]],
                        [r[0] for r in ri[ni + nj :]],
                        [r[1] for r in ri[ni + nj :]],
                    )
                    != 0
                )

            splittable = sorted(
                (i for i in involved if current[i].size > 1),
                key=lambda i: -current[i].size,
            )
            if not splittable:
                raise ConsistencyError("violation among singletons in general position")
            s1 = splittable[0]
            s2 = splittable[1] if len(splittable) > 1 else None
            if s2 is not None:
                cut = ham_sandwich_2d(current[s1], current[s2])
                h1 = _split_by_line(current[s1], cut)
                h2 = _split_by_line(current[s2], cut)
            else:
                h1 = _median_split(current[s1])
                h2 = None
            options = []
            for a in h1:
                if h2 is None:
                    cand = list(current)
                    cand[s1] = a
                    options.append(cand)
                else:
                    for b in h2:
                        cand = list(current)
                        cand[s1] = a
                        cand[s2] = b
                        options.append(cand)
                    cand = list(current)
                    cand[s1] = a
                    options.append(cand)
            scored = []
            for cand in options:
                scored.append(
                    (
                        resolved(cand),
                        min(s.size for s in cand),
                        sum(s.size for s in cand),
                        options.index(cand),
                        cand,
                    )
                )
            scored.sort(key=lambda t: (not t[0], -t[1], -t[2], t[3]))
            current = scored[0][4]
        else:
            raise ConsistencyError("same-type refinement did not terminate")
        outcome = certify_same_type(current, budget)
        if not outcome.ok:
            raise ConsistencyError("refined family failed certification")
    else:
        outcome = certify_same_type(current, budget)

    bound = size_bound(m)
    sizes = tuple(s.size for s in current)
    ratios = tuple(Fraction(s.size, o.size) for s, o in zip(current, originals))
    import math

    meets = all(
        s.size >= max(1, math.ceil(bound * o.size))
        for s, o in zip(current, originals)
    )
    if not meets:
        raise ConsistencyError("refined sizes fall below the guaranteed bound")
    return SameTypeCertificate(
        subsets=tuple(current),
        reference_orientation=outcome.reference or {},
        sizes=sizes,
        ratios=ratios,
        size_bound=bound,
        meets_bound=meets,
        certification=outcome,
    )
