"""Exact low-dimensional linear programming and separation.

Seidel's randomized incremental LP over rationals: expected O(m) for fixed
dimension, exact pivots, deterministic via a fixed shuffle seed.  Used for
halfspace-intersection feasibility, strict/weak hyperplane separation and
convex-hull membership in dimensions up to ~7.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional, Sequence

from .core import Halfspace, OrientedHyperplane, Point, PointSet
from .errors import ConsistencyError, DimensionMismatchError, PreconditionError

_SHUFFLE_SEED = 0x5E1DE1


def _box_bound(constraints) -> int:
    """Rigorous coordinate bound: a nonempty rational polyhedron contains a
    point whose coordinates are ratios of subsystem determinants, so Hadamard's
    bound on the cleared-integer data caps them."""
    m = 1
    d = 0
    for a, b in constraints:
        d = max(d, len(a))
        den = math.lcm(*(x.denominator for x in list(a) + [b]))
        for x in list(a) + [b]:
            m = max(m, abs(int(x * den)))
    return (d + 1) ** (d + 1) * m ** (d + 1) + 1


def _seidel(constraints, c, bounds, rng) -> Optional[list[Fraction]]:
    """Minimize c.x subject to a.x <= b and per-variable bounds.

    Returns an optimal point, or None when infeasible.  Exact.
    """
    d = len(c)
    if d == 1:
        lo, hi = bounds[0]
        for a, b in constraints:
            av = a[0]
            if av == 0:
                if b < 0:
                    return None
            elif av > 0:
                hi = min(hi, b / av)
            else:
                lo = max(lo, b / av)
        if lo > hi:
            return None
        if c[0] > 0:
            return [lo]
        if c[0] < 0:
            return [hi]
        return [lo]

    order = list(constraints)
    rng.shuffle(order)
    x = [lo if ci > 0 else hi if ci < 0 else lo for ci, (lo, hi) in zip(c, bounds)]
    for t, (a, b) in enumerate(order):
        if sum(ai * xi for ai, xi in zip(a, x)) <= b:
            continue
        # optimum of the first t+1 constraints lies on a.x = b
        k = max(range(d), key=lambda i: abs(a[i]))
        if a[k] == 0:
            return None  # 0 <= b violated
        ak = a[k]
        rest = [i for i in range(d) if i != k]

        def reduce_row(row, rhs):
            f = row[k] / ak
            return [row[i] - f * a[i] for i in rest], rhs - f * b

        sub = [reduce_row(list(ra), rb) for ra, rb in order[:t]]
        lo_k, hi_k = bounds[k]
        ek = [Fraction(1 if i == k else 0) for i in range(d)]
        sub.append(reduce_row(ek, hi_k))               # x_k <= hi_k
        sub.append(reduce_row([-e for e in ek], -lo_k))  # -x_k <= -lo_k
        cf = c[k] / ak
        c_sub = [c[i] - cf * a[i] for i in rest]
        b_sub = [bounds[i] for i in rest]
        sol = _seidel(sub, c_sub, b_sub, rng)
        if sol is None:
            return None
        x = [Fraction(0)] * d
        for pos, i in enumerate(rest):
            x[i] = sol[pos]
        x[k] = (b - sum(a[i] * x[i] for i in rest)) / ak
    return x


def solve_constraints(constraints, dim, objective=None, seed=_SHUFFLE_SEED):
    """Feasible (optionally optimal) point for a.x <= b constraints, or None."""
    cons = [(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in constraints]
    c = [Fraction(0)] * dim if objective is None else [Fraction(x) for x in objective]
    bb = Fraction(_box_bound(cons) if cons else 1)
    bounds = [(-bb, bb)] * dim
    return _seidel(cons, c, bounds, random.Random(seed))


def lp_feasible(halfspaces: Sequence[Halfspace], dim: int | None = None) -> Optional[Point]:
    """A point in the intersection of the halfspaces, or None when empty.

    Exact over rationals; open halfspaces are handled by homogenization.
    Unbounded-but-feasible systems still return a finite witness.
    """
    hs = list(halfspaces)
    if not hs:
        if dim is None:
            raise PreconditionError("empty halfspace list needs an explicit dim")
        return Point([Fraction(0)] * dim)
    d = hs[0].dim
    if dim is not None and dim != d:
        raise DimensionMismatchError("dim argument disagrees with halfspaces")
    if any(h.dim != d for h in hs):
        raise DimensionMismatchError("halfspaces of mixed dimension")

    closed_rows = []
    open_rows = []
    for h in hs:
        a = tuple(-x * h.side for x in h.boundary.normal)
        b = -h.boundary.offset * h.side
        (closed_rows if h.closed else open_rows).append((a, b))
    if not open_rows:
        sol = solve_constraints(closed_rows, d)
        if sol is None:
            return None
        pt = Point(sol)
    else:
        # homogenize: x = y / tau with tau >= 1, strict rows get margin 1
        rows = []
        for a, b in closed_rows:
            rows.append((tuple(a) + (-b,), Fraction(0)))
        for a, b in open_rows:
            rows.append((tuple(a) + (-b,), Fraction(-1)))
        rows.append(((Fraction(0),) * d + (Fraction(-1),), Fraction(-1)))  # tau >= 1
        sol = solve_constraints(rows, d + 1)
        if sol is None:
            return None
        tau = sol[d]
        pt = Point([v / tau for v in sol[:d]])
    for h in hs:  # paranoia: the witness must verify exactly
        if not h.contains(pt):
            raise ConsistencyError("lp_feasible produced a non-verifying witness")
    return pt


def separable(A: PointSet, B: PointSet, strict: bool = True) -> Optional[OrientedHyperplane]:
    """Hyperplane with A on its (strictly, if strict) positive side and B on
    its (strictly, if strict) negative side; None when no separator exists."""
    if A.dim != B.dim:
        raise DimensionMismatchError("separable: dimension mismatch")
    if A.size == 0 or B.size == 0:
        raise PreconditionError("separable: both sets must be nonempty")
    d = A.dim
    if strict:
        # vars (u, c); margins normalize away by scaling
        rows = []
        for p in A:
            rows.append((tuple(-x for x in p.coords) + (Fraction(1),), Fraction(-1)))
        for p in B:
            rows.append((tuple(p.coords) + (Fraction(-1),), Fraction(-1)))
        sol = solve_constraints(rows, d + 1)
        if sol is None:
            return None
        hp = OrientedHyperplane(sol[:d], sol[d])
        if any(hp.eval(p) <= 0 for p in A) or any(hp.eval(p) >= 0 for p in B):
            raise ConsistencyError("separable produced a non-verifying witness")
        return hp
    for k in range(d):
        for s in (1, -1):
            rows = []
            for p in A:
                a = [-x for x in p.coords] + [Fraction(1)]
                rows.append((tuple(a[:k] + a[k + 1 :]), Fraction(s) * p.coords[k]))
            for p in B:
                a = list(p.coords) + [Fraction(-1)]
                rows.append((tuple(a[:k] + a[k + 1 :]), Fraction(-s) * p.coords[k]))
            sol = solve_constraints(rows, d)
            if sol is not None:
                u = list(sol[:k]) + [Fraction(s)] + list(sol[k : d - 1])
                hp = OrientedHyperplane(u, sol[d - 1])
                if all(hp.eval(p) >= 0 for p in A) and all(hp.eval(p) <= 0 for p in B):
                    return hp
    return None


def conv_contains(X: PointSet, q: Point) -> bool:
    """Exact membership of q in the closed convex hull of X."""
    if X.dim != q.dim:
        raise DimensionMismatchError("conv_contains: dimension mismatch")
    return separable(PointSet([q]), X, strict=True) is None
