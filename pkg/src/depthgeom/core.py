"""Exact rational geometric primitives.

All coordinates are `fractions.Fraction` values (arbitrary-precision,
canonical form), so every predicate in the library is exact.  Degenerate
inputs are rejected with typed errors at construction instead of being
perturbed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegeneracyError, DimensionMismatchError, PreconditionError

Rational = Fraction


def to_rational(value) -> Fraction:
    """Parse ints, 'p/q' strings, decimal strings and floats into exact rationals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to Rational")


class Point:
    """Immutable point with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(to_rational(c) for c in coords))
        if not self.coords:
            raise PreconditionError("point needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Point(%s)" % ", ".join(str(c) for c in self.coords)

    def __setattr__(self, *a):
        raise AttributeError("Point is immutable")


class PointSet:
    """Ordered list of points of a common dimension with optional positive
    integer multiplicities (n = total multiplicity)."""

    __slots__ = ("dim", "points", "multiplicity")

    def __init__(self, points: Sequence, dim: int | None = None, multiplicity=None):
        pts = tuple(p if isinstance(p, Point) else Point(p) for p in points)
        if dim is None:
            if not pts:
                raise PreconditionError("empty point set needs an explicit dim")
            dim = pts[0].dim
        for p in pts:
            if p.dim != dim:
                raise DimensionMismatchError(
                    f"point of dimension {p.dim} in a set of dimension {dim}"
                )
        if multiplicity is None:
            mult = (1,) * len(pts)
        else:
            mult = tuple(int(m) for m in multiplicity)
            if len(mult) != len(pts):
                raise PreconditionError("multiplicity length must match points")
            if any(m < 1 for m in mult):
                raise PreconditionError("multiplicities must be positive")
        seen = set()
        for p in pts:
            if p.coords in seen:
                raise DegeneracyError(
                    "coincident points; use multiplicities (PointSet.merged)"
                )
            seen.add(p.coords)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicity", mult)

    @classmethod
    def merged(cls, points: Sequence, dim: int | None = None, multiplicity=None) -> "PointSet":
        """Build a PointSet merging duplicate coordinates into multiplicities."""
        pts = [p if isinstance(p, Point) else Point(p) for p in points]
        if multiplicity is None:
            multiplicity = [1] * len(pts)
        order: list[Point] = []
        weight: dict[tuple, int] = {}
        for p, m in zip(pts, multiplicity):
            if p.coords not in weight:
                order.append(p)
                weight[p.coords] = 0
            weight[p.coords] += int(m)
        return cls(order, dim=dim, multiplicity=[weight[p.coords] for p in order])

    @property
    def size(self) -> int:
        """Number of distinct points."""
        return len(self.points)

    @property
    def n(self) -> int:
        """Total weight (sum of multiplicities)."""
        return sum(self.multiplicity)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def subset(self, indices: Iterable[int]) -> "PointSet":
        idx = list(indices)
        return PointSet(
            [self.points[i] for i in idx],
            dim=self.dim,
            multiplicity=[self.multiplicity[i] for i in idx],
        )

    def __repr__(self):
        return f"PointSet(dim={self.dim}, size={self.size}, n={self.n})"

    def __setattr__(self, *a):
        raise AttributeError("PointSet is immutable")


class OrientedHyperplane:
    """normal . y >= offset is the positive side."""

    __slots__ = ("normal", "offset")

    def __init__(self, normal: Iterable, offset):
        object.__setattr__(self, "normal", tuple(to_rational(c) for c in normal))
        object.__setattr__(self, "offset", to_rational(offset))
        if all(c == 0 for c in self.normal):
            raise DegeneracyError("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def eval(self, point) -> Fraction:
        coords = point.coords if isinstance(point, Point) else point
        if len(coords) != len(self.normal):
            raise DimensionMismatchError("point/hyperplane dimension mismatch")
        return sum(a * x for a, x in zip(self.normal, coords)) - self.offset

    def side_of(self, point) -> int:
        v = self.eval(point)
        return (v > 0) - (v < 0)

    def __repr__(self):
        return f"OrientedHyperplane(normal={self.normal}, offset={self.offset})"

    def __setattr__(self, *a):
        raise AttributeError("OrientedHyperplane is immutable")


# In the plane hyperplanes are lines; same carrier type.
OrientedLine = OrientedHyperplane


class Halfspace:
    __slots__ = ("boundary", "closed", "side")

    def __init__(self, boundary: OrientedHyperplane, closed: bool = True, side: int = 1):
        if side not in (1, -1):
            raise PreconditionError("side must be +1 or -1")
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "closed", bool(closed))
        object.__setattr__(self, "side", side)

    @property
    def dim(self) -> int:
        return self.boundary.dim

    def contains(self, point) -> bool:
        v = self.boundary.eval(point) * self.side
        return v >= 0 if self.closed else v > 0

    def __repr__(self):
        rel = (">=" if self.side > 0 else "<=") if self.closed else (">" if self.side > 0 else "<")
        return f"Halfspace(normal={self.boundary.normal} . y {rel} {self.boundary.offset})"

    def __setattr__(self, *a):
        raise AttributeError("Halfspace is immutable")


def sign(x) -> int:
    return (x > 0) - (x < 0)


def det_sign(rows: Sequence[Sequence[Fraction]]) -> int:
    """Sign of the determinant of a square rational matrix (Bareiss, exact)."""
    n = len(rows)
    # clear denominators row by row; only the sign is needed
    m: list[list[int]] = []
    for row in rows:
        den = math.lcm(*(f.denominator for f in row)) if row else 1
        m.append([int(f * den) for f in row])
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sgn * sign(m[n - 1][n - 1])


def orientation(points: Sequence[Point]) -> int:
    """Orientation (order-type sign) of a (d+1)-tuple of d-dimensional points.

    Sign of det[(x_1;1), ..., (x_{d+1};1)], computed exactly.
    """
    pts = [p if isinstance(p, Point) else Point(p) for p in points]
    d = pts[0].dim
    if len(pts) != d + 1:
        raise DimensionMismatchError(f"orientation in dimension {d} needs {d + 1} points")
    for p in pts:
        if p.dim != d:
            raise DimensionMismatchError("orientation: points of mixed dimension")
    if d == 2:
        (ax, ay), (bx, by), (cx, cy) = (p.coords for p in pts)
        return sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    rows = [list(p.coords) + [Fraction(1)] for p in pts]
    return det_sign(rows)


def integerize(points: Iterable[Sequence[Fraction]]) -> tuple[list[tuple[int, ...]], int]:
    """Scale a collection of rational coordinate tuples by the lcm of all
    denominators.  Scaling by a positive constant preserves every predicate
    used in the library (orientation signs, halfspace counts, convexity)."""
    rows = [tuple(c if isinstance(c, Fraction) else to_rational(c) for c in p) for p in points]
    dens = [c.denominator for row in rows for c in row]
    scale = math.lcm(*dens) if dens else 1
    return [tuple(int(c * scale) for c in row) for row in rows], scale


def ccw_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Exact angular comparator for nonzero integer vectors; angles in [0, 2pi)
    measured from the positive x-axis."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cr = a[0] * b[1] - a[1] * b[0]
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def convex_hull_2d(points: Sequence[Point]) -> list[int]:
    """Indices of hull vertices in counterclockwise order (collinear interior
    points excluded).  Exact Andrew monotone chain."""
    pts = [(p.coords[0], p.coords[1], i) for i, p in enumerate(points)]
    pts.sort()
    uniq = []
    for x, y, i in pts:
        if not uniq or (uniq[-1][0], uniq[-1][1]) != (x, y):
            uniq.append((x, y, i))
    if len(uniq) == 1:
        return [uniq[0][2]]
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lower: list = []
    for p in uniq:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(uniq):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return [p[2] for p in lower[:-1]] + [p[2] for p in upper[:-1]]


def in_general_position_2d(points: Sequence[Point], weights=None) -> bool:
    """True when no three of the (distinct) points are collinear."""
    coords, _ = integerize([p.coords for p in points])
    n = len(coords)
    if len(set(coords)) != n:
        return False
    for i in range(n):
        ox, oy = coords[i]
        dirs = []
        for j in range(n):
            if j == i:
                continue
            dx, dy = coords[j][0] - ox, coords[j][1] - oy
            # canonical direction of the undirected line through i and j
            if (dy, dx) < (0, 0) or (dy == 0 and dx < 0):
                dx, dy = -dx, -dy
            g = math.gcd(abs(dx), abs(dy))
            dirs.append((dx // g, dy // g))
        dirs.sort()
        for a, b in zip(dirs, dirs[1:]):
            if a == b:
                return False
    return True
