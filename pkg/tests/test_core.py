import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depthgeom.core import (
    Halfspace,
    OrientedHyperplane,
    Point,
    PointSet,
    ccw_cmp,
    convex_hull_2d,
    det_sign,
    in_general_position_2d,
    integerize,
    orientation,
    to_rational,
)
from depthgeom.errors import DegeneracyError, DimensionMismatchError, PreconditionError


def P(*coords):
    return Point(coords)


def test_orientation_examples():
    assert orientation([P(0, 0), P(1, 0), P(0, 1)]) == 1
    assert orientation([P(0, 0), P(1, 1), P(2, 2)]) == 0
    assert orientation([P(0, 0), P(0, 1), P(1, 0)]) == -1


def test_orientation_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        orientation([P(0, 0), P(1, 0)])
    with pytest.raises(DimensionMismatchError):
        orientation([P(0, 0), P(1, 0), P(0, 1, 2)])


coord = st.fractions(
    st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=9)
)


@settings(max_examples=120, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=3, max_size=3), st.permutations([0, 1, 2]))
def test_orientation_antisymmetry(pts, perm):
    pts = [Point(p) for p in pts]
    base = orientation(pts)
    swapped = orientation([pts[perm[0]], pts[perm[1]], pts[perm[2]]])
    parity = 1
    seen = list(perm)
    # sign of the permutation
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if seen[i] > seen[j])
    parity = -1 if inv % 2 else 1
    assert swapped == parity * base


def test_orientation_3d():
    assert orientation([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)]) == 1
    assert orientation([P(0, 0, 0), P(0, 1, 0), P(1, 0, 0), P(0, 0, 1)]) == -1
    assert orientation([P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(0, 0, 1)]) == 0


def test_det_sign_matches_float():
    rng = random.Random(5)
    for _ in range(60):
        d = rng.randrange(2, 5)
        m = [[Fraction(rng.randrange(-9, 10)) for _ in range(d)] for _ in range(d)]
        import numpy as np

        f = float(np.linalg.det([[float(x) for x in row] for row in m]))
        s = det_sign(m)
        if abs(f) > 1e-6:
            assert s == (1 if f > 0 else -1)


def test_to_rational_forms():
    assert to_rational("1/2") == Fraction(1, 2)
    assert to_rational("0.25") == Fraction(1, 4)
    assert to_rational(3) == 3
    assert to_rational("-7/3") == Fraction(-7, 3)
    with pytest.raises(ValueError):
        to_rational("abc")


def test_pointset_invariants():
    X = PointSet([(0, 0), (1, 1)], multiplicity=[2, 3])
    assert X.n == 5 and X.size == 2
    with pytest.raises(DegeneracyError):
        PointSet([(0, 0), (0, 0)])
    with pytest.raises(PreconditionError):
        PointSet([(0, 0)], multiplicity=[0])
    with pytest.raises(DimensionMismatchError):
        PointSet([(0, 0), (1, 1, 1)])
    merged = PointSet.merged([(0, 0), (0, 0), (1, 1)])
    assert merged.size == 2 and merged.n == 3


def test_hyperplane_halfspace():
    h = OrientedHyperplane((1, 0), Fraction(1, 2))
    assert h.side_of(P(1, 0)) == 1
    assert h.side_of(P(0, 0)) == -1
    assert h.side_of(P(Fraction(1, 2), 3)) == 0
    hs = Halfspace(h, closed=False, side=1)
    assert not hs.contains(P(Fraction(1, 2), 3))
    assert Halfspace(h, closed=True, side=1).contains(P(Fraction(1, 2), 3))
    with pytest.raises(DegeneracyError):
        OrientedHyperplane((0, 0), 1)


def test_integerize_scales_consistently():
    rows, scale = integerize([(Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(0))])
    assert scale == 6
    assert rows == [(3, 2), (12, 0)]


def test_convex_hull_and_general_position():
    pts = [P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(2, 2)]
    hull = convex_hull_2d(pts)
    assert sorted(hull) == [0, 1, 2, 3]
    assert not in_general_position_2d(pts + [P(1, 1)])  # (0,0),(1,1),(2,2) collinear
    assert in_general_position_2d([P(0, 0), P(4, 1), P(1, 4)])


def test_ccw_cmp_total_order():
    vecs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    for i in range(len(vecs)):
        for j in range(len(vecs)):
            c = ccw_cmp(vecs[i], vecs[j])
            assert c == (-1 if i < j else (1 if i > j else 0))
