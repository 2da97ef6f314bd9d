import random
from fractions import Fraction

import pytest

from depthgeom.core import Halfspace, OrientedHyperplane, Point, PointSet
from depthgeom.errors import PreconditionError
from depthgeom.lp import conv_contains, lp_feasible, separable
from depthgeom.oracles import oracle_separable_strict_2d


def H(normal, offset, closed=True, side=1):
    return Halfspace(OrientedHyperplane(normal, offset), closed=closed, side=side)


def test_lp_interval():
    pt = lp_feasible([H((1,), 0), H((1,), 1, side=-1)])
    assert pt is not None and 0 <= pt.coords[0] <= 1


def test_lp_empty():
    assert lp_feasible([H((1,), 1), H((1,), 0, side=-1)]) is None


def test_lp_unbounded_feasible_returns_finite():
    pt = lp_feasible([H((1, 0), 0)])
    assert pt is not None


def test_lp_empty_list_needs_dim():
    with pytest.raises(PreconditionError):
        lp_feasible([])
    assert lp_feasible([], dim=3) == Point((0, 0, 0))


def test_lp_strict():
    # x > 0 and x < 0 infeasible; x > 0, x < 1 feasible
    assert lp_feasible([H((1,), 0, closed=False), H((1,), 0, closed=False, side=-1)]) is None
    pt = lp_feasible([H((1,), 0, closed=False), H((1,), 1, closed=False, side=-1)])
    assert pt is not None and 0 < pt.coords[0] < 1


def test_separable_examples():
    A = PointSet([(0, 0)])
    B = PointSet([(2, 0)])
    hp = separable(A, B, strict=True)
    assert hp is not None
    assert hp.eval(Point((0, 0))) > 0 and hp.eval(Point((2, 0))) < 0
    A2 = PointSet([(0, 0), (2, 2)])
    B2 = PointSet([(2, 0), (0, 2)])
    assert separable(A2, B2, strict=True) is None


def test_separable_weak_touching():
    A = PointSet([(0, 0), (1, 0)])
    B = PointSet([(1, 0), (2, 0)])
    # hulls share the point (1,0): weakly separable, not strictly
    assert separable(PointSet([(0, 0)]), B, strict=True) is not None
    hp = separable(A, B, strict=False)
    assert hp is not None
    assert all(hp.eval(p) >= 0 for p in A.points)
    assert all(hp.eval(p) <= 0 for p in B.points)


def test_separable_vs_candidate_oracle():
    rng = random.Random(12)
    for trial in range(60):
        na, nb = rng.randrange(1, 7), rng.randrange(1, 7)
        pa, pb = set(), set()
        while len(pa) < na:
            pa.add((rng.randrange(-15, 16), rng.randrange(-15, 16)))
        while len(pb) < nb:
            c = (rng.randrange(-15, 16), rng.randrange(-15, 16))
            if c not in pa:
                pb.add(c)
        A, B = PointSet(list(pa)), PointSet(list(pb))
        got = separable(A, B, strict=True) is not None
        want = oracle_separable_strict_2d(A, B)
        assert got == want, (pa, pb)


def test_conv_contains():
    X = PointSet([(0, 0), (4, 0), (0, 4)])
    assert conv_contains(X, Point((1, 1)))
    assert conv_contains(X, Point((0, 0)))  # vertex is in the closed hull
    assert conv_contains(X, Point((2, 2)))  # on the edge
    assert not conv_contains(X, Point((3, 3)))
