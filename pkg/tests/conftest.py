import random
from fractions import Fraction

import pytest

from depthgeom.core import Point, PointSet
from depthgeom.depth import centerpoint
from depthgeom.instances import gen_random


def random_instance(seed, n, coord_range=10**4, dim=2):
    X, meta = gen_random(n, dim, "uniform-square", seed, coord_range=coord_range)
    return X


def random_query(seed, coord_range=10**4, dim=2):
    rng = random.Random(seed ^ 0xA5A5)
    return Point(tuple(rng.randrange(-coord_range, coord_range + 1) for _ in range(dim)))


def instance_with_center(seed, n, coord_range=10**4, tries=20):
    """General-position instance plus an interior deepest point that keeps
    X + {q} in general position (resampling the instance when the deepest
    region degenerates onto data lines)."""
    from depthgeom.core import integerize
    from depthgeom import kernels

    for k in range(tries):
        X = random_instance(seed * 1000 + k, n, coord_range)
        q, rep = centerpoint(X)
        if any(p == q for p in X.points):
            continue
        rows, _ = integerize([p.coords for p in X.points] + [q.coords])
        if kernels.has_collinear_triple([r[0] for r in rows], [r[1] for r in rows]):
            continue
        return X, q, rep
    pytest.skip(f"no general-position centerpoint instance for seed {seed}")
