"""depthgeom: exact data-depth geometry with certified constructions.

Computes Tukey and simplicial depth, centerpoints, projection depth,
same-type refinements, transversal partitions with containment guarantees,
and depth variants of Helly/Kirchberger witnesses -- all over exact rational
arithmetic, with independent brute-force oracles for verification.
"""

from .core import (
    Halfspace,
    OrientedHyperplane,
    OrientedLine,
    Point,
    PointSet,
    Rational,
    orientation,
)
from .depth import DepthReport, centerpoint, max_separable_subset, simplicial_depth, tukey_depth
from .lp import conv_contains, lp_feasible, separable

__version__ = "0.1.0"

__all__ = [
    "Halfspace",
    "OrientedHyperplane",
    "OrientedLine",
    "Point",
    "PointSet",
    "Rational",
    "orientation",
    "DepthReport",
    "tukey_depth",
    "simplicial_depth",
    "centerpoint",
    "max_separable_subset",
    "lp_feasible",
    "separable",
    "conv_contains",
    "__version__",
]
