"""Kernel dispatch: compiled exact-integer kernels with a pure-Python twin.

The compiled module (``depthgeom._ckernels``, built from Cython) evaluates the
same predicates in int64/int128 arithmetic and is exact as long as every input
coordinate fits the magnitude guard below.  The dispatchers in this module
route each call to the compiled kernel when it is available and safe, and to
``depthgeom._pykernels`` (arbitrary-precision Python ints) otherwise.

Set DEPTHGEOM_PURE=1 to force the pure path (used by the benchmark and by the
kernel-equivalence tests).
"""

from __future__ import annotations

import os

from . import _pykernels as _py

try:  # pragma: no cover - exercised via the build
    from . import _ckernels as _c

    HAVE_EXT = True
except ImportError:  # pragma: no cover
    _c = None
    HAVE_EXT = False

FORCE_PURE = os.environ.get("DEPTHGEOM_PURE", "") not in ("", "0")

# Differences of guarded values fit int64 and their pairwise products fit
# int128 (|v| <= 2^61 => |diff| <= 2^62, |diff*diff| <= 2^124).
MAX_ABS = 1 << 61


def _fits(*seqs) -> bool:
    if _c is None or FORCE_PURE:
        return False
    for seq in seqs:
        for v in seq:
            if v > MAX_ABS or v < -MAX_ABS:
                return False
    return True


def backend_name() -> str:
    return "compiled" if (HAVE_EXT and not FORCE_PURE) else "pure"


def orient2d(ax, ay, bx, by, cx, cy):
    if _fits((ax, ay, bx, by, cx, cy)):
        return _c.orient2d(ax, ay, bx, by, cx, cy)
    return _py.orient2d(ax, ay, bx, by, cx, cy)


def count_halfplane(vx, vy, w, ux, uy):
    if _fits(vx, vy, (ux, uy)):
        return _c.count_halfplane(list(vx), list(vy), list(w), ux, uy)
    return _py.count_halfplane(vx, vy, w, ux, uy)


def tukey_sweep(vx, vy, w):
    if _fits(vx, vy):
        return _c.tukey_sweep(list(vx), list(vy), list(w))
    return _py.tukey_sweep(vx, vy, w)


def tukey_batch(xs, ys, w, qxn, qyn, qden):
    # the kernel centers queries itself, so x * qden - qn must stay guarded
    if _c is not None and not FORCE_PURE and xs:
        mx = max(max(abs(v) for v in xs), max(abs(v) for v in ys))
        mq = max(max((abs(v) for v in qxn), default=0), max((abs(v) for v in qyn), default=0))
        md = max((abs(v) for v in qden), default=1)
        if mx * md + mq <= MAX_ABS:
            return _c.tukey_batch(
                list(xs), list(ys), list(w), list(qxn), list(qyn), list(qden)
            )
    return _py.tukey_batch(xs, ys, w, qxn, qyn, qden)


def simplicial_enum(vx, vy):
    if _fits(vx, vy):
        return _c.simplicial_enum(list(vx), list(vy))
    return _py.simplicial_enum(vx, vy)


def simplicial_fast(vx, vy):
    if _fits(vx, vy):
        return _c.simplicial_fast(list(vx), list(vy))
    return _py.simplicial_fast(vx, vy)


def pair_counts(xs, ys, w):
    if _fits(xs, ys):
        return _c.pair_counts(list(xs), list(ys), list(w))
    return _py.pair_counts(xs, ys, w)


def count_two_below(dx, dy, ux, uy):
    if _fits(dx, dy, ux, uy):
        return _c.count_two_below(list(dx), list(dy), list(ux), list(uy))
    return _py.count_two_below(dx, dy, ux, uy)


def transversals_contain(ax, ay, bx, by, cx, cy):
    if _fits(ax, ay, bx, by, cx, cy):
        return _c.transversals_contain(
            list(ax), list(ay), list(bx), list(by), list(cx), list(cy)
        )
    return _py.transversals_contain(ax, ay, bx, by, cx, cy)


def triple_orient_status(ax, ay, bx, by, cx, cy):
    if _fits(ax, ay, bx, by, cx, cy):
        return _c.triple_orient_status(
            list(ax), list(ay), list(bx), list(by), list(cx), list(cy)
        )
    return _py.triple_orient_status(ax, ay, bx, by, cx, cy)


def hs_pair_line(ax, ay, bx, by):
    if _fits(ax, ay, bx, by):
        return _c.hs_pair_line(list(ax), list(ay), list(bx), list(by))
    return _py.hs_pair_line(ax, ay, bx, by)


def has_collinear_triple(xs, ys):
    if _fits(xs, ys):
        return _c.has_collinear_triple(list(xs), list(ys))
    return _py.has_collinear_triple(xs, ys)
