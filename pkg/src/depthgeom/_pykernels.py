"""Pure-Python reference kernels.

Every function here works on plain Python integers (arbitrary precision) and
mirrors a compiled twin in ``_ckernels``; ``depthgeom.kernels`` picks the
implementation at import time and falls back here whenever coordinates exceed
the compiled kernels' magnitude guard.

Conventions: 2-d vectors come in as parallel coordinate lists; "vectors" are
already centered at the query point, so all halfplane/triangle tests are about
the origin.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd


def _angle_cmp(ax, ay, bx, by):
    ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
    hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cr = ax * by - ay * bx
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def orient2d(ax, ay, bx, by, cx, cy):
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def count_halfplane(vx, vy, w, ux, uy):
    """Weighted count of vectors with u.v >= 0, and of those with u.v == 0."""
    ge = 0
    eq = 0
    for i in range(len(vx)):
        d = ux * vx[i] + uy * vy[i]
        if d >= 0:
            ge += w[i]
            if d == 0:
                eq += w[i]
    return ge, eq


def _sorted_groups(vx, vy, w):
    """Indices grouped by equal direction, groups in ccw angular order.

    Returns (reps, weights) where reps[g] is a member index of group g.
    """
    n = len(vx)
    idx = sorted(range(n), key=cmp_to_key(lambda a, b: _angle_cmp(vx[a], vy[a], vx[b], vy[b])))
    reps: list[int] = []
    weights: list[int] = []
    for i in idx:
        if reps:
            r = reps[-1]
            if vx[r] * vy[i] - vy[r] * vx[i] == 0 and vx[r] * vx[i] + vy[r] * vy[i] > 0:
                weights[-1] += w[i]
                continue
        reps.append(i)
        weights.append(w[i])
    return reps, weights


def tukey_sweep(vx, vy, w):
    """Minimum weight of a closed halfplane {v : u.v >= 0} over all u != 0.

    Vectors must be nonzero.  Returns (min_weight, rep_index, kind): the
    minimizing angular window starts just after the group of rep_index;
    kind 0 means the window (theta, theta+pi], kind 1 means (theta-pi, theta].
    """
    reps, weights = _sorted_groups(vx, vy, w)
    G = len(reps)
    total = sum(w)
    best = total + 1
    best_rep = reps[0]
    best_kind = 0
    j = 0
    acc = 0  # weight of groups with direction in (theta_g, theta_g + pi]
    for g in range(G):
        if j <= g:
            j = g + 1
            acc = 0
        else:
            acc -= weights[g]  # group g leaves the window as its start passes it
        gx, gy = vx[reps[g]], vy[reps[g]]
        while j < g + G:
            h = reps[j % G]
            hx, hy = vx[h], vy[h]
            cr = gx * hy - gy * hx
            if cr > 0 or (cr == 0 and gx * hx + gy * hy < 0):
                acc += weights[j % G]
                j += 1
            else:
                break
        a_g = acc
        b_g = total - a_g
        if a_g < best:
            best, best_rep, best_kind = a_g, reps[g], 0
        if b_g < best:
            best, best_rep, best_kind = b_g, reps[g], 1
    return best, best_rep, best_kind


def tukey_batch(xs, ys, w, qxn, qyn, qden):
    """Tukey depth of many rational queries (num_x, num_y, den) w.r.t. the
    integer points (xs, ys) with weights w.  Returns a list of raw depths."""
    out = []
    n = len(xs)
    for t in range(len(qxn)):
        d, xn, yn = qden[t], qxn[t], qyn[t]
        vx = []
        vy = []
        vw = []
        at_q = 0
        for i in range(n):
            a = xs[i] * d - xn
            b = ys[i] * d - yn
            if a == 0 and b == 0:
                at_q += w[i]
            else:
                vx.append(a)
                vy.append(b)
                vw.append(w[i])
        if vx:
            m, _, _ = tukey_sweep(vx, vy, vw)
        else:
            m = 0
        out.append(at_q + m)
    return out


def simplicial_enum(vx, vy):
    """Exhaustive triangle count over origin-centered vectors.

    Returns (strict, boundary): triangles with the origin strictly inside and
    with the origin on the boundary (closed containment = strict + boundary).
    Handles zero vectors and collinear configurations exactly.
    """
    n = len(vx)
    strict = 0
    boundary = 0
    for i in range(n - 2):
        xi, yi = vx[i], vy[i]
        for j in range(i + 1, n - 1):
            xj, yj = vx[j], vy[j]
            c1 = xi * yj - yi * xj
            for k in range(j + 1, n):
                xk, yk = vx[k], vy[k]
                c2 = xj * yk - yj * xk
                c3 = xk * yi - yk * xi
                if (c1 > 0 and c2 > 0 and c3 > 0) or (c1 < 0 and c2 < 0 and c3 < 0):
                    strict += 1
                elif c1 == 0 and c2 == 0 and c3 == 0:
                    # all collinear with the origin: on-segment test
                    if (
                        xi * xj + yi * yj <= 0
                        or xj * xk + yj * yk <= 0
                        or xk * xi + yk * yi <= 0
                    ):
                        boundary += 1
                elif (c1 >= 0 and c2 >= 0 and c3 >= 0) or (c1 <= 0 and c2 <= 0 and c3 <= 0):
                    boundary += 1
    return strict, boundary


def simplicial_fast(vx, vy):
    """Triangles strictly containing the origin, O(n log n).

    Requires: no zero vector, no two vectors on a common line through the
    origin (then no triangle has the origin on its boundary).
    """
    n = len(vx)
    order = sorted(range(n), key=cmp_to_key(lambda a, b: _angle_cmp(vx[a], vy[a], vx[b], vy[b])))
    not_containing = 0
    j = 0
    cnt = 0
    for g in range(n):
        if j <= g:
            j = g + 1
            cnt = 0
        else:
            cnt -= 1
        gi = order[g]
        gx, gy = vx[gi], vy[gi]
        while j < g + n:
            h = order[j % n]
            if gx * vy[h] - gy * vx[h] > 0:
                cnt += 1
                j += 1
            else:
                break
        not_containing += cnt * (cnt - 1) // 2
    return n * (n - 1) * (n - 2) // 6 - not_containing


def pair_counts(xs, ys, w):
    """For every ordered pair (i, j): weighted counts of points strictly to
    the left of the directed line x_i -> x_j, and on the line (excluding i, j).

    Points must be pairwise distinct.  Returns (L, On) as nested lists.
    """
    n = len(xs)
    L = [[0] * n for _ in range(n)]
    On = [[0] * n for _ in range(n)]
    for i in range(n):
        others = [j for j in range(n) if j != i]
        dx = {j: xs[j] - xs[i] for j in others}
        dy = {j: ys[j] - ys[i] for j in others}
        order = sorted(others, key=cmp_to_key(lambda a, b: _angle_cmp(dx[a], dy[a], dx[b], dy[b])))
        reps: list[list[int]] = []
        weights: list[int] = []
        keys: list[tuple[int, int]] = []
        for jj in order:
            a, b = dx[jj], dy[jj]
            g = gcd(abs(a), abs(b))
            key = (a // g, b // g)
            if keys and keys[-1] == key:
                reps[-1].append(jj)
                weights[-1] += w[jj]
            else:
                reps.append([jj])
                weights.append(w[jj])
                keys.append(key)
        G = len(reps)
        anti = {}
        for gidx, key in enumerate(keys):
            anti[key] = gidx
        jptr = 0
        acc = 0
        for g in range(G):
            if jptr <= g:
                jptr = g + 1
                acc = 0
            else:
                acc -= weights[g]
            gx, gy = keys[g]
            while jptr < g + G:
                hx, hy = keys[jptr % G]
                if gx * hy - gy * hx > 0:
                    acc += weights[jptr % G]
                    jptr += 1
                else:
                    break
            opp = anti.get((-keys[g][0], -keys[g][1]))
            anti_w = weights[opp] if opp is not None else 0
            for jj in reps[g]:
                L[i][jj] = acc
                On[i][jj] = (weights[g] - w[jj]) + anti_w
    return L, On


def count_two_below(dx, dy, ux, uy):
    """Triangles with two vertices among the 'down' vectors and one among the
    'up' vectors that contain the origin strictly inside."""
    nd = len(dx)
    nu = len(ux)
    total = 0
    for a in range(nd - 1):
        xa, ya = dx[a], dy[a]
        for b in range(a + 1, nd):
            xb, yb = dx[b], dy[b]
            c1 = xa * yb - ya * xb
            if c1 == 0:
                continue
            for c in range(nu):
                xc, yc = ux[c], uy[c]
                c2 = xb * yc - yb * xc
                c3 = xc * ya - yc * xa
                if c1 > 0:
                    if c2 > 0 and c3 > 0:
                        total += 1
                else:
                    if c2 < 0 and c3 < 0:
                        total += 1
    return total


def _origin_in_closed_triangle(px, py, qx, qy, rx, ry):
    c1 = px * qy - py * qx
    c2 = qx * ry - qy * rx
    c3 = rx * py - ry * px
    if c1 == 0 and c2 == 0 and c3 == 0:
        return (
            px * qx + py * qy <= 0
            or qx * rx + qy * ry <= 0
            or rx * px + ry * py <= 0
        )
    if c1 >= 0 and c2 >= 0 and c3 >= 0:
        return True
    return c1 <= 0 and c2 <= 0 and c3 <= 0


def transversals_contain(ax, ay, bx, by, cx, cy):
    """Closed containment of the origin in every cross triangle; early exit.

    Returns (1, -1, -1, -1) on success or (0, i, j, k) for the first violation.
    """
    for i in range(len(ax)):
        for j in range(len(bx)):
            for k in range(len(cx)):
                if not _origin_in_closed_triangle(ax[i], ay[i], bx[j], by[j], cx[k], cy[k]):
                    return 0, i, j, k
    return 1, -1, -1, -1


def triple_orient_status(ax, ay, bx, by, cx, cy):
    """+1/-1 when every (a, b, c) triple across the three point lists has that
    orientation; 0 when a zero orientation or a sign mismatch occurs."""
    ref = 0
    for i in range(len(ax)):
        for j in range(len(bx)):
            dx1 = bx[j] - ax[i]
            dy1 = by[j] - ay[i]
            for k in range(len(cx)):
                v = dx1 * (cy[k] - ay[i]) - dy1 * (cx[k] - ax[i])
                s = (v > 0) - (v < 0)
                if s == 0:
                    return 0
                if ref == 0:
                    ref = s
                elif s != ref:
                    return 0
    return ref


def hs_pair_line(ax, ay, bx, by):
    """First pair of points of A u B whose connecting line leaves at most
    floor(|A|/2) of A and floor(|B|/2) of B strictly on each side.

    Returns indices (i, j) into the concatenated list, or (-1, -1)."""
    px = list(ax) + list(bx)
    py = list(ay) + list(by)
    na = len(ax)
    n = len(px)
    fa = len(ax) // 2
    fb = len(bx) // 2
    for i in range(n - 1):
        for j in range(i + 1, n):
            dx = px[j] - px[i]
            dy = py[j] - py[i]
            la = ra = lb = rb = 0
            for k in range(n):
                if k == i or k == j:
                    continue
                s = dx * (py[k] - py[i]) - dy * (px[k] - px[i])
                if k < na:
                    if s > 0:
                        la += 1
                    elif s < 0:
                        ra += 1
                else:
                    if s > 0:
                        lb += 1
                    elif s < 0:
                        rb += 1
            if la <= fa and ra <= fa and lb <= fb and rb <= fb:
                return i, j
    return -1, -1


def has_collinear_triple(xs, ys):
    """1 when some three of the (pairwise distinct) points are collinear."""
    n = len(xs)
    for i in range(n):
        dirs = []
        for j in range(n):
            if j == i:
                continue
            a = xs[j] - xs[i]
            b = ys[j] - ys[i]
            if b < 0 or (b == 0 and a < 0):
                a, b = -a, -b
            g = gcd(abs(a), abs(b))
            dirs.append((a // g, b // g))
        dirs.sort()
        for t in range(len(dirs) - 1):
            if dirs[t] == dirs[t + 1]:
                return 1
    return 0
