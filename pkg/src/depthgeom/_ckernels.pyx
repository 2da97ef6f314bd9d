# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact integer kernels.

Twin of depthgeom._pykernels: same functions, same results, evaluated in
int64 with __int128 intermediates.  Callers guarantee |input| <= 2^61, so
differences fit int64 and pairwise products fit __int128 with headroom.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long ll


cdef inline int _sign128(i128 v) nogil:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cdef inline int _angle_cmp_c(ll ax, ll ay, ll bx, ll by) nogil:
    cdef int ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
    cdef int hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
    cdef i128 cr
    if ha != hb:
        return -1 if ha < hb else 1
    cr = <i128> ax * by - <i128> ay * bx
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


cdef ll* _to_arr(object lst, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(lst)
    cdef ll* arr = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = lst[i]
    n_out[0] = n
    return arr


cdef void _sort_ccw(ll* vx, ll* vy, int* idx, int n):
    """Bottom-up merge sort of idx by exact angle of (vx, vy)."""
    if n <= 1:
        return
    cdef int* tmp = <int*> malloc(n * sizeof(int))
    if tmp == NULL:
        raise MemoryError()
    cdef int width = 1
    cdef int lo, mid, hi, i, j, k
    while width < n:
        lo = 0
        while lo < n:
            mid = lo + width
            if mid >= n:
                break
            hi = mid + width
            if hi > n:
                hi = n
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if _angle_cmp_c(vx[idx[i]], vy[idx[i]], vx[idx[j]], vy[idx[j]]) <= 0:
                    tmp[k] = idx[i]
                    i += 1
                else:
                    tmp[k] = idx[j]
                    j += 1
                k += 1
            while i < mid:
                tmp[k] = idx[i]
                i += 1
                k += 1
            while j < hi:
                tmp[k] = idx[j]
                j += 1
                k += 1
            for i in range(lo, hi):
                idx[i] = tmp[i]
            lo += 2 * width
        width *= 2
    free(tmp)


def orient2d(object ax, object ay, object bx, object by, object cx, object cy):
    cdef ll a1 = ax, a2 = ay, b1 = bx, b2 = by, c1 = cx, c2 = cy
    cdef i128 v = <i128> (b1 - a1) * (c2 - a2) - <i128> (b2 - a2) * (c1 - a1)
    return _sign128(v)


def count_halfplane(list vx, list vy, list w, object ux, object uy):
    cdef Py_ssize_t n = 0, n2 = 0, n3 = 0
    cdef ll* x = _to_arr(vx, &n)
    cdef ll* y = _to_arr(vy, &n2)
    cdef ll* ww = _to_arr(w, &n3)
    cdef ll u1 = ux, u2 = uy
    cdef long long ge = 0, eq = 0
    cdef i128 d
    cdef Py_ssize_t i
    try:
        for i in range(n):
            d = <i128> u1 * x[i] + <i128> u2 * y[i]
            if d >= 0:
                ge += ww[i]
                if d == 0:
                    eq += ww[i]
        return ge, eq
    finally:
        free(x)
        free(y)
        free(ww)


def tukey_sweep(list vx, list vy, list w):
    cdef Py_ssize_t n = 0, n2 = 0, n3 = 0
    cdef ll* x = _to_arr(vx, &n)
    cdef ll* y = _to_arr(vy, &n2)
    cdef ll* ww = _to_arr(w, &n3)
    cdef int* idx = <int*> malloc(n * sizeof(int))
    cdef ll* gw = NULL
    cdef int* grep = NULL
    cdef int i, G, g, h
    cdef long long j
    cdef ll total = 0, acc, best
    cdef i128 cr, dt
    cdef int best_rep, best_kind, r
    if idx == NULL:
        free(x); free(y); free(ww)
        raise MemoryError()
    try:
        for i in range(<int> n):
            idx[i] = i
            total += ww[i]
        _sort_ccw(x, y, idx, <int> n)
        grep = <int*> malloc(n * sizeof(int))
        gw = <ll*> malloc(n * sizeof(ll))
        if grep == NULL or gw == NULL:
            raise MemoryError()
        G = 0
        for i in range(<int> n):
            r = idx[i]
            if G > 0:
                cr = <i128> x[grep[G - 1]] * y[r] - <i128> y[grep[G - 1]] * x[r]
                dt = <i128> x[grep[G - 1]] * x[r] + <i128> y[grep[G - 1]] * y[r]
                if cr == 0 and dt > 0:
                    gw[G - 1] += ww[r]
                    continue
            grep[G] = r
            gw[G] = ww[r]
            G += 1
        best = total + 1
        best_rep = grep[0]
        best_kind = 0
        j = 0
        acc = 0
        for g in range(G):
            if j <= g:
                j = g + 1
                acc = 0
            else:
                acc -= gw[g]
            while j < g + G:
                h = grep[<int> (j % G)]
                cr = <i128> x[grep[g]] * y[h] - <i128> y[grep[g]] * x[h]
                if cr > 0 or (cr == 0 and <i128> x[grep[g]] * x[h] + <i128> y[grep[g]] * y[h] < 0):
                    acc += gw[<int> (j % G)]
                    j += 1
                else:
                    break
            if acc < best:
                best = acc
                best_rep = grep[g]
                best_kind = 0
            if total - acc < best:
                best = total - acc
                best_rep = grep[g]
                best_kind = 1
        return best, best_rep, best_kind
    finally:
        free(x); free(y); free(ww); free(idx)
        if grep != NULL:
            free(grep)
        if gw != NULL:
            free(gw)


cdef ll _sweep_min(ll* x, ll* y, ll* ww, int n):
    """Minimum closed-halfplane weight over nonzero vectors (no witness)."""
    cdef int* idx = <int*> malloc(n * sizeof(int))
    cdef int* grep = <int*> malloc(n * sizeof(int))
    cdef ll* gw = <ll*> malloc(n * sizeof(ll))
    cdef int i, G, g, h, r
    cdef long long j
    cdef ll total = 0, acc, best
    cdef i128 cr, dt
    if idx == NULL or grep == NULL or gw == NULL:
        if idx != NULL: free(idx)
        if grep != NULL: free(grep)
        if gw != NULL: free(gw)
        raise MemoryError()
    try:
        for i in range(n):
            idx[i] = i
            total += ww[i]
        _sort_ccw(x, y, idx, n)
        G = 0
        for i in range(n):
            r = idx[i]
            if G > 0:
                cr = <i128> x[grep[G - 1]] * y[r] - <i128> y[grep[G - 1]] * x[r]
                dt = <i128> x[grep[G - 1]] * x[r] + <i128> y[grep[G - 1]] * y[r]
                if cr == 0 and dt > 0:
                    gw[G - 1] += ww[r]
                    continue
            grep[G] = r
            gw[G] = ww[r]
            G += 1
        best = total + 1
        j = 0
        acc = 0
        for g in range(G):
            if j <= g:
                j = g + 1
                acc = 0
            else:
                acc -= gw[g]
            while j < g + G:
                h = grep[<int> (j % G)]
                cr = <i128> x[grep[g]] * y[h] - <i128> y[grep[g]] * x[h]
                if cr > 0 or (cr == 0 and <i128> x[grep[g]] * x[h] + <i128> y[grep[g]] * y[h] < 0):
                    acc += gw[<int> (j % G)]
                    j += 1
                else:
                    break
            if acc < best:
                best = acc
            if total - acc < best:
                best = total - acc
        return best
    finally:
        free(idx); free(grep); free(gw)


def tukey_batch(list xs, list ys, list w, list qxn, list qyn, list qden):
    cdef Py_ssize_t n = 0, n2 = 0, n3 = 0, m = 0, m2 = 0, m3 = 0
    cdef ll* px = _to_arr(xs, &n)
    cdef ll* py = _to_arr(ys, &n2)
    cdef ll* ww = _to_arr(w, &n3)
    cdef ll* qx = _to_arr(qxn, &m)
    cdef ll* qy = _to_arr(qyn, &m2)
    cdef ll* qd = _to_arr(qden, &m3)
    cdef ll* vx = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef ll* vy = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef ll* vw = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef list out = []
    cdef Py_ssize_t t, i
    cdef int k
    cdef ll a, b, at_q
    try:
        if vx == NULL or vy == NULL or vw == NULL:
            raise MemoryError()
        for t in range(m):
            k = 0
            at_q = 0
            for i in range(n):
                a = px[i] * qd[t] - qx[t]
                b = py[i] * qd[t] - qy[t]
                if a == 0 and b == 0:
                    at_q += ww[i]
                else:
                    vx[k] = a
                    vy[k] = b
                    vw[k] = ww[i]
                    k += 1
            if k > 0:
                out.append(at_q + _sweep_min(vx, vy, vw, k))
            else:
                out.append(at_q)
        return out
    finally:
        free(px); free(py); free(ww); free(qx); free(qy); free(qd)
        if vx != NULL: free(vx)
        if vy != NULL: free(vy)
        if vw != NULL: free(vw)


def simplicial_enum(list vx, list vy):
    cdef Py_ssize_t n = 0, n2 = 0
    cdef ll* x = _to_arr(vx, &n)
    cdef ll* y = _to_arr(vy, &n2)
    cdef long long strict = 0, boundary = 0
    cdef Py_ssize_t i, j, k
    cdef i128 c1, c2, c3
    try:
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                c1 = <i128> x[i] * y[j] - <i128> y[i] * x[j]
                for k in range(j + 1, n):
                    c2 = <i128> x[j] * y[k] - <i128> y[j] * x[k]
                    c3 = <i128> x[k] * y[i] - <i128> y[k] * x[i]
                    if (c1 > 0 and c2 > 0 and c3 > 0) or (c1 < 0 and c2 < 0 and c3 < 0):
                        strict += 1
                    elif c1 == 0 and c2 == 0 and c3 == 0:
                        if (
                            <i128> x[i] * x[j] + <i128> y[i] * y[j] <= 0
                            or <i128> x[j] * x[k] + <i128> y[j] * y[k] <= 0
                            or <i128> x[k] * x[i] + <i128> y[k] * y[i] <= 0
                        ):
                            boundary += 1
                    elif (c1 >= 0 and c2 >= 0 and c3 >= 0) or (c1 <= 0 and c2 <= 0 and c3 <= 0):
                        boundary += 1
        return strict, boundary
    finally:
        free(x)
        free(y)


def simplicial_fast(list vx, list vy):
    cdef Py_ssize_t n = 0, n2 = 0
    cdef ll* x = _to_arr(vx, &n)
    cdef ll* y = _to_arr(vy, &n2)
    cdef int* idx = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef long long notc = 0, cnt
    cdef long long j
    cdef int g, h, gi
    cdef i128 cr
    try:
        if idx == NULL:
            raise MemoryError()
        for g in range(<int> n):
            idx[g] = g
        _sort_ccw(x, y, idx, <int> n)
        j = 0
        cnt = 0
        for g in range(<int> n):
            if j <= g:
                j = g + 1
                cnt = 0
            else:
                cnt -= 1
            gi = idx[g]
            while j < g + n:
                h = idx[<int> (j % n)]
                cr = <i128> x[gi] * y[h] - <i128> y[gi] * x[h]
                if cr > 0:
                    cnt += 1
                    j += 1
                else:
                    break
            notc += cnt * (cnt - 1) // 2
        return <object> (n * (n - 1) * (n - 2) // 6 - notc)
    finally:
        free(x)
        free(y)
        if idx != NULL:
            free(idx)


def pair_counts(list xs, list ys, list w):
    cdef Py_ssize_t n = 0, n2 = 0, n3 = 0
    cdef ll* px = _to_arr(xs, &n)
    cdef ll* py = _to_arr(ys, &n2)
    cdef ll* ww = _to_arr(w, &n3)
    cdef ll* dx = <ll*> malloc(n * sizeof(ll))
    cdef ll* dy = <ll*> malloc(n * sizeof(ll))
    cdef int* others = <int*> malloc(n * sizeof(int))
    cdef int* idx = <int*> malloc(n * sizeof(int))
    cdef int* gstart = <int*> malloc((n + 1) * sizeof(int))
    cdef ll* gw = <ll*> malloc(n * sizeof(ll))
    cdef list L = [], On = []
    cdef list Lrow, Onrow
    cdef Py_ssize_t i
    cdef int m, t, G, g, h, r
    cdef long long j
    cdef ll acc, gwv
    cdef i128 cr, dt
    try:
        if (dx == NULL or dy == NULL or others == NULL or idx == NULL
                or gstart == NULL or gw == NULL):
            raise MemoryError()
        for i in range(n):
            L.append([0] * n)
            On.append([0] * n)
        for i in range(n):
            m = 0
            for t in range(<int> n):
                if t != <int> i:
                    others[m] = t
                    dx[m] = px[t] - px[i]
                    dy[m] = py[t] - py[i]
                    m += 1
            for t in range(m):
                idx[t] = t
            _sort_ccw(dx, dy, idx, m)
            # group equal directions
            G = 0
            for t in range(m):
                r = idx[t]
                if G > 0:
                    h = idx[gstart[G - 1]]
                    cr = <i128> dx[h] * dy[r] - <i128> dy[h] * dx[r]
                    dt = <i128> dx[h] * dx[r] + <i128> dy[h] * dy[r]
                    if cr == 0 and dt > 0:
                        gw[G - 1] += ww[others[r]]
                        continue
                gstart[G] = t
                gw[G] = ww[others[r]]
                G += 1
            gstart[G] = m
            # strict-left weights by two-pointer over groups; the pointer
            # stops exactly at the antipodal group when one exists
            j = 0
            acc = 0
            Lrow = L[i]
            Onrow = On[i]
            for g in range(G):
                if j <= g:
                    j = g + 1
                    acc = 0
                else:
                    acc -= gw[g]
                h = idx[gstart[g]]
                while j < g + G:
                    r = idx[gstart[<int> (j % G)]]
                    cr = <i128> dx[h] * dy[r] - <i128> dy[h] * dx[r]
                    if cr > 0:
                        acc += gw[<int> (j % G)]
                        j += 1
                    else:
                        break
                gwv = 0
                if j < g + G:
                    r = idx[gstart[<int> (j % G)]]
                    cr = <i128> dx[h] * dy[r] - <i128> dy[h] * dx[r]
                    dt = <i128> dx[h] * dx[r] + <i128> dy[h] * dy[r]
                    if cr == 0 and dt < 0:
                        gwv = gw[<int> (j % G)]
                for t in range(gstart[g], gstart[g + 1]):
                    r = idx[t]
                    Lrow[others[r]] = acc
                    Onrow[others[r]] = (gw[g] - ww[others[r]]) + gwv
        return L, On
    finally:
        free(px); free(py); free(ww)
        if dx != NULL: free(dx)
        if dy != NULL: free(dy)
        if others != NULL: free(others)
        if idx != NULL: free(idx)
        if gstart != NULL: free(gstart)
        if gw != NULL: free(gw)


def count_two_below(list dxl, list dyl, list uxl, list uyl):
    cdef Py_ssize_t nd = 0, nd2 = 0, nu = 0, nu2 = 0
    cdef ll* dx = _to_arr(dxl, &nd)
    cdef ll* dy = _to_arr(dyl, &nd2)
    cdef ll* ux = _to_arr(uxl, &nu)
    cdef ll* uy = _to_arr(uyl, &nu2)
    cdef long long total = 0
    cdef Py_ssize_t a, b, c
    cdef i128 c1, c2, c3
    try:
        for a in range(nd - 1):
            for b in range(a + 1, nd):
                c1 = <i128> dx[a] * dy[b] - <i128> dy[a] * dx[b]
                if c1 == 0:
                    continue
                for c in range(nu):
                    c2 = <i128> dx[b] * uy[c] - <i128> dy[b] * ux[c]
                    c3 = <i128> ux[c] * dy[a] - <i128> uy[c] * dx[a]
                    if c1 > 0:
                        if c2 > 0 and c3 > 0:
                            total += 1
                    else:
                        if c2 < 0 and c3 < 0:
                            total += 1
        return total
    finally:
        free(dx); free(dy); free(ux); free(uy)


cdef inline bint _origin_in_tri(ll px, ll py, ll qx, ll qy, ll rx, ll ry) nogil:
    cdef i128 c1 = <i128> px * qy - <i128> py * qx
    cdef i128 c2 = <i128> qx * ry - <i128> qy * rx
    cdef i128 c3 = <i128> rx * py - <i128> ry * px
    if c1 == 0 and c2 == 0 and c3 == 0:
        return (
            <i128> px * qx + <i128> py * qy <= 0
            or <i128> qx * rx + <i128> qy * ry <= 0
            or <i128> rx * px + <i128> ry * py <= 0
        )
    if c1 >= 0 and c2 >= 0 and c3 >= 0:
        return True
    return c1 <= 0 and c2 <= 0 and c3 <= 0


def transversals_contain(list axl, list ayl, list bxl, list byl, list cxl, list cyl):
    cdef Py_ssize_t na = 0, na2 = 0, nb = 0, nb2 = 0, nc = 0, nc2 = 0
    cdef ll* ax = _to_arr(axl, &na)
    cdef ll* ay = _to_arr(ayl, &na2)
    cdef ll* bx = _to_arr(bxl, &nb)
    cdef ll* by = _to_arr(byl, &nb2)
    cdef ll* cx = _to_arr(cxl, &nc)
    cdef ll* cy = _to_arr(cyl, &nc2)
    cdef Py_ssize_t i, j, k
    try:
        for i in range(na):
            for j in range(nb):
                for k in range(nc):
                    if not _origin_in_tri(ax[i], ay[i], bx[j], by[j], cx[k], cy[k]):
                        return 0, i, j, k
        return 1, -1, -1, -1
    finally:
        free(ax); free(ay); free(bx); free(by); free(cx); free(cy)


def triple_orient_status(list axl, list ayl, list bxl, list byl, list cxl, list cyl):
    cdef Py_ssize_t na = 0, na2 = 0, nb = 0, nb2 = 0, nc = 0, nc2 = 0
    cdef ll* ax = _to_arr(axl, &na)
    cdef ll* ay = _to_arr(ayl, &na2)
    cdef ll* bx = _to_arr(bxl, &nb)
    cdef ll* by = _to_arr(byl, &nb2)
    cdef ll* cx = _to_arr(cxl, &nc)
    cdef ll* cy = _to_arr(cyl, &nc2)
    cdef int ref = 0, s
    cdef Py_ssize_t i, j, k
    cdef ll d1x, d1y
    cdef i128 v
    try:
        for i in range(na):
            for j in range(nb):
                d1x = bx[j] - ax[i]
                d1y = by[j] - ay[i]
                for k in range(nc):
                    v = <i128> d1x * (cy[k] - ay[i]) - <i128> d1y * (cx[k] - ax[i])
                    s = _sign128(v)
                    if s == 0:
                        return 0
                    if ref == 0:
                        ref = s
                    elif s != ref:
                        return 0
        return ref
    finally:
        free(ax); free(ay); free(bx); free(by); free(cx); free(cy)


def hs_pair_line(list axl, list ayl, list bxl, list byl):
    cdef Py_ssize_t na = 0, na2 = 0, nb = 0, nb2 = 0
    cdef ll* ax = _to_arr(axl, &na)
    cdef ll* ay = _to_arr(ayl, &na2)
    cdef ll* bx = _to_arr(bxl, &nb)
    cdef ll* by = _to_arr(byl, &nb2)
    cdef Py_ssize_t n = na + nb
    cdef ll* px = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef ll* py = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef Py_ssize_t i, j, k
    cdef long long la, ra, lb, rb, fa, fb
    cdef ll ddx, ddy
    cdef i128 s
    try:
        if px == NULL or py == NULL:
            raise MemoryError()
        for i in range(na):
            px[i] = ax[i]
            py[i] = ay[i]
        for i in range(nb):
            px[na + i] = bx[i]
            py[na + i] = by[i]
        fa = na // 2
        fb = nb // 2
        for i in range(n - 1):
            for j in range(i + 1, n):
                ddx = px[j] - px[i]
                ddy = py[j] - py[i]
                la = ra = lb = rb = 0
                for k in range(n):
                    if k == i or k == j:
                        continue
                    s = <i128> ddx * (py[k] - py[i]) - <i128> ddy * (px[k] - px[i])
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
    finally:
        free(ax); free(ay); free(bx); free(by)
        if px != NULL: free(px)
        if py != NULL: free(py)


def has_collinear_triple(list xsl, list ysl):
    cdef Py_ssize_t n = 0, n2 = 0
    cdef ll* xs = _to_arr(xsl, &n)
    cdef ll* ys = _to_arr(ysl, &n2)
    cdef ll* dx = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef ll* dy = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    cdef int* idx = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    cdef int m, t, r, h
    cdef i128 cr, dt
    try:
        if dx == NULL or dy == NULL or idx == NULL:
            raise MemoryError()
        for i in range(n):
            m = 0
            for t in range(<int> n):
                if t != <int> i:
                    dx[m] = xs[t] - xs[i]
                    dy[m] = ys[t] - ys[i]
                    if dy[m] < 0 or (dy[m] == 0 and dx[m] < 0):
                        dx[m] = -dx[m]
                        dy[m] = -dy[m]
                    m += 1
            for t in range(m):
                idx[t] = t
            _sort_ccw(dx, dy, idx, m)
            for t in range(m - 1):
                r = idx[t]
                h = idx[t + 1]
                cr = <i128> dx[r] * dy[h] - <i128> dy[r] * dx[h]
                dt = <i128> dx[r] * dx[h] + <i128> dy[r] * dy[h]
                if cr == 0 and dt > 0:
                    return 1
        return 0
    finally:
        free(xs); free(ys)
        if dx != NULL: free(dx)
        if dy != NULL: free(dy)
        if idx != NULL: free(idx)
