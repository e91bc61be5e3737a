# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels (fast backend).

Mirror of ``pure.py``: identical formulas, identical operation order, so
both backends produce bit-identical doubles.  Compiled with
-ffp-contract=off to rule out FMA contraction.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc

import numpy as np

cdef double _SQRT15 = sqrt(15.0)
cdef double _QB1 = (6.0 + _SQRT15) / 21.0
cdef double _QA1 = 1.0 - 2.0 * _QB1
cdef double _QW1 = (155.0 + _SQRT15) / 1200.0
cdef double _QB2 = (6.0 - _SQRT15) / 21.0
cdef double _QA2 = 1.0 - 2.0 * _QB2
cdef double _QW2 = (155.0 - _SQRT15) / 1200.0

cdef double[7] _RL1
cdef double[7] _RL2
cdef double[7] _RL3
cdef double[7] _RW

_RL1[0] = 1.0 / 3.0; _RL2[0] = 1.0 / 3.0; _RL3[0] = 1.0 / 3.0; _RW[0] = 9.0 / 40.0
_RL1[1] = _QA1; _RL2[1] = _QB1; _RL3[1] = _QB1; _RW[1] = _QW1
_RL1[2] = _QB1; _RL2[2] = _QA1; _RL3[2] = _QB1; _RW[2] = _QW1
_RL1[3] = _QB1; _RL2[3] = _QB1; _RL3[3] = _QA1; _RW[3] = _QW1
_RL1[4] = _QA2; _RL2[4] = _QB2; _RL3[4] = _QB2; _RW[4] = _QW2
_RL1[5] = _QB2; _RL2[5] = _QA2; _RL3[5] = _QB2; _RW[5] = _QW2
_RL1[6] = _QB2; _RL2[6] = _QB2; _RL3[6] = _QA2; _RW[6] = _QW2

TRIANGLE_RULE = tuple(
    (_RL1[q], _RL2[q], _RL3[q], _RW[q]) for q in range(7)
)


cdef int _clip_c(double* xs, double* ys, int n,
                 double nx, double ny, double c, double eps,
                 double* kx, double* ky,
                 double* sx, double* sy, double* ds,
                 double* ox, double* oy) nogil:
    """Clip CCW polygon against {n.p <= c}; result in kx/ky, returns count (0 = empty)."""
    cdef int i, j, cnt, m
    cdef double d, di, dj, t, dx, dy, s, eps2
    for i in range(n):
        d = nx * xs[i] + ny * ys[i] - c
        if d >= -eps and d <= eps:
            sx[i] = xs[i] - d * nx
            sy[i] = ys[i] - d * ny
            ds[i] = 0.0
        else:
            sx[i] = xs[i]
            sy[i] = ys[i]
            ds[i] = d
    cnt = 0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        di = ds[i]
        dj = ds[j]
        if di <= 0.0:
            ox[cnt] = sx[i]
            oy[cnt] = sy[i]
            cnt += 1
        if (di < 0.0 and dj > 0.0) or (di > 0.0 and dj < 0.0):
            t = di / (di - dj)
            ox[cnt] = sx[i] + t * (sx[j] - sx[i])
            oy[cnt] = sy[i] + t * (sy[j] - sy[i])
            cnt += 1
    eps2 = eps * eps
    m = 0
    for i in range(cnt):
        if m > 0:
            dx = ox[i] - kx[m - 1]
            dy = oy[i] - ky[m - 1]
            if dx * dx + dy * dy <= eps2:
                continue
        kx[m] = ox[i]
        ky[m] = oy[i]
        m += 1
    if m >= 2:
        dx = kx[0] - kx[m - 1]
        dy = ky[0] - ky[m - 1]
        if dx * dx + dy * dy <= eps2:
            m -= 1
    if m < 3:
        return 0
    s = 0.0
    for i in range(m):
        j = i + 1 if i + 1 < m else 0
        s += kx[i] * ky[j] - kx[j] * ky[i]
    if 0.5 * s <= eps2:
        return 0
    return m


cdef int _voronoi_cell_c(double* px, double* py, int k, int i,
                         double* dxs, double* dys, int ndom, double eps,
                         double* ax, double* ay, double* bx, double* by,
                         double* sx, double* sy, double* ds,
                         double* ox, double* oy) nogil:
    """Cell of generator i into ax/ay (may end in bx/by; caller uses return buffer flag)."""
    cdef int j, n, m
    cdef double ddx, ddy, blen, nx, ny, c
    cdef double* curx = ax
    cdef double* cury = ay
    cdef double* nxtx = bx
    cdef double* nxty = by
    cdef double* tmp
    for j in range(ndom):
        curx[j] = dxs[j]
        cury[j] = dys[j]
    n = ndom
    for j in range(k):
        if j == i:
            continue
        ddx = px[j] - px[i]
        ddy = py[j] - py[i]
        blen = sqrt(ddx * ddx + ddy * ddy)
        nx = ddx / blen
        ny = ddy / blen
        c = nx * (px[i] + px[j]) * 0.5 + ny * (py[i] + py[j]) * 0.5
        m = _clip_c(curx, cury, n, nx, ny, c, eps, nxtx, nxty, sx, sy, ds, ox, oy)
        if m == 0:
            return 0
        tmp = curx; curx = nxtx; nxtx = tmp
        tmp = cury; cury = nxty; nxty = tmp
        n = m
    if curx != ax:
        for j in range(n):
            ax[j] = curx[j]
            ay[j] = cury[j]
    return n


cdef double _quant_energy_c(double* xs, double* ys, int n,
                            double px, double py,
                            double* cx_out, double* cy_out) nogil:
    cdef int i, j, q
    cdef double a = 0.0, cx = 0.0, cy = 0.0, cross
    cdef double ta, s, qx, qy, ddx, ddy, total
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        cross = xs[i] * ys[j] - xs[j] * ys[i]
        a += cross
        cx += (xs[i] + xs[j]) * cross
        cy += (ys[i] + ys[j]) * cross
    a *= 0.5
    cx /= 6.0 * a
    cy /= 6.0 * a
    total = 0.0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ta = 0.5 * ((xs[i] - cx) * (ys[j] - cy) - (xs[j] - cx) * (ys[i] - cy))
        s = 0.0
        for q in range(7):
            qx = _RL1[q] * cx + _RL2[q] * xs[i] + _RL3[q] * xs[j]
            qy = _RL1[q] * cy + _RL2[q] * ys[i] + _RL3[q] * ys[j]
            ddx = qx - px
            ddy = qy - py
            s += _RW[q] * (ddx * ddx + ddy * ddy)
        total += ta * s
    cx_out[0] = cx
    cy_out[0] = cy
    return total


def polygon_area(verts):
    """Signed shoelace area (positive for CCW input)."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef int i, j
    cdef double s = 0.0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        s += v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
    return 0.5 * s


def polygon_centroid(verts):
    """Area-weighted centroid of a CCW polygon."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef int i, j
    cdef double a = 0.0, gx = 0.0, gy = 0.0, cross
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        cross = v[i, 0] * v[j, 1] - v[j, 0] * v[i, 1]
        a += cross
        gx += (v[i, 0] + v[j, 0]) * cross
        gy += (v[i, 1] + v[j, 1]) * cross
    a *= 0.5
    return gx / (6.0 * a), gy / (6.0 * a)


def polygon_diameter(verts):
    """Max pairwise vertex distance (the diameter, for convex polygons)."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef int i, j
    cdef double best = 0.0, dx, dy, d2
    for i in range(n):
        for j in range(i + 1, n):
            dx = v[j, 0] - v[i, 0]
            dy = v[j, 1] - v[i, 1]
            d2 = dx * dx + dy * dy
            if d2 > best:
                best = d2
    return sqrt(best)


def point_in_convex(verts, double x, double y, double eps):
    """True iff (x, y) is inside or within eps of the boundary."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef int i, j
    cdef double ex, ey, cross
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ex = v[j, 0] - v[i, 0]
        ey = v[j, 1] - v[i, 1]
        cross = ex * (y - v[i, 1]) - ey * (x - v[i, 0])
        if cross < -eps * sqrt(ex * ex + ey * ey):
            return False
    return True


def clip_halfplane(verts, double nx, double ny, double c, double eps):
    """Clip polygon against the half-plane {p : nx*x + ny*y <= c}."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef int cap = 2 * n + 8
    cdef double* buf = <double*> malloc(sizeof(double) * cap * 7)
    if buf == NULL:
        raise MemoryError()
    cdef double* xs = buf
    cdef double* ys = buf + cap
    cdef double* kx = buf + 2 * cap
    cdef double* ky = buf + 3 * cap
    cdef double* sx = buf + 4 * cap
    cdef double* sy = buf + 5 * cap
    cdef double* ds = buf + 6 * cap
    cdef double* ox
    cdef double* oy
    cdef double* obuf = <double*> malloc(sizeof(double) * cap * 2)
    if obuf == NULL:
        free(buf)
        raise MemoryError()
    ox = obuf
    oy = obuf + cap
    cdef int i, m
    for i in range(n):
        xs[i] = v[i, 0]
        ys[i] = v[i, 1]
    m = _clip_c(xs, ys, n, nx, ny, c, eps, kx, ky, sx, sy, ds, ox, oy)
    if m == 0:
        free(buf)
        free(obuf)
        return None
    out = np.empty((m, 2), dtype=np.float64)
    cdef double[:, ::1] o = out
    for i in range(m):
        o[i, 0] = kx[i]
        o[i, 1] = ky[i]
    free(buf)
    free(obuf)
    return out


def voronoi_cell(points, int i, domain_verts, double eps):
    """Voronoi cell of generator i: domain clipped by all bisectors."""
    cdef double[:, ::1] p = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] d = np.ascontiguousarray(domain_verts, dtype=np.float64)
    cdef int k = p.shape[0]
    cdef int ndom = d.shape[0]
    cdef int cap = 2 * (ndom + k) + 16
    cdef double* buf = <double*> malloc(sizeof(double) * cap * 11)
    if buf == NULL:
        raise MemoryError()
    cdef double* px = buf
    cdef double* py = buf + cap
    cdef double* dxs = buf + 2 * cap
    cdef double* dys = buf + 3 * cap
    cdef double* ax = buf + 4 * cap
    cdef double* ay = buf + 5 * cap
    cdef double* bx = buf + 6 * cap
    cdef double* by = buf + 7 * cap
    cdef double* sx = buf + 8 * cap
    cdef double* sy = buf + 9 * cap
    cdef double* ds = buf + 10 * cap
    cdef double* obuf = <double*> malloc(sizeof(double) * cap * 2)
    if obuf == NULL:
        free(buf)
        raise MemoryError()
    cdef double* ox = obuf
    cdef double* oy = obuf + cap
    cdef int j, m
    for j in range(k):
        px[j] = p[j, 0]
        py[j] = p[j, 1]
    for j in range(ndom):
        dxs[j] = d[j, 0]
        dys[j] = d[j, 1]
    m = _voronoi_cell_c(px, py, k, i, dxs, dys, ndom, eps,
                        ax, ay, bx, by, sx, sy, ds, ox, oy)
    if m == 0:
        free(buf)
        free(obuf)
        return None
    out = np.empty((m, 2), dtype=np.float64)
    cdef double[:, ::1] o = out
    for j in range(m):
        o[j, 0] = ax[j]
        o[j, 1] = ay[j]
    free(buf)
    free(obuf)
    return out


def quantization_energy_cell(verts, double px, double py):
    """Integral of |x - P|^2 over the cell (centroid fan + 7-point rule)."""
    cdef double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef int n = v.shape[0]
    cdef double* buf = <double*> malloc(sizeof(double) * n * 2)
    if buf == NULL:
        raise MemoryError()
    cdef double* xs = buf
    cdef double* ys = buf + n
    cdef int i
    for i in range(n):
        xs[i] = v[i, 0]
        ys[i] = v[i, 1]
    cdef double cx, cy
    cdef double total = _quant_energy_c(xs, ys, n, px, py, &cx, &cy)
    free(buf)
    return total


def lloyd_sweep(points, domain_verts, double eps):
    """One Lloyd iteration over all generators.

    Returns (new_points, centroid_energy, quantization_energy, max_move)
    for the tessellation of the *input* generators; new_points are the cell
    centroids.  Raises ValueError when a cell degenerates.
    """
    cdef double[:, ::1] p = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] d = np.ascontiguousarray(domain_verts, dtype=np.float64)
    cdef int k = p.shape[0]
    cdef int ndom = d.shape[0]
    cdef int cap = 2 * (ndom + k) + 16
    cdef double* buf = <double*> malloc(sizeof(double) * cap * 11)
    if buf == NULL:
        raise MemoryError()
    cdef double* px = buf
    cdef double* py = buf + cap
    cdef double* dxs = buf + 2 * cap
    cdef double* dys = buf + 3 * cap
    cdef double* ax = buf + 4 * cap
    cdef double* ay = buf + 5 * cap
    cdef double* bx = buf + 6 * cap
    cdef double* by = buf + 7 * cap
    cdef double* sx = buf + 8 * cap
    cdef double* sy = buf + 9 * cap
    cdef double* ds = buf + 10 * cap
    cdef double* obuf = <double*> malloc(sizeof(double) * cap * 2)
    if obuf == NULL:
        free(buf)
        raise MemoryError()
    cdef double* ox = obuf
    cdef double* oy = obuf + cap
    cdef int i, j, m, bad
    for j in range(k):
        px[j] = p[j, 0]
        py[j] = p[j, 1]
    for j in range(ndom):
        dxs[j] = d[j, 0]
        dys[j] = d[j, 1]
    new = np.empty((k, 2), dtype=np.float64)
    cdef double[:, ::1] o = new
    cdef double ce = 0.0, qe = 0.0, max_move2 = 0.0
    cdef double cx, cy, cell_q, dx, dy, d2
    bad = -1
    with nogil:
        for i in range(k):
            m = _voronoi_cell_c(px, py, k, i, dxs, dys, ndom, eps,
                                ax, ay, bx, by, sx, sy, ds, ox, oy)
            if m == 0:
                bad = i
                break
            cell_q = _quant_energy_c(ax, ay, m, px[i], py[i], &cx, &cy)
            qe += cell_q
            dx = px[i] - cx
            dy = py[i] - cy
            d2 = dx * dx + dy * dy
            ce += d2
            if d2 > max_move2:
                max_move2 = d2
            o[i, 0] = cx
            o[i, 1] = cy
    free(buf)
    free(obuf)
    if bad >= 0:
        raise ValueError("degenerate Voronoi cell for generator %d" % bad)
    return new, ce, qe, sqrt(max_move2)
