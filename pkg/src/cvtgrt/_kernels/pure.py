"""Pure-Python geometry kernels (fallback backend).

These are the hot inner loops of the package: half-plane clipping, polygon
metrics, Voronoi cell construction and the Lloyd sweep.  The compiled
backend in ``core.pyx`` mirrors this module operation-for-operation so both
produce bit-identical doubles; any change here must be replicated there.

All polygons are (n, 2) float64 arrays in counter-clockwise order.
"""

from __future__ import annotations

import math

import numpy as np

# 7-point degree-5 symmetric triangle rule (barycentric abscissae + weights).
# Central point weight 9/40; the two orbit weights are (155 +- sqrt(15))/1200
# paired with barycentric coordinate (6 +- sqrt(15))/21.
_SQRT15 = math.sqrt(15.0)
_QB1 = (6.0 + _SQRT15) / 21.0
_QA1 = 1.0 - 2.0 * _QB1
_QW1 = (155.0 + _SQRT15) / 1200.0
_QB2 = (6.0 - _SQRT15) / 21.0
_QA2 = 1.0 - 2.0 * _QB2
_QW2 = (155.0 - _SQRT15) / 1200.0

TRIANGLE_RULE = (
    (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0),
    (_QA1, _QB1, _QB1, _QW1),
    (_QB1, _QA1, _QB1, _QW1),
    (_QB1, _QB1, _QA1, _QW1),
    (_QA2, _QB2, _QB2, _QW2),
    (_QB2, _QA2, _QB2, _QW2),
    (_QB2, _QB2, _QA2, _QW2),
)


def _coords(verts):
    xs = [float(v) for v in verts[:, 0]]
    ys = [float(v) for v in verts[:, 1]]
    return xs, ys


def polygon_area(verts) -> float:
    """Signed shoelace area (positive for CCW input)."""
    xs, ys = _coords(verts)
    n = len(xs)
    s = 0.0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        s += xs[i] * ys[j] - xs[j] * ys[i]
    return 0.5 * s


def polygon_centroid(verts):
    """Area-weighted centroid of a CCW polygon."""
    xs, ys = _coords(verts)
    n = len(xs)
    a = 0.0
    cx = 0.0
    cy = 0.0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        cross = xs[i] * ys[j] - xs[j] * ys[i]
        a += cross
        cx += (xs[i] + xs[j]) * cross
        cy += (ys[i] + ys[j]) * cross
    a *= 0.5
    cx /= 6.0 * a
    cy /= 6.0 * a
    return cx, cy


def polygon_diameter(verts) -> float:
    """Max pairwise vertex distance (the diameter, for convex polygons)."""
    xs, ys = _coords(verts)
    n = len(xs)
    best = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[j] - xs[i]
            dy = ys[j] - ys[i]
            d2 = dx * dx + dy * dy
            if d2 > best:
                best = d2
    return math.sqrt(best)


def point_in_convex(verts, x: float, y: float, eps: float) -> bool:
    """True iff (x, y) is inside or within eps of the boundary."""
    xs, ys = _coords(verts)
    n = len(xs)
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ex = xs[j] - xs[i]
        ey = ys[j] - ys[i]
        cross = ex * (y - ys[i]) - ey * (x - xs[i])
        # signed distance = cross / |edge|; compare against -eps
        if cross < -eps * math.sqrt(ex * ex + ey * ey):
            return False
    return True


def _clip_lists(xs, ys, nx, ny, c, eps):
    """Sutherland-Hodgman clip of a CCW polygon against {n.p <= c}.

    Vertices within eps of the cut line are snapped onto it; consecutive
    output vertices closer than eps are merged.  Returns (xs, ys) lists or
    None when the intersection is empty/degenerate.
    """
    n = len(xs)
    ds = []
    sx = []
    sy = []
    for i in range(n):
        d = nx * xs[i] + ny * ys[i] - c
        if -eps <= d <= eps:
            sx.append(xs[i] - d * nx)
            sy.append(ys[i] - d * ny)
            ds.append(0.0)
        else:
            sx.append(xs[i])
            sy.append(ys[i])
            ds.append(d)
    ox = []
    oy = []
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        di = ds[i]
        dj = ds[j]
        if di <= 0.0:
            ox.append(sx[i])
            oy.append(sy[i])
        if (di < 0.0 and dj > 0.0) or (di > 0.0 and dj < 0.0):
            t = di / (di - dj)
            ox.append(sx[i] + t * (sx[j] - sx[i]))
            oy.append(sy[i] + t * (sy[j] - sy[i]))
    # merge consecutive near-duplicates (wraparound included)
    eps2 = eps * eps
    kx = []
    ky = []
    for i in range(len(ox)):
        if kx:
            dx = ox[i] - kx[-1]
            dy = oy[i] - ky[-1]
            if dx * dx + dy * dy <= eps2:
                continue
        kx.append(ox[i])
        ky.append(oy[i])
    if len(kx) >= 2:
        dx = kx[0] - kx[-1]
        dy = ky[0] - ky[-1]
        if dx * dx + dy * dy <= eps2:
            kx.pop()
            ky.pop()
    if len(kx) < 3:
        return None
    s = 0.0
    m = len(kx)
    for i in range(m):
        j = i + 1 if i + 1 < m else 0
        s += kx[i] * ky[j] - kx[j] * ky[i]
    if 0.5 * s <= eps2:
        return None
    return kx, ky


def clip_halfplane(verts, nx: float, ny: float, c: float, eps: float):
    """Clip polygon against the half-plane {p : nx*x + ny*y <= c}."""
    xs, ys = _coords(verts)
    res = _clip_lists(xs, ys, nx, ny, c, eps)
    if res is None:
        return None
    return np.array(res, dtype=np.float64).T.copy()


def _voronoi_cell_lists(px, py, i, dxs, dys, eps):
    cx = list(dxs)
    cy = list(dys)
    k = len(px)
    for j in range(k):
        if j == i:
            continue
        bx = px[j] - px[i]
        by = py[j] - py[i]
        blen = math.sqrt(bx * bx + by * by)
        nx = bx / blen
        ny = by / blen
        c = nx * (px[i] + px[j]) * 0.5 + ny * (py[i] + py[j]) * 0.5
        res = _clip_lists(cx, cy, nx, ny, c, eps)
        if res is None:
            return None
        cx, cy = res
    return cx, cy


def voronoi_cell(points, i: int, domain_verts, eps: float):
    """Voronoi cell of generator i: domain clipped by all bisectors."""
    px = [float(v) for v in points[:, 0]]
    py = [float(v) for v in points[:, 1]]
    dxs, dys = _coords(domain_verts)
    res = _voronoi_cell_lists(px, py, i, dxs, dys, eps)
    if res is None:
        return None
    return np.array(res, dtype=np.float64).T.copy()


def _quant_energy_lists(xs, ys, px, py):
    n = len(xs)
    a = 0.0
    cx = 0.0
    cy = 0.0
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
        for l1, l2, l3, w in TRIANGLE_RULE:
            qx = l1 * cx + l2 * xs[i] + l3 * xs[j]
            qy = l1 * cy + l2 * ys[i] + l3 * ys[j]
            ddx = qx - px
            ddy = qy - py
            s += w * (ddx * ddx + ddy * ddy)
        total += ta * s
    return total, cx, cy


def quantization_energy_cell(verts, px: float, py: float) -> float:
    """Integral of |x - P|^2 over the cell (centroid fan + 7-point rule)."""
    xs, ys = _coords(verts)
    return _quant_energy_lists(xs, ys, float(px), float(py))[0]


def lloyd_sweep(points, domain_verts, eps: float):
    """One Lloyd iteration over all generators.

    Returns (new_points, centroid_energy, quantization_energy, max_move)
    for the tessellation of the *input* generators; new_points are the cell
    centroids.  Raises ValueError when a cell degenerates.
    """
    px = [float(v) for v in points[:, 0]]
    py = [float(v) for v in points[:, 1]]
    dxs, dys = _coords(domain_verts)
    k = len(px)
    new = np.empty((k, 2), dtype=np.float64)
    ce = 0.0
    qe = 0.0
    max_move2 = 0.0
    for i in range(k):
        res = _voronoi_cell_lists(px, py, i, dxs, dys, eps)
        if res is None:
            raise ValueError("degenerate Voronoi cell for generator %d" % i)
        cell_q, cx, cy = _quant_energy_lists(res[0], res[1], px[i], py[i])
        qe += cell_q
        dx = px[i] - cx
        dy = py[i] - cy
        d2 = dx * dx + dy * dy
        ce += d2
        if d2 > max_move2:
            max_move2 = d2
        new[i, 0] = cx
        new[i, 1] = cy
    return new, ce, qe, math.sqrt(max_move2)
