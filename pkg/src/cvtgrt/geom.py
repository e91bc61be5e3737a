"""2D computational-geometry layer: convex polygons, clipping, hulls, metrics.

All predicates share one absolute tolerance, ``EPS_GEOM``, chosen for
roughly unit-scale coordinates (inputs are expected pre-scaled near the
unit box; coordinate magnitudes are otherwise unbounded here, so callers
working far from unit scale should rescale first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DegenerateGeometryError

EPS_GEOM = 1e-9


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y


def dist(p: Point2, q: Point2) -> float:
    dx = q.x - p.x
    dy = q.y - p.y
    return math.sqrt(dx * dx + dy * dy)


def _as_vertex_array(vertices) -> np.ndarray:
    arr = np.array([(p.x, p.y) if isinstance(p, Point2) else (p[0], p[1]) for p in vertices],
                   dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("vertices must be a sequence of 2D points")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite vertex coordinates")
    return arr


class ConvexPolygon:
    """Convex CCW polygon, the universal cell/domain representation.

    Construction validates: >= 3 vertices, counter-clockwise orientation,
    convexity (consecutive-edge cross products >= -EPS_GEOM), and no
    consecutive vertices closer than EPS_GEOM.
    """

    __slots__ = ("_verts",)

    def __init__(self, vertices):
        arr = vertices if isinstance(vertices, np.ndarray) else _as_vertex_array(vertices)
        arr = np.ascontiguousarray(arr, dtype=np.float64)
        n = arr.shape[0]
        if n < 3:
            raise DegenerateGeometryError(f"convex polygon needs >= 3 vertices, got {n}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("non-finite vertex coordinates")
        for i in range(n):
            j = (i + 1) % n
            if (arr[i, 0] - arr[j, 0]) ** 2 + (arr[i, 1] - arr[j, 1]) ** 2 <= EPS_GEOM * EPS_GEOM:
                raise DegenerateGeometryError("duplicate consecutive vertices")
        signed = _kernels.polygon_area(arr)
        if signed <= EPS_GEOM * EPS_GEOM:
            raise DegenerateGeometryError(f"polygon area {signed} is not positive")
        for i in range(n):
            j = (i + 1) % n
            k = (i + 2) % n
            cross = (arr[j, 0] - arr[i, 0]) * (arr[k, 1] - arr[j, 1]) - \
                    (arr[j, 1] - arr[i, 1]) * (arr[k, 0] - arr[j, 0])
            if cross < -EPS_GEOM:
                raise DegenerateGeometryError("polygon is not convex (CCW)")
        arr.setflags(write=False)
        self._verts = arr

    @property
    def vertex_array(self) -> np.ndarray:
        return self._verts

    @property
    def vertices(self) -> tuple[Point2, ...]:
        return tuple(Point2(float(x), float(y)) for x, y in self._verts)

    def __len__(self) -> int:
        return self._verts.shape[0]

    def __repr__(self) -> str:
        return f"ConvexPolygon({self._verts.tolist()})"

    def bounding_box(self) -> tuple[float, float, float, float]:
        """(xmin, ymin, xmax, ymax)"""
        xs = self._verts[:, 0]
        ys = self._verts[:, 1]
        return float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max())


class SimplePolygon:
    """Simple (possibly non-convex) CCW polygon; used for non-convex domains."""

    __slots__ = ("_verts",)

    def __init__(self, vertices):
        arr = vertices if isinstance(vertices, np.ndarray) else _as_vertex_array(vertices)
        arr = np.ascontiguousarray(arr, dtype=np.float64)
        n = arr.shape[0]
        if n < 3:
            raise DegenerateGeometryError(f"polygon needs >= 3 vertices, got {n}")
        if _kernels.polygon_area(arr) <= 0.0:
            raise DegenerateGeometryError("polygon must be CCW with positive area")
        if _self_intersects(arr):
            raise DegenerateGeometryError("polygon is self-intersecting")
        arr.setflags(write=False)
        self._verts = arr

    @property
    def vertex_array(self) -> np.ndarray:
        return self._verts

    @property
    def vertices(self) -> tuple[Point2, ...]:
        return tuple(Point2(float(x), float(y)) for x, y in self._verts)

    def __len__(self) -> int:
        return self._verts.shape[0]

    def bounding_box(self) -> tuple[float, float, float, float]:
        xs = self._verts[:, 0]
        ys = self._verts[:, 1]
        return float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max())


def _self_intersects(arr: np.ndarray) -> bool:
    # O(n^2) proper-crossing scan; fine for desk-scale polygons.
    n = arr.shape[0]

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    for i in range(n):
        a1, a2 = arr[i], arr[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            b1, b2 = arr[j], arr[(j + 1) % n]
            d1 = orient(a1, a2, b1)
            d2 = orient(a1, a2, b2)
            d3 = orient(b1, b2, a1)
            d4 = orient(b1, b2, a2)
            if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
                return True
    return False


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """Half-plane {p : nx*x + ny*y <= offset} with unit normal."""

    nx: float
    ny: float
    offset: float

    def __post_init__(self):
        norm = math.sqrt(self.nx * self.nx + self.ny * self.ny)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"normal must be unit length, |n| = {norm}")

    @classmethod
    def bisector(cls, p: Point2, q: Point2) -> "HalfPlane":
        """Half-plane of points at least as close to p as to q."""
        dx = q.x - p.x
        dy = q.y - p.y
        length = math.sqrt(dx * dx + dy * dy)
        if length <= EPS_GEOM:
            raise ValueError("bisector of (near-)coincident points")
        nx = dx / length
        ny = dy / length
        c = nx * (p.x + q.x) * 0.5 + ny * (p.y + q.y) * 0.5
        return cls(nx, ny, c)


def area(poly: ConvexPolygon) -> float:
    """Shoelace area; strictly positive for a valid polygon."""
    a = float(_kernels.polygon_area(poly.vertex_array))
    if a <= EPS_GEOM * EPS_GEOM:
        raise DegenerateGeometryError(f"degenerate polygon of area {a}")
    return a


def centroid(poly: ConvexPolygon) -> Point2:
    """Area-weighted polygon centroid; lies strictly inside a convex polygon."""
    cx, cy = _kernels.polygon_centroid(poly.vertex_array)
    return Point2(float(cx), float(cy))


def diameter(poly: ConvexPolygon) -> float:
    """Max pairwise vertex distance; equals the diameter for convex polygons."""
    return float(_kernels.polygon_diameter(poly.vertex_array))


def clip(poly: ConvexPolygon, hp: HalfPlane) -> ConvexPolygon | None:
    """Intersection of poly with the half-plane; None when empty.

    Vertices within EPS_GEOM of the cut line are snapped onto it and
    near-duplicate output vertices are merged, so Lloyd iterations do not
    accumulate sliver edges.
    """
    res = _kernels.clip_halfplane(poly.vertex_array, hp.nx, hp.ny, hp.offset, EPS_GEOM)
    if res is None:
        return None
    return ConvexPolygon(res)


def convex_hull(points: Iterable[Point2]) -> ConvexPolygon:
    """CCW convex hull via monotone chain; collinear boundary points dropped."""
    pts = sorted({(p.x, p.y) for p in points})
    if len(pts) < 3:
        raise DegenerateGeometryError("hull needs >= 3 distinct points")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= EPS_GEOM:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= EPS_GEOM:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateGeometryError("points are (near-)collinear")
    return ConvexPolygon(np.array(hull, dtype=np.float64))


def contains(poly: ConvexPolygon | SimplePolygon, p: Point2) -> bool:
    """True iff p is inside poly or within EPS_GEOM of its boundary."""
    if isinstance(poly, ConvexPolygon):
        return bool(_kernels.point_in_convex(poly.vertex_array, p.x, p.y, EPS_GEOM))
    return _contains_simple(poly.vertex_array, p.x, p.y)


def _contains_simple(arr: np.ndarray, x: float, y: float) -> bool:
    n = arr.shape[0]
    # boundary proximity first, then even-odd ray casting
    for i in range(n):
        x1, y1 = arr[i]
        x2, y2 = arr[(i + 1) % n]
        ex = x2 - x1
        ey = y2 - y1
        t = ((x - x1) * ex + (y - y1) * ey) / (ex * ex + ey * ey)
        t = min(1.0, max(0.0, t))
        qx = x1 + t * ex
        qy = y1 + t * ey
        if (x - qx) ** 2 + (y - qy) ** 2 <= EPS_GEOM * EPS_GEOM:
            return True
    inside = False
    for i in range(n):
        x1, y1 = arr[i]
        x2, y2 = arr[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xcross = x1 + (y - y1) / (y2 - y1) * (x2 - x1)
            if x < xcross:
                inside = not inside
    return inside


def rotate_about(points: Sequence[Point2], center: Point2, angle: float) -> list[Point2]:
    """Rigid rotation of points about center by angle (radians, CCW)."""
    if not math.isfinite(angle):
        raise ValueError("angle must be finite")
    c = math.cos(angle)
    s = math.sin(angle)
    out = []
    for p in points:
        dx = p.x - center.x
        dy = p.y - center.y
        out.append(Point2(center.x + c * dx - s * dy, center.y + s * dx + c * dy))
    return out


def triangulate_fan(poly: ConvexPolygon) -> list[tuple[Point2, Point2, Point2]]:
    """Fan triangulation from the polygon centroid (n triangles for n edges).

    Always fans from the centroid, even for triangles, so every integration
    path is uniform; the sub-triangle areas sum to area(poly).
    """
    c = centroid(poly)
    verts = poly.vertices
    n = len(verts)
    return [(c, verts[i], verts[(i + 1) % n]) for i in range(n)]


def unit_square() -> ConvexPolygon:
    return ConvexPolygon([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
