"""Bounded Voronoi diagrams on convex domains.

Cells are built by O(n^2) perpendicular-bisector clipping of the domain
polygon; the bounded diagram falls out directly, and for desk-scale
generator counts the quadratic construction beats maintaining a sweep-line
diagram that would need clipping afterwards anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, geom
from .errors import DegenerateGeometryError, DuplicateGeneratorError, OutOfDomainError
from .geom import EPS_GEOM, ConvexPolygon, Point2


@dataclass(frozen=True, slots=True)
class VoronoiCell:
    """A generator point with its clipped cell polygon and cached metrics."""

    generator: Point2
    polygon: ConvexPolygon
    centroid: Point2
    area: float
    diameter: float


@dataclass(frozen=True, slots=True)
class Tessellation:
    domain: ConvexPolygon
    cells: tuple[VoronoiCell, ...]

    @property
    def generators(self) -> list[Point2]:
        return [c.generator for c in self.cells]


def make_cell(generator: Point2, polygon: ConvexPolygon) -> VoronoiCell:
    cx, cy = _kernels.polygon_centroid(polygon.vertex_array)
    return VoronoiCell(
        generator=generator,
        polygon=polygon,
        centroid=Point2(float(cx), float(cy)),
        area=float(_kernels.polygon_area(polygon.vertex_array)),
        diameter=float(_kernels.polygon_diameter(polygon.vertex_array)),
    )


def _check_generators(generators: list[Point2], domain: ConvexPolygon) -> np.ndarray:
    if not generators:
        raise ValueError("need at least one generator")
    pts = np.array([(p.x, p.y) for p in generators], dtype=np.float64)
    for i, p in enumerate(generators):
        if not geom.contains(domain, p):
            raise OutOfDomainError(f"generator {i} at ({p.x}, {p.y}) is outside the domain")
    eps2 = EPS_GEOM * EPS_GEOM
    k = len(generators)
    for i in range(k):
        for j in range(i + 1, k):
            dx = pts[j, 0] - pts[i, 0]
            dy = pts[j, 1] - pts[i, 1]
            if dx * dx + dy * dy <= eps2:
                raise DuplicateGeneratorError(f"generators {i} and {j} coincide within tolerance")
    return pts


def bounded_voronoi(generators: list[Point2], domain: ConvexPolygon) -> Tessellation:
    """Voronoi diagram of the generators clipped to the convex domain.

    Cell i is the intersection of the domain with every half-plane on
    generator i's side of the i-j perpendicular bisectors.  Cells come back
    in generator order and cover the domain.
    """
    pts = _check_generators(generators, domain)
    cells = []
    for i in range(len(generators)):
        verts = _kernels.voronoi_cell(pts, i, domain.vertex_array, EPS_GEOM)
        if verts is None:
            raise DegenerateGeometryError(f"empty Voronoi cell for generator {i}")
        cells.append(make_cell(generators[i], ConvexPolygon(verts)))
    return Tessellation(domain=domain, cells=tuple(cells))


def nearest_generator(tess: Tessellation, p: Point2) -> int:
    """Index of the generator nearest to p; ties go to the lowest index."""
    if not geom.contains(tess.domain, p):
        raise OutOfDomainError(f"point ({p.x}, {p.y}) is outside the domain")
    best = -1
    best_d2 = math.inf
    for i, cell in enumerate(tess.cells):
        g = cell.generator
        dx = p.x - g.x
        dy = p.y - g.y
        d2 = dx * dx + dy * dy
        if d2 < best_d2:
            best_d2 = d2
            best = i
    return best
