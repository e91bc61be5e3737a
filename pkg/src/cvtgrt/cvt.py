"""Lloyd's algorithm and the rotational-perturbation escape search.

Two energies are tracked per iteration:

* centroid energy  -- sum over cells of |P_i - C_i|^2 (the discrete CVT
  objective).  It is exactly zero at *any* fixed point, so it cannot rank
  distinct converged tessellations.
* quantization energy -- sum over cells of the integral of |x - P_i|^2.
  Lloyd steps never increase it, which makes it the convergence witness
  and the selection criterion among perturbed restarts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, geom, voronoi
from .errors import DuplicateGeneratorError
from .geom import EPS_GEOM, ConvexPolygon, Point2
from .rng import PCG32, STREAM_ANGLES, STREAM_INIT
from .voronoi import Tessellation, bounded_voronoi


@dataclass(frozen=True, slots=True)
class LloydConfig:
    max_iterations: int = 500
    tol_move: float = 1e-8
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.tol_move > 0.0:
            raise ValueError("tol_move must be positive")


@dataclass(frozen=True, slots=True)
class PerturbConfig:
    n_angles: int = 8
    eps_max: float = math.pi / 8

    def __post_init__(self):
        if self.n_angles < 1:
            raise ValueError("n_angles must be >= 1")
        if not 0.0 < self.eps_max <= math.pi:
            raise ValueError("eps_max must be in (0, pi]")


@dataclass(frozen=True, slots=True)
class LloydRecord:
    centroid_energy: float
    quantization_energy: float
    max_move: float


@dataclass(frozen=True, slots=True)
class LloydTrace:
    records: tuple[LloydRecord, ...]
    converged: bool
    iterations_used: int


def centroid_energy(tess: Tessellation) -> float:
    """Sum of squared generator-to-centroid distances."""
    total = 0.0
    for cell in tess.cells:
        dx = cell.generator.x - cell.centroid.x
        dy = cell.generator.y - cell.centroid.y
        total += dx * dx + dy * dy
    return total


def quantization_energy(tess: Tessellation) -> float:
    """Sum over cells of the integral of |x - P_i|^2 (7-point rule per fan triangle)."""
    total = 0.0
    for cell in tess.cells:
        total += _kernels.quantization_energy_cell(
            cell.polygon.vertex_array, cell.generator.x, cell.generator.y
        )
    return total


def lloyd_step(generators: list[Point2], domain: ConvexPolygon):
    """One relocation: returns (cell centroids, tessellation of the OLD generators)."""
    tess = bounded_voronoi(generators, domain)
    return [c.centroid for c in tess.cells], tess


def lloyd(generators: list[Point2], domain: ConvexPolygon, cfg: LloydConfig):
    """Iterate Lloyd steps until the max generator displacement drops below
    cfg.tol_move or max_iterations is hit (non-convergence is not an error).

    Returns (tessellation of the final generators, trace with one record per
    iteration).  Displacement rather than energy deltas drives convergence:
    it is the quantity the update controls directly.
    """
    pts = voronoi._check_generators(generators, domain)
    dom = domain.vertex_array
    records = []
    converged = False
    for _ in range(cfg.max_iterations):
        pts, ce, qe, max_move = _kernels.lloyd_sweep(pts, dom, EPS_GEOM)
        records.append(LloydRecord(float(ce), float(qe), float(max_move)))
        if max_move < cfg.tol_move:
            converged = True
            break
    final_gens = [Point2(float(x), float(y)) for x, y in pts]
    tess = bounded_voronoi(final_gens, domain)
    trace = LloydTrace(records=tuple(records), converged=converged,
                       iterations_used=len(records))
    return tess, trace


def sample_initial_generators(domain: ConvexPolygon, k: int, rng_seed: int,
                              stream: int = STREAM_INIT) -> list[Point2]:
    """k i.i.d. uniform points in the domain via seeded rejection sampling.

    Draws (x, y) uniformly from the bounding box with a PCG32 stream and
    keeps points inside the domain; a point closer than EPS_GEOM to an
    accepted one is re-drawn.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = PCG32(rng_seed, stream)
    xmin, ymin, xmax, ymax = domain.bounding_box()
    out: list[Point2] = []
    attempts = 0
    max_attempts = 100_000 * k
    while len(out) < k:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError(f"rejection sampling failed to place {k} points")
        x = rng.uniform(xmin, xmax)
        y = rng.uniform(ymin, ymax)
        p = Point2(x, y)
        if not geom.contains(domain, p):
            continue
        eps2 = EPS_GEOM * EPS_GEOM
        if any((p.x - q.x) ** 2 + (p.y - q.y) ** 2 <= eps2 for q in out):
            continue
        out.append(p)
    return out


def _project_inside(p: Point2, domain: ConvexPolygon, center: Point2) -> Point2:
    """Nearest boundary point, nudged EPS_GEOM toward the domain centroid."""
    arr = domain.vertex_array
    n = arr.shape[0]
    best_d2 = math.inf
    bx = by = 0.0
    for i in range(n):
        x1, y1 = arr[i]
        x2, y2 = arr[(i + 1) % n]
        ex = x2 - x1
        ey = y2 - y1
        t = ((p.x - x1) * ex + (p.y - y1) * ey) / (ex * ex + ey * ey)
        t = min(1.0, max(0.0, t))
        qx = x1 + t * ex
        qy = y1 + t * ey
        d2 = (p.x - qx) ** 2 + (p.y - qy) ** 2
        if d2 < best_d2:
            best_d2 = d2
            bx, by = qx, qy
    dx = center.x - bx
    dy = center.y - by
    norm = math.sqrt(dx * dx + dy * dy)
    return Point2(bx + EPS_GEOM * dx / norm, by + EPS_GEOM * dy / norm)


def perturbed_lloyd(generators: list[Point2], domain: ConvexPolygon,
                    cfg: LloydConfig, pcfg: PerturbConfig,
                    angle_rng: PCG32 | None = None):
    """Lloyd plus a search over small rigid rotations of the converged seeds.

    The identity rotation is always a candidate, so the best quantization
    energy found is never worse than plain Lloyd's.  The remaining
    n_angles - 1 angles are drawn uniformly from [-eps_max, eps_max]; each
    candidate rotates the converged generator set about the domain centroid
    and re-runs Lloyd.  Ties are broken toward the smallest |angle|.

    Returns (tessellation, trace, chosen_angle).
    """
    base_tess, base_trace = lloyd(generators, domain, cfg)
    base_q = quantization_energy(base_tess)

    rng = angle_rng if angle_rng is not None else PCG32(cfg.rng_seed, STREAM_ANGLES)
    angles = [0.0]
    for _ in range(pcfg.n_angles - 1):
        angles.append(rng.uniform(-pcfg.eps_max, pcfg.eps_max))

    center = geom.centroid(domain)
    base_gens = base_tess.generators
    # (energy, |angle|, angle) keyed candidates; identity evaluated first
    best = (base_q, 0.0, 0.0, base_tess, base_trace)
    for angle in angles[1:]:
        rotated = geom.rotate_about(base_gens, center, angle)
        rotated = [p if geom.contains(domain, p) else _project_inside(p, domain, center)
                   for p in rotated]
        try:
            tess, trace = lloyd(rotated, domain, cfg)
        except DuplicateGeneratorError:
            continue  # projection collapsed two seeds; candidate dropped
        q = quantization_energy(tess)
        key = (q, abs(angle), angle)
        if key < (best[0], best[1], best[2]):
            best = (q, abs(angle), angle, tess, trace)
    return best[3], best[4], best[2]
