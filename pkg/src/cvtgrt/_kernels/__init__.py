"""Kernel backend selection.

Prefers the compiled Cython kernels; falls back to the pure-Python mirror
when the extension is missing.  Set ``CVTGRT_PURE=1`` to force the fallback
(used by the benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("CVTGRT_PURE") == "1":
    from . import pure as _impl

    BACKEND = "python"
else:
    try:
        from . import core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import pure as _impl

        BACKEND = "python"

TRIANGLE_RULE = _impl.TRIANGLE_RULE
polygon_area = _impl.polygon_area
polygon_centroid = _impl.polygon_centroid
polygon_diameter = _impl.polygon_diameter
point_in_convex = _impl.point_in_convex
clip_halfplane = _impl.clip_halfplane
voronoi_cell = _impl.voronoi_cell
quantization_energy_cell = _impl.quantization_energy_cell
lloyd_sweep = _impl.lloyd_sweep
