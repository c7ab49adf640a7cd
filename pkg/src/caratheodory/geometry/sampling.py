"""Deterministic interior point grids.

Lattice points are integer multiples of the spacing, so two domains that
overlap share the exact same candidate points.  No randomness anywhere.
"""

from __future__ import annotations

import numpy as np

from ..errors import GeometryError

_POLY_M = 2048


def _dist_to_polyline(poly, z):
    """Min distance from each point of z to the closed polyline (vectorized)."""
    a = poly
    b = np.roll(poly, -1)
    e = b - a
    ee = np.abs(e) ** 2
    out = np.empty(z.shape, dtype=float)
    step = max(1, 2_000_000 // max(1, poly.size))
    flat = z.ravel()
    res = out.ravel()
    for i in range(0, flat.size, step):
        w = flat[i : i + step, None]
        t = np.real((w - a[None, :]) * np.conj(e[None, :])) / ee[None, :]
        t = np.clip(t, 0.0, 1.0)
        d = np.abs(a[None, :] + t * e[None, :] - w)
        res[i : i + step] = d.min(axis=1)
    return out


def boundary_dist_many(domain, z):
    """Approximate distance to the boundary for many points at once.

    Polyline based; good to ~1e-6 absolute for the smooth curves used here,
    which is plenty for clearance filtering.
    """
    z = np.asarray(z, dtype=complex)
    d = np.full(z.shape, np.inf)
    for c in domain.curves:
        _, poly = c.polyline(_POLY_M)
        d = np.minimum(d, _dist_to_polyline(poly, z))
    return d


def grid_sample(domain, delta, spacing):
    """Interior lattice points with clearance.

    Returns the points of the grid spacing*(Z x Z) that lie inside the
    domain with distance at least delta from the boundary.  Row-major
    order, y increasing then x.
    """
    if spacing <= 0:
        raise GeometryError("spacing must be positive, got %s" % spacing)
    if delta < 0:
        raise GeometryError("delta must be nonnegative, got %s" % delta)
    xmin, xmax, ymin, ymax = domain.bounding_box()
    i0 = int(np.ceil(xmin / spacing)) - 1
    i1 = int(np.floor(xmax / spacing)) + 1
    j0 = int(np.ceil(ymin / spacing)) - 1
    j1 = int(np.floor(ymax / spacing)) + 1
    xs = spacing * np.arange(i0, i1 + 1)
    ys = spacing * np.arange(j0, j1 + 1)
    X, Y = np.meshgrid(xs, ys)
    pts = (X + 1j * Y).ravel()

    keep = domain.contains_many(pts, boundary="exclude")
    pts = pts[keep]
    if delta > 0 and pts.size:
        pts = pts[boundary_dist_many(domain, pts) >= delta]
    return pts
