"""Closed planar curves.

Two chart families cover everything the rest of the package needs:

* ``TrigCurve`` -- a closed curve stored as the periodic trigonometric
  interpolant of complex samples.  Derivatives come from differentiating
  the Fourier series, so smooth sample sets give spectrally accurate
  tangents, normals and curvatures.
* ``PiecewiseCurve`` -- a closed chain of smooth arcs (sub-arcs of other
  curves, circular arcs, offset arcs).  This is what boolean operations
  and offsets produce; corners live at the junctions.

All curves are parameterized over t in [0, 1) and stored counterclockwise
(positive signed area).  Hole orientation is a bookkeeping concern of
``Domain`` and the mesher, never of the curve itself.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np

from ..errors import GeometryError

_GL_X, _GL_W = np.polynomial.legendre.leggauss(32)
_GL_U = 0.5 * (_GL_X + 1.0)  # Gauss-Legendre nodes on [0, 1]
_GL_WU = 0.5 * _GL_W

CurveEval = namedtuple("CurveEval", ["point", "tangent", "normal", "curvature"])


def _as_param_array(t):
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    return np.atleast_1d(t), scalar


def _segments_properly_cross(a0, a1, b0, b1):
    """Vectorized proper-crossing test for segment families (complex endpoints)."""
    d1 = a1 - a0
    d2 = b1 - b0
    c1 = np.imag(np.conj(d1) * (b0 - a0)) * np.imag(np.conj(d1) * (b1 - a0))
    c2 = np.imag(np.conj(d2) * (a0 - b0)) * np.imag(np.conj(d2) * (a1 - b0))
    return (c1 < 0) & (c2 < 0)


def polyline_self_intersects(pts):
    """True if the closed polyline through ``pts`` has a proper self-crossing."""
    m = len(pts)
    a0 = pts
    a1 = np.roll(pts, -1)
    # chunk the O(m^2) pair test to bound memory
    for i0 in range(0, m, 256):
        i1 = min(i0 + 256, m)
        idx_i = np.arange(i0, i1)
        cross = _segments_properly_cross(
            a0[idx_i, None], a1[idx_i, None], a0[None, :], a1[None, :]
        )
        # adjacent segments (and self) share endpoints; ignore them
        diff = (idx_i[:, None] - np.arange(m)[None, :]) % m
        adj = (diff == 0) | (diff == 1) | (diff == m - 1)
        if np.any(cross & ~adj):
            return True
    return False


class TrigCurve:
    """Closed curve through complex samples; periodic trig interpolation.

    Samples must be counterclockwise, distinct, and at least 8 in number.
    The interpolant passes through every sample exactly.
    """

    period = 1.0
    corner_params = ()

    def __init__(self, samples, validate=True):
        z = np.array(samples, dtype=np.complex128).ravel()
        n = z.size
        if n < 8:
            raise GeometryError("need at least 8 sample points, got %d" % n)
        scale = np.max(np.abs(z - z.mean())) + 1e-300
        if validate:
            dmin = self._min_pairwise_gap(z)
            if dmin <= 1e-12 * scale:
                raise GeometryError("sample points are not distinct")
        self.samples = z
        self.samples.flags.writeable = False
        self._n = n
        self._coef = np.fft.fft(z) / n
        self._coef.flags.writeable = False
        self._k = np.fft.fftfreq(n, d=1.0 / n)  # integer frequencies as floats
        self._scale = float(scale)
        # exact signed area of the interpolant from its Fourier modes
        self._area = float(np.pi * np.sum(self._k * np.abs(self._coef) ** 2))
        self._poly_cache = {}
        self._length = None
        if validate:
            if self._area <= 0.0:
                raise GeometryError(
                    "samples must be ordered counterclockwise (signed area %.3g)"
                    % self._area
                )
            if polyline_self_intersects(self.polyline(max(256, 4 * n))[1]):
                raise GeometryError("curve is self-intersecting")

    @staticmethod
    def _min_pairwise_gap(z):
        if z.size > 2048:
            d = np.abs(z - np.roll(z, 1))
            return float(d.min())
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, np.inf)
        return float(d.min())

    # -- series evaluation ------------------------------------------------

    def _eval(self, t, order=0):
        t, scalar = _as_param_array(t)
        coef = self._coef * (2j * np.pi * self._k) ** order
        out = np.empty(t.shape, dtype=np.complex128)
        flat_t = t.ravel()
        flat_o = out.ravel()
        step = max(1, 2_000_000 // max(1, self._n))
        for i in range(0, flat_t.size, step):
            block = flat_t[i : i + step]
            phase = np.exp(2j * np.pi * np.outer(block, self._k))
            flat_o[i : i + step] = phase @ coef
        return complex(out[0]) if scalar else out

    def uniform_eval(self, n, order=0):
        """Derivative of given order at the n uniform nodes j/n (FFT resampling)."""
        if n < self._n:
            return self._eval(np.arange(n) / n, order)
        coef = self._coef * (2j * np.pi * self._k) ** order
        spec = np.zeros(n, dtype=np.complex128)
        idx = self._k.astype(int) % n
        np.add.at(spec, idx, coef)
        return np.fft.ifft(spec) * n

    def point(self, t):
        return self._eval(t, 0)

    def velocity(self, t):
        return self._eval(t, 1)

    def acceleration(self, t):
        return self._eval(t, 2)

    def jerk(self, t):
        return self._eval(t, 3)

    # -- global quantities -------------------------------------------------

    @property
    def signed_area(self):
        return self._area

    @property
    def length(self):
        if self._length is None:
            m = max(1024, 8 * self._n)
            self._length = float(np.mean(np.abs(self.uniform_eval(m, 1))))
        return self._length

    def curvature_samples(self):
        """Signed curvature at a dense set of parameters (for reach checks)."""
        m = max(512, 8 * self._n)
        v = self.uniform_eval(m, 1)
        a = self.uniform_eval(m, 2)
        return np.imag(np.conj(v) * a) / np.abs(v) ** 3

    def polyline(self, m):
        """(params, points) of an m-point uniform polyline; cached per m."""
        if m not in self._poly_cache:
            params = np.arange(m) / m
            self._poly_cache[m] = (params, self.uniform_eval(m, 0))
        return self._poly_cache[m]


def _normalized(v):
    m = abs(v)
    if m == 0.0:
        raise GeometryError("zero velocity on curve")
    return v / m


class _ArcBase:
    """Open smooth arc over u in [0, 1]; endpoints are junction candidates."""

    _length = None

    @property
    def length(self):
        if self._length is None:
            self._length = float(np.sum(np.abs(self.velocity(_GL_U)) * _GL_WU))
        return self._length

    def signed_area_integral(self):
        """Contribution of this arc to (1/2) Im closed-integral conj(z) dz."""
        p = self.point(_GL_U)
        v = self.velocity(_GL_U)
        return float(0.5 * np.sum(np.imag(np.conj(p) * v) * _GL_WU))


class SubArc(_ArcBase):
    """Sub-arc of a closed curve between source parameters t0 and t1.

    t1 < t0 traverses the source backwards; |t1 - t0| may exceed the
    wrap point (parameters are reduced mod 1 at evaluation).
    """

    def __init__(self, curve, t0, t1):
        if t0 == t1:
            raise GeometryError("degenerate sub-arc")
        self.curve = curve
        self.t0 = float(t0)
        self.t1 = float(t1)

    def _src(self, u):
        return (self.t0 + np.asarray(u, float) * (self.t1 - self.t0)) % 1.0

    def point(self, u):
        return self.curve.point(self._src(u))

    def velocity(self, u):
        return (self.t1 - self.t0) * self.curve.velocity(self._src(u))

    def acceleration(self, u):
        return (self.t1 - self.t0) ** 2 * self.curve.acceleration(self._src(u))

    def jerk(self, u):
        return (self.t1 - self.t0) ** 3 * self.curve.jerk(self._src(u))

    def reversed(self):
        return SubArc(self.curve, self.t1, self.t0)


class CircleArc(_ArcBase):
    """Circular arc; ang1 < ang0 runs clockwise."""

    def __init__(self, center, radius, ang0, ang1):
        if radius <= 0 or ang0 == ang1:
            raise GeometryError("degenerate circular arc")
        self.center = complex(center)
        self.radius = float(radius)
        self.ang0 = float(ang0)
        self.ang1 = float(ang1)

    def _phase(self, u):
        ang = self.ang0 + np.asarray(u, float) * (self.ang1 - self.ang0)
        return np.exp(1j * ang)

    def point(self, u):
        return self.center + self.radius * self._phase(u)

    def velocity(self, u):
        return 1j * (self.ang1 - self.ang0) * self.radius * self._phase(u)

    def acceleration(self, u):
        return -((self.ang1 - self.ang0) ** 2) * self.radius * self._phase(u)

    def jerk(self, u):
        return -1j * (self.ang1 - self.ang0) ** 3 * self.radius * self._phase(u)

    def reversed(self):
        return CircleArc(self.center, self.radius, self.ang1, self.ang0)


class ClippedArc(_ArcBase):
    """Re-parameterized sub-interval [u0, u1] of another arc (u1 < u0 reverses)."""

    def __init__(self, base, u0, u1):
        if u0 == u1:
            raise GeometryError("degenerate clipped arc")
        self.base = base
        self.u0 = float(u0)
        self.u1 = float(u1)

    def _src(self, u):
        return self.u0 + np.asarray(u, float) * (self.u1 - self.u0)

    def point(self, u):
        return self.base.point(self._src(u))

    def velocity(self, u):
        return (self.u1 - self.u0) * self.base.velocity(self._src(u))

    def acceleration(self, u):
        return (self.u1 - self.u0) ** 2 * self.base.acceleration(self._src(u))

    def jerk(self, u):
        return (self.u1 - self.u0) ** 3 * self.base.jerk(self._src(u))

    def reversed(self):
        return ClippedArc(self.base, self.u1, self.u0)


class OffsetArc(_ArcBase):
    """Parallel arc at signed distance along -i * unit tangent of the base.

    Positive ``dist`` is the outward side of a counterclockwise base.  The
    derivative formulas consume base derivatives up to third order, so
    offsetting an OffsetArc is not supported (and never needed: thickenings
    are always taken from the original domain).
    """

    def __init__(self, base, dist):
        if isinstance(base, OffsetArc):
            raise GeometryError("offset of an offset arc is not supported")
        self.base = base
        self.dist = float(dist)

    def _frames(self, u, order):
        v = self.base.velocity(u)
        s = np.abs(v)
        n = -1j * v / s
        if order == 0:
            return (n,)
        a = self.base.acceleration(u)
        sp = np.real(np.conj(v) * a) / s
        np1 = -1j * (a / s - v * sp / s**2)
        if order == 1:
            return n, np1
        j = self.base.jerk(u)
        spp = (np.abs(a) ** 2 + np.real(np.conj(v) * j) - sp**2) / s
        np2 = -1j * (
            j / s - 2.0 * a * sp / s**2 - v * spp / s**2 + 2.0 * v * sp**2 / s**3
        )
        return n, np1, np2

    def point(self, u):
        (n,) = self._frames(u, 0)
        return self.base.point(u) + self.dist * n

    def velocity(self, u):
        _, np1 = self._frames(u, 1)
        return self.base.velocity(u) + self.dist * np1

    def acceleration(self, u):
        _, _, np2 = self._frames(u, 2)
        return self.base.acceleration(u) + self.dist * np2

    def jerk(self, u):
        raise GeometryError("third derivative of an offset arc is not available")

    def reversed(self):
        return OffsetArc(self.base.reversed(), -self.dist)


class PiecewiseCurve:
    """Closed chain of smooth arcs; corners are junctions with a tangent jump.

    The global parameter allocates [0, 1) to the arcs proportionally to
    arclength, so t is close to (but not exactly) an arclength fraction.
    """

    period = 1.0
    _CORNER_ANGLE = 1e-6  # radians; junctions turning less are smooth joins

    def __init__(self, segments, validate=True):
        segments = list(segments)
        if len(segments) < 1:
            raise GeometryError("piecewise curve needs at least one segment")
        self.segments = tuple(segments)
        lens = np.array([seg.length for seg in segments])
        if np.any(lens <= 0):
            raise GeometryError("zero-length segment")
        self._total_length = float(lens.sum())
        self.breaks = np.concatenate([[0.0], np.cumsum(lens) / lens.sum()])
        self.breaks[-1] = 1.0
        self.breaks.flags.writeable = False

        ends = np.array([seg.point(1.0) for seg in segments])
        starts = np.array([seg.point(0.0) for seg in segments])
        scale = max(np.max(np.abs(ends)), 1.0)
        gaps = np.abs(ends - np.roll(starts, -1))
        if validate and np.any(gaps > 1e-7 * scale):
            raise GeometryError(
                "segments do not chain into a closed loop (max gap %.3g)"
                % gaps.max()
            )
        corners = []
        for i in range(len(segments)):
            t_out = _normalized(segments[i - 1].velocity(1.0))
            t_in = _normalized(segments[i].velocity(0.0))
            if abs(np.angle(t_in / t_out)) > self._CORNER_ANGLE:
                corners.append(self.breaks[i])
        self.corner_params = tuple(sorted(corners))

        self._area = float(sum(seg.signed_area_integral() for seg in segments))
        self.samples = np.concatenate(
            [np.asarray(seg.point(np.arange(16) / 16.0)) for seg in segments]
        )
        self.samples.flags.writeable = False
        self._poly_cache = {}
        if validate and polyline_self_intersects(self.polyline(1024)[1]):
            raise GeometryError("piecewise curve is self-intersecting")

    # -- chart -------------------------------------------------------------

    def _locate(self, t):
        t = np.asarray(t, float) % 1.0
        idx = np.clip(
            np.searchsorted(self.breaks, t, side="right") - 1,
            0,
            len(self.segments) - 1,
        )
        width = self.breaks[idx + 1] - self.breaks[idx]
        u = (t - self.breaks[idx]) / width
        return idx, u, width

    def _eval(self, t, order):
        t, scalar = _as_param_array(t)
        idx, u, width = self._locate(t)
        out = np.empty(t.shape, dtype=np.complex128)
        for i in np.unique(idx):
            sel = idx == i
            seg = self.segments[i]
            fn = (seg.point, seg.velocity, seg.acceleration, seg.jerk)[order]
            out[sel] = np.asarray(fn(u[sel])) / width[sel] ** order
        return complex(out[0]) if scalar else out

    def point(self, t):
        return self._eval(t, 0)

    def velocity(self, t):
        return self._eval(t, 1)

    def acceleration(self, t):
        return self._eval(t, 2)

    def jerk(self, t):
        return self._eval(t, 3)

    @property
    def signed_area(self):
        return self._area

    @property
    def length(self):
        return self._total_length

    def curvature_samples(self):
        kappas = []
        for seg in self.segments:
            u = np.linspace(0.0, 1.0, 128)
            v = np.asarray(seg.velocity(u))
            a = np.asarray(seg.acceleration(u))
            kappas.append(np.imag(np.conj(v) * a) / np.abs(v) ** 3)
        return np.concatenate(kappas)

    def polyline(self, m):
        """(params, points) polyline with nodes distributed by arclength."""
        if m not in self._poly_cache:
            params = []
            for i, seg in enumerate(self.segments):
                mi = max(8, int(round(m * (self.breaks[i + 1] - self.breaks[i]))))
                lo, hi = self.breaks[i], self.breaks[i + 1]
                params.append(lo + (hi - lo) * np.arange(mi) / mi)
            params = np.concatenate(params)
            self._poly_cache[m] = (params, self._eval(params, 0))
        return self._poly_cache[m]

    def reversed(self):
        segs = [seg.reversed() for seg in reversed(self.segments)]
        return PiecewiseCurve(segs, validate=False)


def curve_from_samples(points, min_samples=64):
    """Build a smooth closed curve through the given complex points.

    The points must be distinct, counterclockwise, and at least 8.  If fewer
    than ``min_samples`` are given, the stored sample set is refined by exact
    trigonometric resampling (the curve itself is unchanged).
    """
    curve = TrigCurve(points)
    if curve.samples.size < min_samples:
        curve = TrigCurve(curve.uniform_eval(int(min_samples)), validate=False)
    return curve


def curve_eval(curve, t):
    """Point, unit tangent, outward unit normal and signed curvature at t.

    Raises ``GeometryError`` at corner parameters of piecewise curves,
    where the tangent is not defined.
    """
    t = float(t) % 1.0
    for tc in curve.corner_params:
        d = abs(t - tc)
        if min(d, 1.0 - d) < 1e-12:
            raise GeometryError("tangent undefined at corner parameter %.12g" % t)
    z = curve.point(t)
    v = curve.velocity(t)
    a = curve.acceleration(t)
    speed = abs(v)
    if speed == 0.0:
        raise GeometryError("zero velocity at t=%.12g" % t)
    tangent = v / speed
    normal = -1j * tangent
    curvature = float(np.imag(np.conj(v) * a) / speed**3)
    return CurveEval(z, tangent, normal, curvature)
