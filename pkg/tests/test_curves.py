"""Tests for trigonometric curve fitting and pointwise curve data."""

import numpy as np
import pytest

from caratheodory.errors import GeometryError
from caratheodory.geometry import curve_from_samples, curve_eval, boolean_intersect
from caratheodory.harness import ellipse, two_disc_pair


def _circle_samples(n=256, center=0.0, radius=1.0):
    t = np.arange(n) / n
    return center + radius * np.exp(2j * np.pi * t)


def test_fitted_circle_interpolates_off_sample_points():
    curve = curve_from_samples(_circle_samples())
    # band-limited data, so the trig interpolant is exact off the grid too
    for t in (0.1234, 0.5, 0.876543):
        assert abs(curve.point(t) - np.exp(2j * np.pi * t)) < 1e-10


def test_fitted_circle_velocity_and_curvature():
    curve = curve_from_samples(_circle_samples(radius=2.0))
    ev = curve_eval(curve, 0.3)
    assert abs(abs(ev.tangent) - 1.0) < 1e-12
    assert ev.curvature == pytest.approx(0.5, abs=1e-9)


def test_curve_eval_circle_frame():
    curve = curve_from_samples(_circle_samples())
    ev = curve_eval(curve, 0.0)
    assert abs(ev.point - 1.0) < 1e-12
    assert abs(ev.tangent - 1j) < 1e-10  # counterclockwise
    assert abs(ev.normal - 1.0) < 1e-10  # outward
    assert ev.curvature == pytest.approx(1.0, abs=1e-9)


def test_curve_eval_ellipse_vertex_curvature():
    dom = ellipse()
    # semi-axes 2 and 1, so kappa = a/b^2 = 2 at the major-axis vertex
    ev = curve_eval(dom.outer, 0.0)
    assert abs(ev.point - 2.0) < 1e-12
    assert ev.curvature == pytest.approx(2.0, abs=1e-6)


def test_smooth_curve_has_no_corners():
    assert ellipse().outer.corner_params == ()


def test_corner_parameter_is_rejected():
    lens = boolean_intersect(*two_disc_pair("symmetric"))[0]
    corners = lens.outer.corner_params
    assert len(corners) == 2
    with pytest.raises(GeometryError, match="corner"):
        curve_eval(lens.outer, corners[0])


def test_self_intersecting_samples_are_rejected():
    # limacon with an inner loop: positive signed area, so it gets past
    # the orientation check and trips the crossing detector at the pole
    t = np.arange(256) / 256.0
    limacon = (1.0 + 2.0 * np.cos(2 * np.pi * t)) * np.exp(2j * np.pi * t)
    with pytest.raises(GeometryError, match="self-intersecting"):
        curve_from_samples(limacon)


def test_duplicate_samples_are_rejected():
    # the figure eight hits its waist twice on this grid
    t = np.arange(256) / 256.0
    fig8 = np.sin(2 * np.pi * t) + 1j * np.sin(4 * np.pi * t)
    with pytest.raises(GeometryError, match="not distinct"):
        curve_from_samples(fig8)


def test_too_few_samples_are_rejected():
    with pytest.raises(GeometryError, match="at least 8 sample points"):
        curve_from_samples(_circle_samples(n=6))


def test_clockwise_samples_are_rejected():
    with pytest.raises(GeometryError, match="counterclockwise"):
        curve_from_samples(_circle_samples()[::-1])
