"""Hand-rolled SVG heatmap for scattered ratio fields.

Grid values become colored square cells, domain boundaries are drawn as
polylines on top, and a small colorbar with min/max labels sits on the
right.  Pure string assembly with fixed float formats, so identical
inputs give byte-identical files.
"""

import numpy as np

# trimmed viridis: (t, r, g, b) anchors, linearly interpolated
_ANCHORS = (
    (0.0, 68, 1, 84),
    (0.2, 65, 68, 135),
    (0.4, 42, 120, 142),
    (0.6, 34, 168, 132),
    (0.8, 122, 209, 81),
    (1.0, 253, 231, 37),
)

_WIDTH = 640
_BAR_W = 18
_PAD = 36


def _color(t):
    t = min(max(float(t), 0.0), 1.0)
    for (t0, r0, g0, b0), (t1, r1, g1, b1) in zip(_ANCHORS, _ANCHORS[1:]):
        if t <= t1:
            s = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
            return "rgb(%d,%d,%d)" % (round(r0 + s * (r1 - r0)),
                                      round(g0 + s * (g1 - g0)),
                                      round(b0 + s * (b1 - b0)))
    return "rgb(253,231,37)"


def svg_heatmap(points, values, domains, cell, title=""):
    """Return an SVG document for values sampled at complex points.

    domains is an iterable of Domain objects whose boundaries are drawn
    as outlines; cell is the lattice spacing the points were sampled at,
    used as the square size.
    """
    points = np.asarray(points, dtype=complex).ravel()
    values = np.asarray(values, dtype=float).ravel()
    if points.size == 0:
        raise ValueError("nothing to draw")

    polys = []
    for dom in domains:
        for curve in dom.curves:
            polys.append(curve.polyline(256)[1])
    xs = np.concatenate([p.real for p in polys])
    ys = np.concatenate([p.imag for p in polys])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    span = max(x1 - x0, y1 - y0)
    x0 -= 0.05 * span
    x1 += 0.05 * span
    y0 -= 0.05 * span
    y1 += 0.05 * span

    scale = (_WIDTH - 2 * _PAD - 3 * _BAR_W) / (x1 - x0)
    height = int(round((y1 - y0) * scale)) + 2 * _PAD

    def px(z):
        # svg y runs down the page
        return ((z.real - x0) * scale + _PAD,
                (y1 - z.imag) * scale + _PAD)

    vmin, vmax = float(values.min()), float(values.max())
    vspan = vmax - vmin if vmax > vmin else 1.0

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (_WIDTH, height, _WIDTH, height))
    out.append('<rect width="%d" height="%d" fill="white"/>' % (_WIDTH, height))
    if title:
        out.append(
            '<text x="%d" y="22" font-family="sans-serif" font-size="14">'
            '%s</text>' % (_PAD, title))

    side = cell * scale
    for z, v in zip(points, values):
        cx, cy = px(z)
        out.append(
            '<rect x="%.2f" y="%.2f" width="%.2f" height="%.2f" '
            'fill="%s"/>' % (cx - side / 2, cy - side / 2, side, side,
                             _color((v - vmin) / vspan)))

    for poly in polys:
        coords = " ".join(
            "%.2f,%.2f" % px(z) for z in np.append(poly, poly[0]))
        out.append(
            '<polyline points="%s" fill="none" stroke="#333" '
            'stroke-width="1.2"/>' % coords)

    # colorbar
    bx = _WIDTH - _PAD - _BAR_W
    by0, by1 = _PAD, height - _PAD
    steps = 24
    for i in range(steps):
        t0 = i / steps
        yy1 = by1 - (by1 - by0) * t0
        yy0 = by1 - (by1 - by0) * (i + 1) / steps
        out.append(
            '<rect x="%d" y="%.2f" width="%d" height="%.2f" fill="%s"/>'
            % (bx, yy0, _BAR_W, yy1 - yy0 + 0.5, _color((i + 0.5) / steps)))
    out.append(
        '<text x="%d" y="%.2f" font-family="sans-serif" font-size="11" '
        'text-anchor="end">%.4g</text>' % (bx - 4, by1, vmin))
    out.append(
        '<text x="%d" y="%.2f" font-family="sans-serif" font-size="11" '
        'text-anchor="end">%.4g</text>' % (bx - 4, by0 + 10, vmax))
    out.append("</svg>")
    return "\n".join(out) + "\n"
