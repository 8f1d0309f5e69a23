"""Flat-file SVG rendering of scenes.

Output is deterministic: fixed decimal formatting, stable element
order (frame, segments by height, joins by level then label, labels
last), no timestamps or ids.  Scene x and y share units, so bulges are
true circles there; the screen mapping scales axes independently and
draws them as elliptical arcs.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .scene import Scene


def _f(v: float) -> str:
    return f"{float(v):.6f}"


def render_scene(
    scene: Scene,
    *,
    width: int = 800,
    height: int = 520,
    margin: int = 48,
    portrait: bool = False,
    labels: bool = True,
) -> str:
    xs = [0.0, 1.0]
    ys = [0.0, 1.0]
    for s in scene.segments:
        xs += [float(s.x_lo), float(s.x_hi)]
        ys.append(float(s.y.value))
    for j in scene.joins:
        r = float(j.radius)
        if j.side == "right":
            xs.append(float(j.x0) + r)
        else:
            xs.append(float(j.x0) - r)
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    spanx = (xmax - xmin) or 1.0
    spany = (ymax - ymin) or 1.0
    sx = (width - 2 * margin) / spanx
    sy = (height - 2 * margin) / spany

    def X(v: float) -> float:
        return margin + (v - xmin) * sx

    def Y(v: float) -> float:
        return height - margin - (v - ymin) * sy

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if portrait:
        cx, cy = width / 2, height / 2
        parts.append(f'<g transform="rotate(90 {_f(cx)} {_f(cy)})">')
    parts.append(
        f'<rect x="{_f(margin)}" y="{_f(margin)}" width="{_f(width - 2 * margin)}" '
        f'height="{_f(height - 2 * margin)}" fill="none" stroke="#cccccc" stroke-width="1"/>'
    )
    for s in scene.segments:
        y = Y(float(s.y.value))
        parts.append(
            f'<line x1="{_f(X(float(s.x_lo)))}" y1="{_f(y)}" x2="{_f(X(float(s.x_hi)))}" '
            f'y2="{_f(y)}" stroke="#000000" stroke-width="1.5"/>'
        )
    for j in scene.joins:
        r = float(j.radius)
        x = X(float(j.x0))
        y1, y2 = Y(float(j.y_lo)), Y(float(j.y_hi))
        rx, ry = r * sx, r * sy
        sweep = 0 if j.side == "right" else 1
        parts.append(
            f'<path d="M {_f(x)} {_f(y1)} A {_f(rx)} {_f(ry)} 0 0 {sweep} {_f(x)} {_f(y2)}" '
            f'fill="none" stroke="#3355bb" stroke-width="1.2"/>'
        )
    if labels:
        for s in scene.segments:
            y = Y(float(s.y.value))
            parts.append(
                f'<text x="{_f(X(float(s.x_hi)) + 5)}" y="{_f(y + 3)}" '
                f'font-family="monospace" font-size="10">{escape(s.label)}</text>'
            )
    if portrait:
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
