"""Deterministic SVG rendering of colored point configurations.

Output bytes depend only on the configuration, coloring and window, so
renders are reproducible and diffable.  Finite points become colored
markers; points at infinity become labeled markers on the plot border in
their direction; the cubic y^2 = x^3 - x^2 is drawn as a guide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import PointConfiguration
from .groupmodel import Coloring

WIDTH = 640
HEIGHT = 480
MARGIN = 48
CURVE_SAMPLES = 400

PALETTE_3 = ("red", "green", "blue")
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class Window:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    def __post_init__(self) -> None:
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError(f"empty window {self}")

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def color_fill(color: int, k: int) -> str:
    if k == 3:
        return PALETTE_3[color]
    return PALETTE[color % len(PALETTE)]


def _finite_xy(config: PointConfiguration) -> list[tuple[int, float, float]]:
    out = []
    for idx, p in enumerate(config):
        if not p.is_infinite():
            out.append((idx, float(p.X), float(p.Y)))
    return out


def full_window(config: PointConfiguration) -> Window:
    """Bounding box of the finite points, padded 8% each side."""
    finite = _finite_xy(config)
    if not finite:
        return Window(-1.0, 1.0, -1.0, 1.0)
    xs = [x for _, x, _ in finite]
    ys = [y for _, _, y in finite]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    pad_x = 0.08 * (xmax - xmin) or 1.0
    pad_y = 0.08 * (ymax - ymin) or 1.0
    return Window(xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y)


def default_frame(config: PointConfiguration) -> Window | None:
    """Zoom frame suggestion: the cluster in the lowest quarter of the
    x-range, where the points crowd together; None when too few points."""
    finite = _finite_xy(config)
    if len(finite) < 3:
        return None
    xs = sorted(x for _, x, _ in finite)
    cut = xs[0] + 0.25 * (xs[-1] - xs[0])
    cluster = [(x, y) for _, x, y in finite if x <= cut]
    if len(cluster) < 2:
        return None
    xmin = min(x for x, _ in cluster)
    xmax = max(x for x, _ in cluster)
    ymin = min(y for _, y in cluster)
    ymax = max(y for _, y in cluster)
    pad_x = 0.15 * (xmax - xmin) or 0.5
    pad_y = 0.15 * (ymax - ymin) or 0.5
    return Window(xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y)


class _Screen:
    def __init__(self, window: Window):
        self.window = window
        self.sx = (WIDTH - 2 * MARGIN) / (window.xmax - window.xmin)
        self.sy = (HEIGHT - 2 * MARGIN) / (window.ymax - window.ymin)

    def x(self, wx: float) -> float:
        return MARGIN + (wx - self.window.xmin) * self.sx

    def y(self, wy: float) -> float:
        return HEIGHT - MARGIN - (wy - self.window.ymin) * self.sy


def _curve_paths(screen: _Screen) -> list[str]:
    """Polyline guides for the two branches y = +-sqrt(x^3 - x^2), x >= 1."""
    win = screen.window
    lo = max(1.0, win.xmin)
    hi = win.xmax
    if hi <= lo:
        return []
    paths = []
    for sign in (1.0, -1.0):
        coords = []
        for step in range(CURVE_SAMPLES + 1):
            x = lo + (hi - lo) * step / CURVE_SAMPLES
            y = sign * math.sqrt(max(0.0, x * x * x - x * x))
            coords.append(f"{_fmt(screen.x(x))},{_fmt(screen.y(y))}")
        paths.append(
            f'<polyline points="{" ".join(coords)}" fill="none" '
            f'stroke="#bbbbbb" stroke-width="1"/>')
    return paths


def _border_position(direction_x: float, direction_y: float,
                     screen: _Screen) -> tuple[float, float]:
    """Intersection of the ray from the plot center along (dx, dy) (world
    orientation) with the plot rectangle border."""
    cx = WIDTH / 2
    cy = HEIGHT / 2
    dx = direction_x
    dy = -direction_y            # screen y grows downward
    norm = math.hypot(dx, dy) or 1.0
    dx /= norm
    dy /= norm
    steps = []
    if dx > 0:
        steps.append((WIDTH - MARGIN - cx) / dx)
    elif dx < 0:
        steps.append((MARGIN - cx) / dx)
    if dy > 0:
        steps.append((HEIGHT - MARGIN - cy) / dy)
    elif dy < 0:
        steps.append((MARGIN - cy) / dy)
    t = min(s for s in steps if s > 0) if steps else 0.0
    return cx + t * dx, cy + t * dy


def render_svg(config: PointConfiguration, coloring: Coloring,
               window: Window | None = None) -> str:
    """SVG 1.1 document for the configuration under the coloring.

    `window` selects a zoom view; without it the full view is drawn and
    the default zoom frame, when one exists, is outlined.
    """
    if len(coloring) != len(config):
        raise ValueError(
            f"coloring covers {len(coloring)} indices for {len(config)} points")
    zoomed = window is not None
    view = window if zoomed else full_window(config)
    screen = _Screen(view)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" '
        f'width="{WIDTH - 2 * MARGIN}" height="{HEIGHT - 2 * MARGIN}"/></clipPath>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#444444"/>',
    ]

    clipped = ['<g clip-path="url(#plot)">']
    if view.xmin < 0 < view.xmax:
        sx = _fmt(screen.x(0.0))
        clipped.append(f'<line x1="{sx}" y1="{MARGIN}" x2="{sx}" '
                       f'y2="{HEIGHT - MARGIN}" stroke="#dddddd"/>')
    if view.ymin < 0 < view.ymax:
        sy = _fmt(screen.y(0.0))
        clipped.append(f'<line x1="{MARGIN}" y1="{sy}" x2="{WIDTH - MARGIN}" '
                       f'y2="{sy}" stroke="#dddddd"/>')
    clipped.extend(_curve_paths(screen))

    if not zoomed:
        frame = default_frame(config)
        if frame is not None:
            fx = _fmt(screen.x(frame.xmin))
            fy = _fmt(screen.y(frame.ymax))
            fw = _fmt((frame.xmax - frame.xmin) * screen.sx)
            fh = _fmt((frame.ymax - frame.ymin) * screen.sy)
            clipped.append(
                f'<rect x="{fx}" y="{fy}" width="{fw}" height="{fh}" '
                f'fill="none" stroke="#888888" stroke-dasharray="6,3"/>')

    for idx, x, y in _finite_xy(config):
        if zoomed and not view.contains(x, y):
            continue
        fill = color_fill(coloring.color_of(idx), coloring.k)
        clipped.append(
            f'<circle cx="{_fmt(screen.x(x))}" cy="{_fmt(screen.y(y))}" '
            f'r="4" fill="{fill}" stroke="#222222" stroke-width="0.8"/>')
    clipped.append('</g>')
    parts.extend(clipped)

    for idx, p in enumerate(config):
        if not p.is_infinite():
            continue
        bx, by = _border_position(float(p.X), float(p.Y), screen)
        fill = color_fill(coloring.color_of(idx), coloring.k)
        parts.append(
            f'<circle cx="{_fmt(bx)}" cy="{_fmt(by)}" r="5" fill="{fill}" '
            f'stroke="#222222" stroke-width="0.8"/>')
        parts.append(
            f'<text x="{_fmt(bx + 8)}" y="{_fmt(by + 4)}" '
            f'font-family="monospace" font-size="14">inf</text>')

    parts.append('</svg>')
    return "\n".join(parts) + "\n"
