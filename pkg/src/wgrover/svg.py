"""Minimal deterministic SVG line and bar plots.

Just axes, ticks, series, and a small legend: enough to eyeball a curve
against a published figure.  Output is a pure function of the data (fixed
coordinate precision, no ids, no timestamps), so repeated runs produce
byte-identical files.
"""

from __future__ import annotations

import math
from pathlib import Path

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 62, 16, 34, 46
PLOT_W = WIDTH - MARGIN_L - MARGIN_R
PLOT_H = HEIGHT - MARGIN_T - MARGIN_B
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"]


def _num(x: float) -> str:
    return format(x, ".2f")


def _nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Roughly `target` round-valued ticks covering [lo, hi]."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + step * 1e-9:
        ticks.append(0.0 if abs(t) < step * 1e-9 else t)
        t += step
    return ticks


def _tick_label(t: float) -> str:
    if t == int(t) and abs(t) < 1e15:
        return str(int(t))
    return format(t, "g")


def _scale(lo: float, hi: float):
    span = hi - lo if hi > lo else 1.0
    return lo, span


def _frame(title: str, xlabel: str, ylabel: str, x_axis, y_axis) -> list[str]:
    (xlo, xspan), (ylo, yspan) = x_axis, y_axis

    def px(x):
        return MARGIN_L + (x - xlo) / xspan * PLOT_W

    def py(y):
        return MARGIN_T + PLOT_H - (y - ylo) / yspan * PLOT_H

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.0f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{PLOT_W}" height="{PLOT_H}" '
        f'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for t in _nice_ticks(xlo, xlo + xspan):
        x = px(t)
        parts.append(
            f'<line x1="{_num(x)}" y1="{MARGIN_T + PLOT_H}" x2="{_num(x)}" '
            f'y2="{MARGIN_T + PLOT_H + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_num(x)}" y="{MARGIN_T + PLOT_H + 18}" '
            f'text-anchor="middle">{_tick_label(t)}</text>'
        )
    for t in _nice_ticks(ylo, ylo + yspan, target=5):
        y = py(t)
        parts.append(
            f'<line x1="{MARGIN_L - 5}" y1="{_num(y)}" x2="{MARGIN_L}" '
            f'y2="{_num(y)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 8}" y="{_num(y)}" text-anchor="end" '
            f'dominant-baseline="middle">{_tick_label(t)}</text>'
        )
    parts.append(
        f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 8}" text-anchor="middle">{xlabel}</text>'
    )
    parts.append(
        f'<text x="16" y="{HEIGHT / 2:.0f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {HEIGHT / 2:.0f})">{ylabel}</text>'
    )
    return parts


def line_plot(
    path: Path,
    series: list[tuple[str, list[float], list[float]]],
    title: str,
    xlabel: str,
    ylabel: str,
) -> None:
    """Write a multi-series line plot; series = [(name, xs, ys), ...]."""
    all_x = [x for _, xs, _ in series for x in xs]
    all_y = [y for _, _, ys in series for y in ys]
    xlo, xhi = min(all_x), max(all_x)
    ylo, yhi = min(all_y), max(all_y)
    ypad = 0.05 * (yhi - ylo if yhi > ylo else 1.0)
    x_axis = _scale(xlo, xhi)
    y_axis = _scale(ylo - ypad, yhi + ypad)
    parts = _frame(title, xlabel, ylabel, x_axis, y_axis)
    (xlo, xspan), (ylo, yspan) = x_axis, y_axis
    for i, (name, xs, ys) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        pts = " ".join(
            f"{_num(MARGIN_L + (x - xlo) / xspan * PLOT_W)},"
            f"{_num(MARGIN_T + PLOT_H - (y - ylo) / yspan * PLOT_H)}"
            for x, y in zip(xs, ys)
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        lx, ly = MARGIN_L + PLOT_W - 130, MARGIN_T + 16 + 16 * i
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(f'<text x="{lx + 28}" y="{ly + 4}">{name}</text>')
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")


def bar_plot(
    path: Path,
    labels: list[int],
    heights: list[float],
    title: str,
    xlabel: str,
    ylabel: str,
) -> None:
    """Write a bar plot over integer labels."""
    ylo = 0.0
    yhi = max(heights) * 1.05 if heights else 1.0
    xlo, xhi = labels[0] - 0.5, labels[-1] + 0.5
    x_axis = _scale(xlo, xhi)
    y_axis = _scale(ylo, yhi)
    parts = _frame(title, xlabel, ylabel, x_axis, y_axis)
    (xlo, xspan), (ylo, yspan) = x_axis, y_axis
    width = 0.8 / xspan * PLOT_W
    for k, h in zip(labels, heights):
        x = MARGIN_L + (k - 0.4 - xlo) / xspan * PLOT_W
        y = MARGIN_T + PLOT_H - (h - ylo) / yspan * PLOT_H
        parts.append(
            f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(width)}" '
            f'height="{_num(MARGIN_T + PLOT_H - y)}" fill="#1f77b4" stroke="black" '
            f'stroke-width="0.5"/>'
        )
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")
