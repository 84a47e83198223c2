"""Deterministic SVG scatter of Pareto fronts.

Written by hand rather than through a plotting library so the bytes depend on
the front alone (no timestamps, ids or font metrics).
"""

from __future__ import annotations

from html import escape

from .model import ParetoFront

WIDTH, HEIGHT = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 80, 30, 40, 60
STYLES = (
    ("#1f77b4", "circle"),
    ("#d62728", "square"),
)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _ticks(lo: int, hi: int, count: int = 5) -> list[int]:
    if hi == lo:
        return [lo]
    step = max(1, round((hi - lo) / count))
    return list(range(lo, hi + 1, step))


def _marker(kind: str, x: float, y: float, colour: str) -> str:
    if kind == "square":
        return (
            f'<rect x="{_fmt(x - 5)}" y="{_fmt(y - 5)}" width="10" height="10" '
            f'fill="none" stroke="{colour}" stroke-width="2"/>'
        )
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{colour}"/>'


def render_svg(fronts: list[ParetoFront], title: str = "") -> bytes:
    """Scatter every front's (f1, f2) points with an f1-sorted polyline per front."""
    vectors = [v for f in fronts for v in f.vectors()]
    if vectors:
        x_lo, x_hi = min(v[0] for v in vectors), max(v[0] for v in vectors)
        y_lo, y_hi = min(v[1] for v in vectors), max(v[1] for v in vectors)
    else:
        x_lo = x_hi = y_lo = y_hi = 0
    x_pad = max(1, (x_hi - x_lo) // 10)
    y_pad = max(1, (y_hi - y_lo) // 10)
    x_lo, x_hi, y_lo, y_hi = x_lo - x_pad, x_hi + x_pad, y_lo - y_pad, y_hi + y_pad
    plot_w, plot_h = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x: float) -> float:
        return LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x_lo + x_pad, x_hi - x_pad):
        x = sx(t)
        out.append(f'<line x1="{_fmt(x)}" y1="{TOP + plot_h}" x2="{_fmt(x)}" y2="{TOP + plot_h + 5}" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{TOP + plot_h + 18}" text-anchor="middle">{t}</text>')
    for t in _ticks(y_lo + y_pad, y_hi - y_pad):
        y = sy(t)
        out.append(f'<line x1="{LEFT - 5}" y1="{_fmt(y)}" x2="{LEFT}" y2="{_fmt(y)}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{_fmt(y + 4)}" text-anchor="end">{t}</text>')
    out.append(
        f'<text x="{LEFT + plot_w / 2:.2f}" y="{HEIGHT - 15}" text-anchor="middle">total travel time (f1)</text>'
    )
    out.append(
        f'<text x="20" y="{TOP + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 20 {TOP + plot_h / 2:.2f})">route compactness (f2)</text>'
    )
    if title:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')

    for k, front in enumerate(fronts):
        colour, kind = STYLES[k % len(STYLES)]
        label = escape(front.method or f"front {k + 1}")
        out.append(f'<g class="front" data-method="{label}">')
        pts = sorted(front.vectors())
        if len(pts) > 1:
            path = " ".join(f"{_fmt(sx(a))},{_fmt(sy(b))}" for a, b in pts)
            out.append(f'<polyline points="{path}" fill="none" stroke="{colour}" stroke-width="1"/>')
        for a, b in pts:
            out.append(_marker(kind, sx(a), sy(b), colour))
        out.append("</g>")
        ly = TOP + 15 + 18 * k
        out.append(_marker(kind, WIDTH - RIGHT - 120, ly - 4, colour))
        out.append(f'<text x="{WIDTH - RIGHT - 108}" y="{ly}">{label} ({len(pts)} points)</text>')
    if not vectors:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="{HEIGHT / 2:.2f}" text-anchor="middle">empty front</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
