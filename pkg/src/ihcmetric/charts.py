"""Dependency-free SVG line charts.

Emits a self-contained SVG document with axes, tick labels, a legend, and
one polyline per series.  Series polylines carry class="series" and an
id derived from the label so emitted charts can be checked structurally.
"""

from typing import Sequence

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")

_MARGIN_LEFT = 64
_MARGIN_RIGHT = 24
_MARGIN_TOP = 40
_MARGIN_BOTTOM = 52


def _slug(label: str) -> str:
    return "".join(c.lower() if c.isalnum() else "-" for c in label).strip("-")


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if count < 2:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _format_tick(value: float) -> str:
    return f"{value:.4g}"


def line_chart_svg(
    x_values: Sequence[float],
    series: Sequence[tuple[str, Sequence[float]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    width: int = 640,
    height: int = 420,
) -> str:
    """Render labeled line series over shared x positions as an SVG string."""
    if not x_values:
        raise ValueError("cannot chart an empty x axis")
    if not series:
        raise ValueError("need at least one series to chart")
    for label, values in series:
        if len(values) != len(x_values):
            raise ValueError(
                f"series {label!r} has {len(values)} points for "
                f"{len(x_values)} x positions"
            )

    x_lo, x_hi = min(x_values), max(x_values)
    all_y = [v for _, values in series for v in values]
    y_lo, y_hi = min(all_y), max(all_y)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    # breathing room so curves do not sit on the plot frame
    y_pad = 0.05 * (y_hi - y_lo)
    y_lo -= y_pad
    y_hi += y_pad

    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return _MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="16">{title}</text>'
        )

    # plot frame
    parts.append(
        f'<rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="#333333" stroke-width="1"/>'
    )

    for tick in _ticks(x_lo, x_hi):
        px = sx(tick)
        parts.append(
            f'<line x1="{px:.2f}" y1="{_MARGIN_TOP + plot_h}" x2="{px:.2f}" '
            f'y2="{_MARGIN_TOP + plot_h + 5}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{_MARGIN_TOP + plot_h + 20}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="11">'
            f"{_format_tick(tick)}</text>"
        )
    for tick in _ticks(y_lo, y_hi):
        py = sy(tick)
        parts.append(
            f'<line x1="{_MARGIN_LEFT - 5}" y1="{py:.2f}" x2="{_MARGIN_LEFT}" '
            f'y2="{py:.2f}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT - 9}" y="{py + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_format_tick(tick)}</text>'
        )

    if x_label:
        parts.append(
            f'<text x="{_MARGIN_LEFT + plot_w / 2:.1f}" y="{height - 12}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="13">'
            f"{x_label}</text>"
        )
    if y_label:
        cy = _MARGIN_TOP + plot_h / 2
        parts.append(
            f'<text x="16" y="{cy:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" '
            f'transform="rotate(-90 16 {cy:.1f})">{y_label}</text>'
        )

    for i, (label, values) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        points = " ".join(
            f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(x_values, values)
        )
        parts.append(
            f'<polyline class="series" id="series-{_slug(label)}" '
            f'points="{points}" fill="none" stroke="{color}" stroke-width="2"/>'
        )

    # legend in the top-right corner of the plot area
    for i, (label, _values) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        ly = _MARGIN_TOP + 16 + 18 * i
        lx = _MARGIN_LEFT + plot_w - 110
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 28}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{label}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
