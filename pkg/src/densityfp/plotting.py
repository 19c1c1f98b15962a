"""Minimal SVG emitter for density curves.

Coordinates are decimal (12 significant digits); tick labels on the t axis
show the exact rational corner abscissas.  CSV stays the exact interchange
format, SVG is only for looking at.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape

from .pwl import PiecewiseLinear, evaluate, to_decimal_str
from .seqcore import format_rational

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


@dataclass(frozen=True)
class PlotSpec:
    k_range: Tuple[int, int]
    t_max: Fraction
    format: str = "csv"
    include_trapezoids: bool = False
    include_densigram: bool = False

    def __post_init__(self):
        lo, hi = self.k_range
        if lo > hi or lo < 0:
            raise ValueError(f"empty or negative k range {self.k_range}")
        if self.t_max <= 0:
            raise ValueError("t_max must be positive")
        if self.format not in ("csv", "svg"):
            raise ValueError(f"unknown format {self.format!r}")

    @property
    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)


def default_tmax(fs: Sequence[PiecewiseLinear]) -> Fraction:
    last = max((f.corners[-1][0] for f in fs if f.corners), default=Fraction(0))
    return last * Fraction(11, 10) if last > 0 else Fraction(1)


def _polyline(f: PiecewiseLinear, t_max: Fraction) -> List[Tuple[Fraction, Fraction]]:
    pts = [p for p in f.points if p[0] < t_max]
    pts.append((t_max, evaluate(f, t_max)))
    return pts


def render_svg(curves: Sequence[Tuple[str, PiecewiseLinear]], t_max: Fraction,
               title: str = "", width: int = 640, height: int = 360) -> str:
    margin = 48
    v_max = max((v for _, f in curves for _, v in _polyline(f, t_max)), default=Fraction(1))
    v_max = v_max or Fraction(1)
    pw, ph = width - 2 * margin, height - 2 * margin

    def x(t):
        return to_decimal_str(margin + Fraction(pw) * t / t_max)

    def y(v):
        return to_decimal_str(margin + Fraction(ph) * (1 - v / v_max))

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'font-family="sans-serif" font-size="9">']
    if title:
        out.append(f'<text x="{margin}" y="{margin // 2}" font-size="12">{escape(title)}</text>')
    out.append(f'<line x1="{margin}" y1="{y(0)}" x2="{width - margin}" y2="{y(0)}" stroke="black"/>')
    out.append(f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{y(0)}" stroke="black"/>')
    out.append(f'<text x="{margin - 4}" y="{y(v_max)}" text-anchor="end">{format_rational(v_max)}</text>')

    ticks = sorted({t for _, f in curves for t in f.abscissas if t <= t_max})
    for t in ticks:
        out.append(f'<line x1="{x(t)}" y1="{y(0)}" x2="{x(t)}" y2="{to_decimal_str(Fraction(height - margin + 4))}" '
                   f'stroke="black"/>')
        out.append(f'<text transform="translate({x(t)},{height - margin + 8}) rotate(60)">'
                   f'{format_rational(t)}</text>')

    for n, (label, f) in enumerate(curves):
        colour = PALETTE[n % len(PALETTE)]
        coords = " ".join(f"{x(t)},{y(v)}" for t, v in _polyline(f, t_max))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{coords}"/>')
        out.append(f'<text x="{width - margin + 4}" y="{margin + 12 * n}" fill="{colour}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
