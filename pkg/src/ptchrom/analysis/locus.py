"""Regions of the complex q-plane by dominant basis term, and their boundary."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

HALF_SQRT3 = math.sqrt(3.0) / 2
Q_T = complex(2.5, HALF_SQRT3)
LINE_TOP = 3.0
FLOAT_TOL = 1e-12


class RegionTag(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    ARC_13 = "boundary_arc_13"
    ARC_23 = "boundary_arc_23"
    LINE_12 = "boundary_line_12"
    TRIPLE = "triple_point"

    @property
    def tag(self) -> str:
        return self.value

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LocusPoint:
    q: complex
    tag: RegionTag


def classify_region(q: complex | tuple[Fraction, Fraction]) -> RegionTag:
    """Which of q-2, q-3, -1 has the largest modulus at ``q`` (or which tie).

    A pair of rationals is classified exactly; a complex float is converted
    to its exact binary value and boundaries are accepted within 1e-12.
    """
    if isinstance(q, tuple):
        x, y = Fraction(q[0]), Fraction(q[1])
        tol = Fraction(0)
    else:
        z = complex(q)
        x, y = Fraction(z.real), Fraction(z.imag)
        tol = Fraction(FLOAT_TOL)
    d2 = (x - 2) ** 2 + y * y - 1  # |q-2|^2 - 1
    d3 = (x - 3) ** 2 + y * y - 1  # |q-3|^2 - 1
    dl = x - Fraction(5, 2)  # |q-2|^2 - |q-3|^2 = 2x - 5
    on2, on3, online = abs(d2) <= tol, abs(d3) <= tol, abs(dl) <= tol
    if on2 and on3:
        return RegionTag.TRIPLE
    if on2 and d3 < 0:
        return RegionTag.ARC_13
    if on3 and d2 < 0:
        return RegionTag.ARC_23
    if online and d2 > 0:
        return RegionTag.LINE_12
    if d2 < 0 and d3 < 0:
        return RegionTag.R3
    if dl > 0:
        return RegionTag.R1
    return RegionTag.R2


def dominant_gap(point: LocusPoint) -> float:
    """Difference of the two tied moduli at a boundary point (zero in exact arithmetic)."""
    z = point.q
    a, b, c = abs(z - 2), abs(z - 3), 1.0
    if point.tag is RegionTag.ARC_13:
        return abs(a - c)
    if point.tag is RegionTag.ARC_23:
        return abs(b - c)
    if point.tag is RegionTag.LINE_12:
        return abs(a - b)
    if point.tag is RegionTag.TRIPLE:
        return max(abs(a - c), abs(b - c))
    raise ValueError("not a boundary point")


def _split(count: int, parts: int) -> list[int]:
    return [count // parts + (1 if i < count % parts else 0) for i in range(parts)]


def _arc(center: float, start: float, stop: float, k: int, tag: RegionTag) -> list[LocusPoint]:
    if k == 0:
        return []
    if k == 1:
        angles = [(start + stop) / 2]
    else:
        angles = [start + (stop - start) * i / (k - 1) for i in range(k)]
    out = []
    for i, t in enumerate(angles):
        end = k > 1 and i in (0, k - 1)
        z = complex(center + math.cos(t), math.sin(t))
        if end:
            z = complex(2.5, math.copysign(HALF_SQRT3, z.imag))
        out.append(LocusPoint(z, RegionTag.TRIPLE if end else tag))
    return out


def _ray(sign: int, k: int) -> list[LocusPoint]:
    step = (LINE_TOP - HALF_SQRT3) / max(k, 1)
    return [LocusPoint(complex(2.5, sign * (HALF_SQRT3 + step * (i + 1))), RegionTag.LINE_12)
            for i in range(k)]


def locus_boundary_sample(count: int) -> list[LocusPoint]:
    """Evenly parameterized points on both arcs and both vertical rays.

    Arcs run between the triple points ``(5 +- i sqrt3)/2`` and carry them
    as endpoints; rays start just above the triple points and stop at
    ``|Im q| = 3``.
    """
    if count < 3:
        raise ValueError("count must be at least 3")
    k13, k23, kup, kdown = _split(count, 4)
    pts = _arc(2.0, -math.pi / 3, math.pi / 3, k13, RegionTag.ARC_13)
    pts += _arc(3.0, 4 * math.pi / 3, 2 * math.pi / 3, k23, RegionTag.ARC_23)
    pts += _ray(1, kup) + _ray(-1, kdown)
    return pts


def render_svg(points: list[LocusPoint], width: int = 480, height: int = 480) -> str:
    """SVG 1.1 drawing of the two arcs, the two rays and the sampled points."""
    xmin, xmax, ymin, ymax = 0.5, 4.5, -3.5, 3.5
    sx = width / (xmax - xmin)
    sy = height / (ymax - ymin)

    def px(z: complex) -> tuple[float, float]:
        return (z.real - xmin) * sx, (ymax - z.imag) * sy

    colours = {
        RegionTag.ARC_13: "#1f77b4",
        RegionTag.ARC_23: "#2ca02c",
        RegionTag.LINE_12: "#d62728",
        RegionTag.TRIPLE: "#000000",
    }
    t1, t2 = px(Q_T), px(Q_T.conjugate())
    r = sx  # unit radius in pixels (sx == sy for the default box)
    top, bot = px(complex(2.5, LINE_TOP)), px(complex(2.5, -LINE_TOP))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="0" y1="{px(0j)[1]:.2f}" x2="{width}" y2="{px(0j)[1]:.2f}" stroke="#bbbbbb"/>',
        f'<path d="M {t2[0]:.2f} {t2[1]:.2f} A {r:.2f} {r:.2f} 0 0 0 {t1[0]:.2f} {t1[1]:.2f}" '
        f'fill="none" stroke="{colours[RegionTag.ARC_13]}" stroke-width="2"/>',
        f'<path d="M {t1[0]:.2f} {t1[1]:.2f} A {r:.2f} {r:.2f} 0 0 0 {t2[0]:.2f} {t2[1]:.2f}" '
        f'fill="none" stroke="{colours[RegionTag.ARC_23]}" stroke-width="2"/>',
        f'<line x1="{t1[0]:.2f}" y1="{t1[1]:.2f}" x2="{top[0]:.2f}" y2="{top[1]:.2f}" '
        f'stroke="{colours[RegionTag.LINE_12]}" stroke-width="2"/>',
        f'<line x1="{t2[0]:.2f}" y1="{t2[1]:.2f}" x2="{bot[0]:.2f}" y2="{bot[1]:.2f}" '
        f'stroke="{colours[RegionTag.LINE_12]}" stroke-width="2"/>',
    ]
    for p in points:
        x, y = px(p.q)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{colours[p.tag]}">'
                     f'<title>{p.tag.value}</title></circle>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
