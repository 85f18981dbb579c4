"""
Venn diagrams of syndrome tables.

Each stabilizer is drawn as a closed curve; an error sits inside curve i
exactly when its syndrome has S_i = -1, so every sign pattern is one region
of the diagram.  Two and four sets are drawable (two circles, or the
classical arrangement of four congruent rotated ellipses).  Codes with more
generators get a region listing instead.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np
from scipy import ndimage

from .codes import StabilizerCode
from .decoder import Syndrome, SyndromeTable

__all__ = [
    "TooManySets",
    "Ellipse",
    "VennLayout",
    "layout",
    "region_listing",
    "render_ascii",
    "render_svg",
]

Region = frozenset


class TooManySets(ValueError):
    """The code has more stabilizers than a drawable Venn diagram allows."""


@dataclass(frozen=True)
class Ellipse:
    """Ellipse in unit-square coordinates (y up); ``angle`` in degrees, counterclockwise."""

    cx: float
    cy: float
    rx: float
    ry: float
    angle: float

    def contains(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        t = math.radians(self.angle)
        dx, dy = x - self.cx, y - self.cy
        u = dx * math.cos(t) + dy * math.sin(t)
        v = -dx * math.sin(t) + dy * math.cos(t)
        return (u / self.rx) ** 2 + (v / self.ry) ** 2 <= 1.0


_GEOMETRY = {
    2: (
        Ellipse(0.37, 0.5, 0.24, 0.24, 0.0),
        Ellipse(0.63, 0.5, 0.24, 0.24, 0.0),
    ),
    4: (
        Ellipse(0.350, 0.400, 0.36, 0.225, 140.0),
        Ellipse(0.450, 0.500, 0.36, 0.225, 140.0),
        Ellipse(0.544, 0.500, 0.36, 0.225, 40.0),
        Ellipse(0.644, 0.400, 0.36, 0.225, 40.0),
    ),
}
_OUTSIDE_ANCHOR = (0.06, 0.94)
_GRID = 600


@dataclass(frozen=True)
class VennLayout:
    """Region map of a syndrome table.

    ``regions`` maps the set of stabilizer indices (1-based) with S_i = -1
    to the error labels drawn there: the sound class members, correction
    representative first.  ``aliases`` holds unsound members separately.
    """

    code_name: str
    set_count: int
    regions: dict[Region, tuple[str, ...]]
    aliases: dict[Region, tuple[str, ...]]
    geometry: tuple[Ellipse, ...]

    def ordered_regions(self) -> list[Region]:
        """All 2^set_count regions, ordered by sign pattern as binary S1..Sk."""
        return sorted(self.regions, key=_region_order(self.set_count))

    def label(self, region: Region) -> str:
        return ", ".join(self.regions[region])


def _region_order(set_count: int):
    return lambda r: sum(1 << (set_count - i) for i in r)


def _region_of(s: Syndrome) -> Region:
    return Region(i + 1 for i, v in enumerate(s) if v == -1)


def _table_regions(table: SyndromeTable):
    regions: dict[Region, tuple[str, ...]] = {}
    aliases: dict[Region, tuple[str, ...]] = {}
    for cls in table.classes:
        key = _region_of(cls.syndrome)
        sound = [cls.representative] + [
            m for m in cls.sound_members if m != cls.representative
        ]
        regions[key] = tuple(m.label() for m in sound)
        if cls.unsound:
            aliases[key] = tuple(m.label() for m in cls.unsound)
    return regions, aliases


def layout(code: StabilizerCode, table: SyndromeTable) -> VennLayout:
    k = code.num_stabilizers
    if k > 4:
        raise TooManySets(f"{k} stabilizers: region listing only (use table)")
    if table.code_name != code.name:
        raise ValueError(f"table for {table.code_name!r} does not belong to {code.name!r}")
    regions, aliases = _table_regions(table)
    for size in range(1 << k):
        key = Region(i + 1 for i in range(k) if size >> (k - 1 - i) & 1)
        regions.setdefault(key, ())
    geometry = _GEOMETRY.get(k, ())
    return VennLayout(code.name, k, regions, aliases, geometry)


def region_listing(table: SyndromeTable) -> str:
    """``sets {1,3}: Z1`` lines for any number of stabilizers, in table order."""
    lines = []
    for cls in table.classes:
        key = sorted(_region_of(cls.syndrome))
        others = [m for m in cls.sound_members if m != cls.representative]
        names = ", ".join(m.label() for m in [cls.representative, *others])
        line = f"sets {{{','.join(map(str, key))}}}: {names}"
        if cls.unsound:
            line += f"  (unsound: {', '.join(m.label() for m in cls.unsound)})"
        lines.append(line)
    return "\n".join(lines)


def _listing_from_layout(l: VennLayout) -> str:
    lines = []
    for key in l.ordered_regions():
        line = f"sets {{{','.join(map(str, sorted(key)))}}}: {l.label(key)}"
        if key in l.aliases:
            line += f"  (unsound: {', '.join(l.aliases[key])})"
        lines.append(line)
    return "\n".join(lines)


_ASCII_WIDTH = 60
_ASCII_HEIGHT = 15
_ASCII_CENTERS = (22, 38)
_ASCII_RADIUS = 7.0


def _two_circle_ascii(l: VennLayout) -> str:
    rows = []
    for y in range(_ASCII_HEIGHT):
        chars = []
        for x in range(_ASCII_WIDTH):
            # terminal cells are about twice as tall as wide
            on = any(
                abs(math.hypot((x - c) * 0.5, y - _ASCII_HEIGHT // 2) - _ASCII_RADIUS) < 0.5
                for c in _ASCII_CENTERS
            )
            chars.append("*" if on else " ")
        rows.append(chars)

    def put(row: int, center: int, text: str) -> None:
        start = center - len(text) // 2
        for i, ch in enumerate(text):
            rows[row][start + i] = ch

    mid = _ASCII_HEIGHT // 2
    put(3, 16, "S1")
    put(3, 44, "S2")
    put(mid, 14, l.label(Region({1})))
    put(mid, 30, l.label(Region({1, 2})))
    put(mid, 46, l.label(Region({2})))

    outside = l.label(Region()) or "I"
    if Region() in l.aliases:
        outside += f"  (unsound: {', '.join(l.aliases[Region()])})"
    border = "+" + "-" * (_ASCII_WIDTH + 2) + "+"
    body = [f"| {outside:<{_ASCII_WIDTH}} |"]
    body += [f"| {''.join(r)} |" for r in rows]
    notes = [
        f"| {'unsound in ' + ','.join(map(str, sorted(k))) + ': ' + ', '.join(v):<{_ASCII_WIDTH}} |"
        for k, v in sorted(l.aliases.items(), key=lambda kv: _region_order(2)(kv[0]))
        if k
    ]
    return "\n".join([border, *body, *notes, border])


def render_ascii(l: VennLayout) -> str:
    """Two-circle diagram for two sets; region listing otherwise."""
    if l.set_count == 2:
        return _two_circle_ascii(l)
    return _listing_from_layout(l)


@functools.lru_cache(maxsize=None)
def _label_anchors(set_count: int) -> dict[Region, tuple[float, float]]:
    """Deepest interior point of every region, in unit coordinates.

    Found with a Euclidean distance transform on a fixed raster, so the
    result is deterministic.
    """
    geometry = _GEOMETRY[set_count]
    ys, xs = np.mgrid[0:_GRID, 0:_GRID] + 0.5
    x = xs / _GRID
    y = 1.0 - ys / _GRID
    code = np.zeros((_GRID, _GRID), dtype=np.int64)
    for i, e in enumerate(geometry):
        code |= e.contains(x, y).astype(np.int64) << i
    anchors = {}
    for value in range(1, 1 << set_count):
        mask = code == value
        depth = ndimage.distance_transform_edt(mask)
        iy, ix = np.unravel_index(int(np.argmax(depth)), depth.shape)
        key = Region(i + 1 for i in range(set_count) if value >> i & 1)
        anchors[key] = (round(float(x[iy, ix]), 4), round(float(y[iy, ix]), 4))
    anchors[Region()] = _OUTSIDE_ANCHOR
    return anchors


def _set_name_anchor(e: Ellipse) -> tuple[float, float]:
    """Point just outside the ellipse, on the side facing away from the figure centre."""
    t = math.radians(e.angle)
    best = None
    for step in range(360):
        phi = math.radians(step)
        u, v = e.rx * math.cos(phi), e.ry * math.sin(phi)
        x = e.cx + u * math.cos(t) - v * math.sin(t)
        y = e.cy + u * math.sin(t) + v * math.cos(t)
        dist = math.hypot(x - 0.5, y - 0.5)
        if best is None or dist > best[0] + 1e-12:
            best = (dist, x, y)
    _, x, y = best
    scale = 1 + 0.05 / math.hypot(x - 0.5, y - 0.5)
    return (0.5 + (x - 0.5) * scale, 0.5 + (y - 0.5) * scale)


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
_SIZE = 560
_MARGIN = 20


def _px(x: float, y: float) -> tuple[float, float]:
    return (round(_MARGIN + x * _SIZE, 2), round(_MARGIN + (1.0 - y) * _SIZE, 2))


def render_svg(l: VennLayout, highlight: Syndrome | None = None) -> str:
    """Standalone SVG 1.1 document; ``highlight`` shades one region."""
    if l.set_count not in _GEOMETRY:
        raise TooManySets(f"cannot draw a {l.set_count}-set Venn diagram")
    anchors = _label_anchors(l.set_count)
    total = _SIZE + 2 * _MARGIN
    target = None
    if highlight is not None:
        if len(highlight) != l.set_count:
            raise ValueError(f"highlight has {len(highlight)} signs, expected {l.set_count}")
        target = _region_of(highlight)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'version="1.1" width="{total}" height="{total}" viewBox="0 0 {total} {total}">',
        f"<title>Syndrome Venn diagram: {escape(l.code_name)}</title>",
        "<defs>",
    ]
    for i, e in enumerate(l.geometry, start=1):
        cx, cy = _px(e.cx, e.cy)
        rx, ry = round(e.rx * _SIZE, 2), round(e.ry * _SIZE, 2)
        out.append(
            f'<ellipse id="set{i}" cx="{cx}" cy="{cy}" rx="{rx}" ry="{ry}" '
            f'transform="rotate({-e.angle} {cx} {cy})"/>'
        )
    if target is not None:
        for i in sorted(target):
            out.append(f'<clipPath id="in{i}"><use xlink:href="#set{i}"/></clipPath>')
    out.append("</defs>")
    out.append(f'<rect width="{total}" height="{total}" fill="white"/>')

    if target is not None:
        # shade the intersection of the sets in the region, then blank the others
        shade = f'<rect class="highlight" width="{total}" height="{total}" fill="#ffd54f"/>'
        for i in sorted(target):
            shade = f'<g clip-path="url(#in{i})">{shade}</g>'
        out.append(shade)
        for i in range(1, l.set_count + 1):
            if i not in target:
                out.append(f'<use xlink:href="#set{i}" fill="white" stroke="none"/>')

    for i in range(1, l.set_count + 1):
        color = _COLORS[(i - 1) % len(_COLORS)]
        out.append(
            f'<use xlink:href="#set{i}" class="set" fill="{color}" fill-opacity="0.08" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    for i, e in enumerate(l.geometry, start=1):
        lx, ly = _px(*_set_name_anchor(e))
        out.append(
            f'<text class="set-label" x="{lx}" y="{ly}" font-family="sans-serif" font-size="16" '
            f'fill="{_COLORS[(i - 1) % len(_COLORS)]}" text-anchor="middle" '
            f'dominant-baseline="middle">S{i}</text>'
        )

    for key in l.ordered_regions():
        x, y = _px(*anchors[key])
        text = l.label(key)
        weight = "bold" if key == target else "normal"
        css = "region-label highlighted" if key == target else "region-label"
        anchor = "start" if not key else "middle"
        out.append(
            f'<text class="{css}" data-sets="{",".join(map(str, sorted(key)))}" x="{x}" y="{y}" '
            f'font-family="sans-serif" font-size="15" font-weight="{weight}" '
            f'text-anchor="{anchor}" dominant-baseline="middle">{escape(text)}</text>'
        )
        if key in l.aliases:
            out.append(
                f'<text class="alias-label" data-sets="{",".join(map(str, sorted(key)))}" '
                f'x="{x}" y="{round(y + 16, 2)}" font-family="sans-serif" font-size="11" '
                f'fill="#777777" text-anchor="{anchor}" dominant-baseline="middle">'
                f"({escape(', '.join(l.aliases[key]))})</text>"
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
