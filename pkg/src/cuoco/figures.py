"""Deterministic SVG drawings of the constructions.

Rendering is a pure function of (data, spec): identical input yields
byte-identical SVG 1.1 text. Coordinates are emitted at a fixed decimal
precision inside a single y-flipped group, so the mathematical orientation
(y up) matches the visual one. Element order is fixed: squares, panels
sorted by label, triangle, circles, lines, labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circles import CircumcircleData, IncircleData
from .decomposition import CuocoDecomposition, SIDE_FRAMES, shoelace
from .geometry import Point, Triangle, VERTICES, dot, foot_of_altitude, perp

KINDS = ("euclid_defect", "cuoco", "cuoco_pairs", "cuoco_obtuse", "incircle", "circumcircle")

_NS = "http://www.w3.org/2000/svg"

FILL_PALETTES = (
    {
        "a": "#bfdbfe", "b": "#bbf7d0", "c": "#fecaca",
        "R": "#fde68a", "S": "#c7d2fe", "T": "#fbcfe8",
        "triangle": "#f3f4f6", "defect": "#fde68a",
    },
    {
        "a": "#93c5fd", "b": "#86efac", "c": "#fca5a5",
        "R": "#fcd34d", "S": "#a5b4fc", "T": "#f9a8d4",
        "triangle": "#e5e7eb", "defect": "#fcd34d",
    },
)

STROKE_PALETTES = (
    {"main": "#1f2937", "light": "#9ca3af", "accent": "#b91c1c"},
    {"main": "#0c4a6e", "light": "#a8a29e", "accent": "#9d174d"},
)


class KindMismatch(ValueError):
    """Data object does not carry what the requested kind draws."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    fill_palette: int = 0
    stroke_palette: int = 0
    labels: bool = True
    precision: int = 6
    omit_degenerate: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}, expected one of {KINDS}")
        if not isinstance(self.precision, int) or not 1 <= self.precision <= 12:
            raise ValueError(f"precision must be an integer in [1, 12], got {self.precision!r}")
        if not 0 <= self.fill_palette < len(FILL_PALETTES):
            raise ValueError(f"fill_palette out of range: {self.fill_palette!r}")
        if not 0 <= self.stroke_palette < len(STROKE_PALETTES):
            raise ValueError(f"stroke_palette out of range: {self.stroke_palette!r}")


_EXPECTED_DATA = {
    "euclid_defect": Triangle,
    "cuoco": CuocoDecomposition,
    "cuoco_pairs": CuocoDecomposition,
    "cuoco_obtuse": CuocoDecomposition,
    "incircle": IncircleData,
    "circumcircle": CircumcircleData,
}


class _Sheet:
    """Collects formatted elements in the fixed order and tracks the bbox."""

    def __init__(self, spec: FigureSpec, diag: float):
        self.spec = spec
        self.fill = FILL_PALETTES[spec.fill_palette]
        self.stroke = STROKE_PALETTES[spec.stroke_palette]
        self.diag = diag
        self.squares: list[str] = []
        self.panels: list[str] = []
        self.triangle: list[str] = []
        self.circles: list[str] = []
        self.lines: list[str] = []
        self.labels: list[str] = []
        self._min_x = math.inf
        self._min_y = math.inf
        self._max_x = -math.inf
        self._max_y = -math.inf

    def fmt(self, value: float) -> str:
        return f"{float(value):.{self.spec.precision}f}"

    def _cover(self, x: float, y: float, pad: float = 0.0) -> None:
        self._min_x = min(self._min_x, x - pad)
        self._min_y = min(self._min_y, y - pad)
        self._max_x = max(self._max_x, x + pad)
        self._max_y = max(self._max_y, y + pad)

    def _points_attr(self, pts) -> str:
        chunks = []
        for p in pts:
            self._cover(p.x, p.y)
            chunks.append(f"{self.fmt(p.x)},{self.fmt(p.y)}")
        return " ".join(chunks)

    @property
    def thin(self) -> str:
        return self.fmt(0.003 * self.diag)

    @property
    def wide(self) -> str:
        return self.fmt(0.005 * self.diag)

    def add_square(self, pts, fill: str) -> None:
        coords = []
        for p in pts:
            self._cover(p.x, p.y)
            coords.append(f"{self.fmt(p.x)} {self.fmt(p.y)}")
        d = "M " + " L ".join(coords) + " Z"
        self.squares.append(
            f'<path class="square" d="{d}" fill="{fill}" fill-opacity="0.5" '
            f'stroke="{self.stroke["main"]}" stroke-width="{self.wide}"/>'
        )

    def add_panel(self, label: str, pts, fill: str, negative: bool, dashed: bool) -> None:
        classes = f"panel panel-{label}" + (" negative" if negative else "")
        paint = "url(#hatch)" if negative else fill
        dash = f' stroke-dasharray="{self.fmt(0.02 * self.diag)}"' if dashed else ""
        self.panels.append(
            f'<polygon class="{classes}" points="{self._points_attr(pts)}" fill="{paint}" '
            f'fill-opacity="0.75" stroke="{self.stroke["accent" if negative else "main"]}" '
            f'stroke-width="{self.thin}"{dash}/>'
        )

    def add_triangle(self, pts, cls: str = "triangle", fill: str | None = None) -> None:
        paint = fill if fill is not None else self.fill["triangle"]
        self.triangle.append(
            f'<polygon class="{cls}" points="{self._points_attr(pts)}" fill="{paint}" '
            f'stroke="{self.stroke["main"]}" stroke-width="{self.wide}"/>'
        )

    def add_polygon(self, cls: str, pts, fill: str) -> None:
        self.triangle.append(
            f'<polygon class="{cls}" points="{self._points_attr(pts)}" fill="{fill}" '
            f'fill-opacity="0.6" stroke="{self.stroke["main"]}" stroke-width="{self.thin}"/>'
        )

    def add_circle(self, cls: str, center: Point, r: float, filled: bool) -> None:
        self._cover(center.x, center.y, pad=r)
        paint = self.stroke["main"] if filled else "none"
        self.circles.append(
            f'<circle class="{cls}" cx="{self.fmt(center.x)}" cy="{self.fmt(center.y)}" '
            f'r="{self.fmt(r)}" fill="{paint}" stroke="{self.stroke["main"]}" '
            f'stroke-width="{self.thin}"/>'
        )

    def add_line(self, cls: str, p: Point, q: Point, dashed: bool = True) -> None:
        self._cover(p.x, p.y)
        self._cover(q.x, q.y)
        dash = f' stroke-dasharray="{self.fmt(0.02 * self.diag)}"' if dashed else ""
        self.lines.append(
            f'<line class="{cls}" x1="{self.fmt(p.x)}" y1="{self.fmt(p.y)}" '
            f'x2="{self.fmt(q.x)}" y2="{self.fmt(q.y)}" stroke="{self.stroke["light"]}" '
            f'stroke-width="{self.thin}"{dash}/>'
        )

    def add_label(self, pos: Point, text: str) -> None:
        if not self.spec.labels:
            return
        self._cover(pos.x, pos.y)
        size = self.fmt(0.045 * self.diag)
        # The group below flips y; each label flips itself back.
        self.labels.append(
            f'<text class="label" transform="translate({self.fmt(pos.x)} {self.fmt(pos.y)}) '
            f'scale(1 -1)" font-size="{size}" font-family="sans-serif" '
            f'text-anchor="middle" fill="{self.stroke["main"]}">{text}</text>'
        )

    def document(self) -> str:
        width = self._max_x - self._min_x
        height = self._max_y - self._min_y
        margin = 0.05 * max(width, height)
        view = (
            f"{self.fmt(self._min_x - margin)} {self.fmt(-(self._max_y + margin))} "
            f"{self.fmt(width + 2 * margin)} {self.fmt(height + 2 * margin)}"
        )
        period = self.fmt(0.025 * self.diag)
        stripe = self.fmt(0.008 * self.diag)
        parts = [
            f'<svg xmlns="{_NS}" version="1.1" viewBox="{view}">',
            "<defs>",
            f'<pattern id="hatch" patternUnits="userSpaceOnUse" width="{period}" '
            f'height="{period}" patternTransform="rotate(45)">',
            f'<rect width="{period}" height="{period}" fill="#ffffff"/>',
            f'<line x1="0" y1="0" x2="0" y2="{period}" stroke="{self.stroke["accent"]}" '
            f'stroke-width="{stripe}"/>',
            "</pattern>",
            "</defs>",
            '<g transform="scale(1 -1)">',
            *self.squares,
            *self.panels,
            *self.triangle,
            *self.circles,
            *self.lines,
            *self.labels,
            "</g>",
            "</svg>",
        ]
        return "\n".join(parts) + "\n"


def _bbox_diag(points) -> float:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def _away_from(anchor: Point, reference: Point, amount: float) -> Point:
    d = anchor - reference
    length = math.hypot(d.x, d.y)
    if length == 0.0:
        return anchor
    k = amount / length
    return Point(anchor.x + k * d.x, anchor.y + k * d.y)


def _centroid(pts) -> Point:
    n = len(pts)
    return Point(sum(p.x for p in pts) / n, sum(p.y for p in pts) / n)


def _vertex_labels(sheet: _Sheet, t: Triangle) -> None:
    centroid = _centroid((t.A, t.B, t.C))
    offset = 0.07 * sheet.diag
    for name in VERTICES:
        sheet.add_label(_away_from(t.vertex(name), centroid, offset), name)


def _draw_euclid_defect(sheet: _Sheet, t: Triangle) -> None:
    foot, _ = foot_of_altitude(t, "A")
    n = perp(t.B - t.C)  # away from A, length |BC|
    sheet.add_polygon("defect", (foot, t.B, t.B + n, foot + n), sheet.fill["defect"])
    sheet.add_triangle((t.A, t.B, t.C))
    sheet.add_line("altitude", t.A, foot)
    _vertex_labels(sheet, t)
    label_pos = _away_from(foot, foot + n, 0.06 * sheet.diag)
    sheet.add_label(label_pos, "D")


def _draw_cuoco(sheet: _Sheet, d: CuocoDecomposition) -> None:
    t = d.triangle
    m = d.metrics
    scale = max(1.0, m.a * m.a, m.b * m.b, m.c * m.c)
    side_sq = {"a": m.a * m.a, "b": m.b * m.b, "c": m.c * m.c}
    for sq in d.squares:
        sheet.add_square(sq.vertices, sheet.fill[sq.side])
    by_pair = sheet.spec.kind in ("cuoco_pairs", "cuoco_obtuse")
    for panel in d.panels:
        area = shoelace(panel.quad)
        if sheet.spec.omit_degenerate and abs(area) <= 1e-12 * scale:
            continue
        fill = sheet.fill[panel.pair if by_pair else panel.host]
        oversized = abs(area) > side_sq[panel.host] * (1.0 + 1e-12)
        sheet.add_panel(
            panel.label,
            panel.quad,
            fill,
            negative=panel.signed_area < 0,
            dashed=sheet.spec.kind == "cuoco_obtuse" and oversized,
        )
        sheet.add_label(_centroid(panel.quad), panel.label)
    sheet.add_triangle((t.A, t.B, t.C))
    for side, (first, second, opposite) in SIDE_FRAMES.items():
        foot, _ = foot_of_altitude(t, opposite)
        n = perp(t.vertex(first) - t.vertex(second))
        # The far end lies on the outer edge of the square; the altitude
        # line through the foot is parallel to n, so this stays straight.
        sheet.add_line("altitude", t.vertex(opposite), foot + n)
    _vertex_labels(sheet, d.triangle)


def _draw_incircle(sheet: _Sheet, data: IncircleData) -> None:
    t = data.triangle
    sheet.add_triangle((t.A, t.B, t.C))
    sheet.add_circle("incircle", data.center, data.radius, filled=False)
    sheet.add_circle("center", data.center, 0.012 * sheet.diag, filled=True)
    for side in ("a", "b", "c"):
        sheet.add_circle("tangent-point", data.tangent_points[side], 0.012 * sheet.diag, filled=True)
    _vertex_labels(sheet, t)
    sheet.add_label(_away_from(data.center, t.A, 0.05 * sheet.diag), "I")
    from .circles import _NEXT_SIDE

    for name in VERTICES:
        v = t.vertex(name)
        tp = data.tangent_points[_NEXT_SIDE[name]]
        mid = Point((v.x + tp.x) / 2.0, (v.y + tp.y) / 2.0)
        sheet.add_label(
            _away_from(mid, data.center, 0.06 * sheet.diag),
            f"{data.tangent_lengths[name]:.3f}",
        )


def _draw_circumcircle(sheet: _Sheet, data: CircumcircleData) -> None:
    t = data.triangle
    sheet.add_triangle((t.A, t.B, t.C))
    sheet.add_circle("circumcircle", data.center, data.radius, filled=False)
    sheet.add_circle("center", data.center, 0.012 * sheet.diag, filled=True)
    for name in VERTICES:
        sheet.add_line("radius", data.center, t.vertex(name))
    _vertex_labels(sheet, t)
    sheet.add_label(_away_from(data.center, _centroid((t.A, t.B, t.C)), 0.05 * sheet.diag), "O")


def _core_points(kind: str, data) -> list[Point]:
    if kind == "euclid_defect":
        foot, _ = foot_of_altitude(data, "A")
        n = perp(data.B - data.C)
        return [data.A, data.B, data.C, foot, foot + n, data.B + n]
    if kind in ("cuoco", "cuoco_pairs", "cuoco_obtuse"):
        pts: list[Point] = []
        for sq in data.squares:
            pts.extend(sq.vertices)
        for panel in data.panels:
            pts.extend(panel.quad)
        return pts
    t = data.triangle
    c, r = data.center, data.radius
    return [t.A, t.B, t.C, Point(c.x - r, c.y - r), Point(c.x + r, c.y + r)]


def render(data, spec: FigureSpec) -> str:
    """Draw `data` according to `spec` and return the SVG document text."""
    expected = _EXPECTED_DATA[spec.kind]
    if not isinstance(data, expected):
        raise KindMismatch(
            f"kind {spec.kind!r} draws {expected.__name__}, got {type(data).__name__}"
        )
    sheet = _Sheet(spec, _bbox_diag(_core_points(spec.kind, data)))
    if spec.kind == "euclid_defect":
        _draw_euclid_defect(sheet, data)
    elif spec.kind in ("cuoco", "cuoco_pairs", "cuoco_obtuse"):
        _draw_cuoco(sheet, data)
    elif spec.kind == "incircle":
        _draw_incircle(sheet, data)
    else:
        _draw_circumcircle(sheet, data)
    return sheet.document()
