"""Incircle tangent lengths and circumcenter angle splits.

Both circles realize solutions of the three-sum system: the tangent
points cut the sides into lengths s-a, s-b, s-c, and the segments from
the circumcenter to the vertices cut the angles into pi/2 minus the
opposite angles. Everything here is measured from constructed geometry;
the closed forms live with the callers that cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    OPPOSITE_SIDE,
    Point,
    Triangle,
    TriangleMetrics,
    VERTICES,
    cross,
    dot,
    metrics,
    norm,
)

# Side id -> its endpoints in cyclic order.
SIDE_ENDPOINTS = {"a": ("B", "C"), "b": ("C", "A"), "c": ("A", "B")}

# Vertex -> the side reached by walking to the cyclically next vertex.
_NEXT_SIDE = {"A": "c", "B": "a", "C": "b"}


@dataclass(frozen=True)
class IncircleData:
    triangle: Triangle
    center: Point
    radius: float
    tangent_points: dict[str, Point]  # keyed by side id
    tangent_lengths: dict[str, float]  # keyed by vertex, measured geometrically


@dataclass(frozen=True)
class CircumcircleData:
    triangle: Triangle
    center: Point
    radius: float
    splits: dict[str, dict[str, float]]  # splits[v][w]: signed split at v toward side vw


def _project_onto_side(point: Point, p: Point, q: Point) -> tuple[Point, float]:
    e = q - p
    tparam = dot(point - p, e) / dot(e, e)
    return Point(p.x + tparam * e.x, p.y + tparam * e.y), tparam


def incircle(t: Triangle) -> IncircleData:
    """Incenter as the side-length weighted vertex average, with tangency data.

    tangent_points holds the foot of the perpendicular from the center to
    each side; tangent_lengths holds, per vertex, the measured distance to
    the tangent point on the side toward the cyclically next vertex (the
    distance along the other adjacent side is equal, which callers test).
    """
    m = metrics(t)
    weight = m.a + m.b + m.c
    center = Point(
        (m.a * t.A.x + m.b * t.B.x + m.c * t.C.x) / weight,
        (m.a * t.A.y + m.b * t.B.y + m.c * t.C.y) / weight,
    )
    radius = m.area / m.s
    tangent_points = {}
    for side, (first, second) in SIDE_ENDPOINTS.items():
        foot, _ = _project_onto_side(center, t.vertex(first), t.vertex(second))
        tangent_points[side] = foot
    tangent_lengths = {
        v: norm(tangent_points[_NEXT_SIDE[v]] - t.vertex(v)) for v in VERTICES
    }
    return IncircleData(
        triangle=t,
        center=center,
        radius=radius,
        tangent_points=tangent_points,
        tangent_lengths=tangent_lengths,
    )


def tangent_lengths(t: Triangle) -> dict[str, float]:
    """Closed-form tangent lengths: s - a at A, s - b at B, s - c at C."""
    m = metrics(t)
    return {"A": m.s - m.a, "B": m.s - m.b, "C": m.s - m.c}


def _circumcenter(t: Triangle) -> Point:
    ax, ay = t.A.x, t.A.y
    bx, by = t.B.x, t.B.y
    cx, cy = t.C.x, t.C.y
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return Point(ux, uy)


def circumcircle(t: Triangle) -> CircumcircleData:
    """Circumcenter by perpendicular-bisector intersection, radius measured to A."""
    center = _circumcenter(t)
    return CircumcircleData(
        triangle=t,
        center=center,
        radius=norm(center - t.A),
        splits=vertex_splits(t),
    )


def _signed_angle(u: Point, v: Point) -> float:
    return math.atan2(cross(u, v), dot(u, v))


def vertex_splits(t: Triangle) -> dict[str, dict[str, float]]:
    """Signed angles into which the segments to the circumcenter cut each vertex.

    splits[v][w] is the signed angle at v between side vw and the segment
    v -> circumcenter; negative exactly when the center lies on the far
    side of line vw. The two splits at a vertex sum to its angle, and
    splits[v][w] == splits[w][v] (base angles of the isosceles central
    triangle over side vw).
    """
    center = _circumcenter(t)
    splits: dict[str, dict[str, float]] = {}
    for v in VERTICES:
        nxt, prv = OPPOSITE_SIDE[v]  # cyclically next and previous vertices
        pv = t.vertex(v)
        to_center = center - pv
        splits[v] = {
            nxt: _signed_angle(t.vertex(nxt) - pv, to_center),
            prv: _signed_angle(to_center, t.vertex(prv) - pv),
        }
    return splits


def closed_form_splits(m: TriangleMetrics) -> dict[str, dict[str, float]]:
    """The same structure as vertex_splits, from pi/2 minus the third angle."""
    angle = {"A": m.alpha, "B": m.beta, "C": m.gamma}
    splits: dict[str, dict[str, float]] = {}
    for v in VERTICES:
        splits[v] = {}
        for w in VERTICES:
            if w == v:
                continue
            third = next(u for u in VERTICES if u not in (v, w))
            splits[v][w] = math.pi / 2.0 - angle[third]
    return splits
