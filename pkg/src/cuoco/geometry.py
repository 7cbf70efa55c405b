"""Planar primitives: points, triangles, and the measurements built on them.

Coordinates keep the numeric type they arrive with. Integer input stays
integer all the way through the dot-product identities, so those can be
checked exactly; nothing in this module coerces to float except the
square roots and arccosines that genuinely need it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

VERTICES = ("A", "B", "C")

# Vertex -> endpoints of the opposite side, in cyclic order. Foot
# parameters along a side are measured from the first endpoint.
OPPOSITE_SIDE = {"A": ("B", "C"), "B": ("C", "A"), "C": ("A", "B")}


class GeometryError(ValueError):
    """Invalid geometric input."""


class NonFiniteCoordinate(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class NonPositiveSide(GeometryError):
    pass


class TriangleInequalityViolated(GeometryError):
    pass


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinate(
                f"coordinates must be finite, got ({self.x!r}, {self.y!r})"
            )

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k) -> "Point":
        return Point(k * self.x, k * self.y)


def dot(u: Point, v: Point):
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point):
    return u.x * v.y - u.y * v.x


def perp(u: Point) -> Point:
    """u rotated a quarter turn counterclockwise."""
    return Point(-u.y, u.x)


def norm(u: Point) -> float:
    return math.sqrt(dot(u, u))


def distance(p: Point, q: Point) -> float:
    return norm(p - q)


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear vertices, stored counterclockwise.

    Clockwise input is re-labeled (B and C swapped) rather than rejected,
    so side names keep their meaning: a = |BC|, b = |CA|, c = |AB|, with
    alpha, beta, gamma the angles at A, B, C.
    """

    A: Point
    B: Point
    C: Point

    def __post_init__(self) -> None:
        doubled = cross(self.B - self.A, self.C - self.A)
        if doubled == 0:
            raise CollinearPoints(f"vertices are collinear: {self.A}, {self.B}, {self.C}")
        if doubled < 0:
            b, c = self.B, self.C
            object.__setattr__(self, "B", c)
            object.__setattr__(self, "C", b)

    @property
    def twice_area(self):
        """Twice the signed area; positive after normalization."""
        return cross(self.B - self.A, self.C - self.A)

    def vertex(self, name: str) -> Point:
        _check_vertex(name)
        return getattr(self, name)


def _check_vertex(name: str) -> None:
    if name not in VERTICES:
        raise GeometryError(f"unknown vertex {name!r}, expected one of {VERTICES}")


def _cos_opposite(p: float, q: float, r: float) -> float:
    """Cosine of the angle between sides of length p and q, opposite r."""
    return (p * p + q * q - r * r) / (2.0 * p * q)


@dataclass(frozen=True)
class TriangleMetrics:
    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    s: float
    area: float


def metrics(t: Triangle) -> TriangleMetrics:
    """Side lengths, angles (radians, via arccos of side cosines), semiperimeter, area."""
    a = distance(t.B, t.C)
    b = distance(t.C, t.A)
    c = distance(t.A, t.B)
    alpha = math.acos(_clamp(_cos_opposite(b, c, a)))
    beta = math.acos(_clamp(_cos_opposite(a, c, b)))
    gamma = math.acos(_clamp(_cos_opposite(a, b, c)))
    return TriangleMetrics(
        a=a, b=b, c=c,
        alpha=alpha, beta=beta, gamma=gamma,
        s=(a + b + c) / 2.0,
        area=t.twice_area / 2.0,
    )


def _clamp(value: float) -> float:
    return -1.0 if value < -1.0 else (1.0 if value > 1.0 else value)


@dataclass(frozen=True)
class Classification:
    kind: str  # "acute" | "right" | "obtuse"
    vertex: str | None = None  # set for right and obtuse

    @property
    def is_acute(self) -> bool:
        return self.kind == "acute"


def classify(m: TriangleMetrics, eps: float = 1e-12) -> Classification:
    """Acute/right/obtuse by the smallest side cosine.

    The band is on the cosine, not the angle: |cos| <= eps reads as right.
    """
    if eps < 0:
        raise GeometryError("eps must be nonnegative")
    cosines = (
        ("A", _cos_opposite(m.b, m.c, m.a)),
        ("B", _cos_opposite(m.a, m.c, m.b)),
        ("C", _cos_opposite(m.a, m.b, m.c)),
    )
    vertex, smallest = min(cosines, key=lambda item: item[1])
    if smallest < -eps:
        return Classification("obtuse", vertex)
    if smallest <= eps:
        return Classification("right", vertex)
    return Classification("acute")


def triangle_from_sides(a: float, b: float, c: float) -> Triangle:
    """Canonical placement for side lengths (a, b, c).

    B at the origin, C at (a, 0), A in the upper half-plane, so that
    |BC| = a, |CA| = b, |AB| = c. The result is already counterclockwise.
    """
    for value in (a, b, c):
        if not (isinstance(value, (int, float)) and math.isfinite(value)) or value <= 0:
            raise NonPositiveSide(f"side lengths must be positive and finite, got {value!r}")
    if a + b <= c or a + c <= b or b + c <= a:
        raise TriangleInequalityViolated(f"sides ({a}, {b}, {c}) violate the strict triangle inequality")
    x = (a * a + c * c - b * b) / (2.0 * a)
    y_sq = c * c - x * x
    if y_sq <= 0.0:
        # Valid by the strict inequality but flat at float precision.
        raise TriangleInequalityViolated(f"sides ({a}, {b}, {c}) are numerically degenerate")
    return Triangle(A=Point(x, math.sqrt(y_sq)), B=Point(0.0, 0.0), C=Point(a, 0.0))


def foot_of_altitude(t: Triangle, from_vertex: str) -> tuple[Point, float]:
    """Foot of the altitude from a vertex onto the line of the opposite side.

    Returns (foot, tparam) where tparam is the affine coordinate along the
    opposite side, 0 at its first endpoint and 1 at its second (cyclic
    order, see OPPOSITE_SIDE). tparam outside [0, 1] means the foot lies
    beyond the segment, which happens exactly at an obtuse base angle.
    """
    _check_vertex(from_vertex)
    v = t.vertex(from_vertex)
    first, second = OPPOSITE_SIDE[from_vertex]
    p = t.vertex(first)
    q = t.vertex(second)
    e = q - p
    tparam = dot(v - p, e) / dot(e, e)
    foot = Point(p.x + tparam * e.x, p.y + tparam * e.y)
    return foot, tparam


def signed_projection(t: Triangle, at: str, of: str, onto: str) -> float:
    """Signed length of the projection of side (at -> of) onto side (at -> onto).

    Positive toward `onto`, negative when the angle at `at` is obtuse.
    Defined as dot(u, w) / |w| with u = of - at and w = onto - at.
    """
    _check_vertex(at)
    _check_vertex(of)
    _check_vertex(onto)
    if len({at, of, onto}) != 3:
        raise GeometryError(f"vertices must be distinct, got at={at!r} of={of!r} onto={onto!r}")
    u = t.vertex(of) - t.vertex(at)
    w = t.vertex(onto) - t.vertex(at)
    return dot(u, w) / math.sqrt(dot(w, w))
