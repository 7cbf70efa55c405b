"""The cosine identity, in modern form and as a signed Euclid-style defect.

The defect formulation unifies the acute and obtuse cases: for the angle
at B, the side AC satisfies AC^2 = AB^2 + BC^2 - defect with
defect = 2 * BC * BD, BD being the signed projection of BA onto BC. BD
(and with it the defect) flips sign exactly when the angle at B passes a
right angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    GeometryError,
    NonPositiveSide,
    OPPOSITE_SIDE,
    Triangle,
    TriangleInequalityViolated,
    TriangleMetrics,
    dot,
    _check_vertex,
)


class DomainError(GeometryError):
    """Angle argument outside its open domain."""


def third_side(a: float, b: float, gamma: float) -> float:
    """Length of the side opposite gamma, given the two enclosing sides."""
    if a <= 0 or b <= 0:
        raise NonPositiveSide(f"side lengths must be positive, got ({a!r}, {b!r})")
    if not (0.0 < gamma < math.pi):
        raise DomainError(f"gamma must lie in (0, pi), got {gamma!r}")
    value = a * a + b * b - 2.0 * a * b * math.cos(gamma)
    return math.sqrt(value if value > 0.0 else 0.0)


def cos_from_sides(a: float, b: float, c: float) -> float:
    """Cosine of the angle opposite c, between the sides of length a and b."""
    for value in (a, b, c):
        if not (isinstance(value, (int, float)) and math.isfinite(value)) or value <= 0:
            raise NonPositiveSide(f"side lengths must be positive and finite, got {value!r}")
    if a + b <= c or a + c <= b or b + c <= a:
        raise TriangleInequalityViolated(f"sides ({a}, {b}, {c}) violate the strict triangle inequality")
    return (a * a + b * b - c * c) / (2.0 * a * b)


def euclid_defect(t: Triangle, at_vertex: str) -> tuple[float, float]:
    """Signed defect at a vertex and the residual of the classical identity.

    Returns (defect, residual) with defect = 2 * dot of the two side
    vectors leaving the vertex (equal to 2 * BC * BD in the classical
    reading) and residual = opp^2 - adj1^2 - adj2^2 + defect, which is
    zero in exact arithmetic. Integer coordinates give integer results.
    """
    _check_vertex(at_vertex)
    v = t.vertex(at_vertex)
    first, second = OPPOSITE_SIDE[at_vertex]
    p = t.vertex(first)
    q = t.vertex(second)
    u = p - v
    w = q - v
    defect = 2 * dot(u, w)
    opp = p - q
    residual = dot(opp, opp) - dot(u, u) - dot(w, w) + defect
    return defect, residual


@dataclass(frozen=True)
class CosineIdentityReport:
    """Residuals of a^2 - b^2 - c^2 + 2bc*cos(alpha) and its two cyclic forms."""

    residuals: tuple[float, float, float]  # at A, at B, at C
    scale: float
    tol: float
    passed: bool


def verify_cosine_identity(m: TriangleMetrics, tol: float = 1e-9) -> CosineIdentityReport:
    """Check all three cyclic cosine identities, relative to max side^2."""
    a2, b2, c2 = m.a * m.a, m.b * m.b, m.c * m.c
    residuals = (
        a2 - b2 - c2 + 2.0 * m.b * m.c * math.cos(m.alpha),
        b2 - a2 - c2 + 2.0 * m.a * m.c * math.cos(m.beta),
        c2 - a2 - b2 + 2.0 * m.a * m.b * math.cos(m.gamma),
    )
    scale = max(a2, b2, c2)
    passed = all(abs(r) <= tol * scale for r in residuals)
    return CosineIdentityReport(residuals=residuals, scale=scale, tol=tol, passed=passed)
