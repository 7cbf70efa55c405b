"""The linear system x + y = L, x + z = M, y + z = N and its triangle readings.

The closed-form solution is x = (L+M-N)/2, y = (L+N-M)/2, z = (M+N-L)/2;
all three components are positive exactly when each of L, M, N is smaller
than the sum of the other two. Three choices of (L, M, N) make the same
system speak about one triangle three ways:

    squared sides  -> the components are the panel pair areas (R, T, S)
    sides          -> the incircle tangent lengths (at C, at B, at A)
    angles         -> the circumcenter splits (pi/2 - gamma, -beta, -alpha)

so "all positive" reads as: every pair area positive (acute), the strict
triangle inequality (always true), every split positive (acute again).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circles import incircle, vertex_splits
from .decomposition import build
from .geometry import Classification, GeometryError, Triangle, classify, metrics


@dataclass(frozen=True)
class ThreeSum:
    """Right-hand sides of x + y = L, x + z = M, y + z = N."""

    L: float
    M: float
    N: float

    def __post_init__(self) -> None:
        for value in (self.L, self.M, self.N):
            if not math.isfinite(value):
                raise GeometryError(f"system inputs must be finite, got {value!r}")


@dataclass(frozen=True)
class Solution:
    x: float
    y: float
    z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


def solve(system: ThreeSum) -> Solution:
    L, M, N = system.L, system.M, system.N
    return Solution(x=(L + M - N) / 2.0, y=(L + N - M) / 2.0, z=(M + N - L) / 2.0)


def all_positive(system: ThreeSum) -> bool:
    """True when every component of the solution is strictly positive."""
    L, M, N = system.L, system.M, system.N
    return L < M + N and M < L + N and N < L + M


def residuals(system: ThreeSum, sol: Solution) -> tuple[float, float, float]:
    return (
        sol.x + sol.y - system.L,
        sol.x + sol.z - system.M,
        sol.y + sol.z - system.N,
    )


@dataclass(frozen=True)
class InterpretationReport:
    """Cross-check of the algebraic solution against measured geometry.

    `geometric` and `closed_form` are two independent routes to the values
    the solution components are supposed to equal, keyed by component.
    `max_residual` is the worst normalized deviation of the solution from
    either route. `acute_iff_positive` records whether positivity agreed
    with the acute classification; None when the triangle sits inside the
    right-angle band (eps on the cosines) or when the question does not
    apply (side lengths are positive for every triangle).
    """

    kind: str
    system: ThreeSum
    solution: Solution
    mapping: dict[str, str]
    geometric: dict[str, float]
    closed_form: dict[str, float]
    max_residual: float
    all_positive: bool
    classification: Classification
    acute_iff_positive: bool | None
    tol: float
    passed: bool


_COMPONENTS = ("x", "y", "z")


def _component_residual(sol: Solution, route: dict[str, float], scale: float) -> float:
    return max(abs(getattr(sol, name) - route[name]) for name in _COMPONENTS) / scale


def _positivity_flag(system: ThreeSum, cls: Classification, cosines_near_right: bool) -> bool | None:
    if cosines_near_right:
        return None
    return all_positive(system) == cls.is_acute


def interpret_squares(t: Triangle, tol: float = 1e-9, eps: float = 1e-9) -> InterpretationReport:
    """(L, M, N) = squared sides; the solution must be the pair areas (R, T, S)."""
    m = metrics(t)
    d = build(t)
    system = ThreeSum(m.a * m.a, m.b * m.b, m.c * m.c)
    sol = solve(system)
    geometric = {"x": d.pair_areas.R, "y": d.pair_areas.T, "z": d.pair_areas.S}
    from .decomposition import panel_area_trig

    closed_form = {
        "x": panel_area_trig("R", m),
        "y": panel_area_trig("T", m),
        "z": panel_area_trig("S", m),
    }
    scale = max(1.0, system.L, system.M, system.N)
    max_residual = max(
        _component_residual(sol, geometric, scale),
        _component_residual(sol, closed_form, scale),
    )
    cls = classify(m, eps=eps)
    near_right = _near_right(m, eps)
    flag = _positivity_flag(system, cls, near_right)
    return InterpretationReport(
        kind="squares",
        system=system,
        solution=sol,
        mapping={"x": "R", "y": "T", "z": "S"},
        geometric=geometric,
        closed_form=closed_form,
        max_residual=max_residual,
        all_positive=all_positive(system),
        classification=cls,
        acute_iff_positive=flag,
        tol=tol,
        passed=max_residual <= tol and flag is not False,
    )


def interpret_sides(t: Triangle, tol: float = 1e-9) -> InterpretationReport:
    """(L, M, N) = sides; the solution must be the incircle tangent lengths.

    x = s - c (tangent length at C), y = s - b (at B), z = s - a (at A).
    Positivity is the strict triangle inequality, so it always holds.
    """
    m = metrics(t)
    system = ThreeSum(m.a, m.b, m.c)
    sol = solve(system)
    data = incircle(t)
    geometric = {
        "x": data.tangent_lengths["C"],
        "y": data.tangent_lengths["B"],
        "z": data.tangent_lengths["A"],
    }
    closed_form = {"x": m.s - m.c, "y": m.s - m.b, "z": m.s - m.a}
    scale = max(1.0, m.a, m.b, m.c)
    max_residual = max(
        _component_residual(sol, geometric, scale),
        _component_residual(sol, closed_form, scale),
    )
    positive = all_positive(system)
    return InterpretationReport(
        kind="sides",
        system=system,
        solution=sol,
        mapping={"x": "tangent length at C", "y": "tangent length at B", "z": "tangent length at A"},
        geometric=geometric,
        closed_form=closed_form,
        max_residual=max_residual,
        all_positive=positive,
        classification=classify(m),
        acute_iff_positive=None,
        tol=tol,
        passed=max_residual <= tol and positive,
    )


def interpret_angles(t: Triangle, tol: float = 1e-9, eps: float = 1e-9) -> InterpretationReport:
    """(L, M, N) = angles; the solution must be the circumcenter splits.

    x = pi/2 - gamma appears at both ends of side c (the isosceles central
    triangle over AB), y = pi/2 - beta over side b, z = pi/2 - alpha over
    side a. Residuals are absolute: angles are already order one.
    """
    m = metrics(t)
    system = ThreeSum(m.alpha, m.beta, m.gamma)
    sol = solve(system)
    splits = vertex_splits(t)
    # Each component is realized twice; hold it against both measurements.
    measured_pairs = {
        "x": (splits["A"]["B"], splits["B"]["A"]),
        "y": (splits["A"]["C"], splits["C"]["A"]),
        "z": (splits["B"]["C"], splits["C"]["B"]),
    }
    geometric = {name: pair[0] for name, pair in measured_pairs.items()}
    closed_form = {
        "x": math.pi / 2.0 - m.gamma,
        "y": math.pi / 2.0 - m.beta,
        "z": math.pi / 2.0 - m.alpha,
    }
    max_residual = max(
        abs(getattr(sol, name) - value)
        for name, pair in measured_pairs.items()
        for value in (*pair, closed_form[name])
    )
    cls = classify(m, eps=eps)
    near_right = _near_right(m, eps)
    flag = _positivity_flag(system, cls, near_right)
    return InterpretationReport(
        kind="angles",
        system=system,
        solution=sol,
        mapping={"x": "split over side c", "y": "split over side b", "z": "split over side a"},
        geometric=geometric,
        closed_form=closed_form,
        max_residual=max_residual,
        all_positive=all_positive(system),
        classification=cls,
        acute_iff_positive=flag,
        tol=tol,
        passed=max_residual <= tol and flag is not False,
    )


def _near_right(m, eps: float) -> bool:
    from .geometry import _cos_opposite

    return (
        abs(_cos_opposite(m.b, m.c, m.a)) <= eps
        or abs(_cos_opposite(m.a, m.c, m.b)) <= eps
        or abs(_cos_opposite(m.a, m.b, m.c)) <= eps
    )
