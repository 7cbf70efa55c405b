from __future__ import annotations

import random

import pytest
from hypothesis import assume, strategies as st

from cuoco.cli import random_triangle
from cuoco.geometry import Point, Triangle, cross

SAMPLE_SEED = 42


@pytest.fixture(scope="session")
def fuzz_triangles():
    """A healthy mix of acute, right-ish and obtuse random triangles."""
    rng = random.Random(SAMPLE_SEED)
    return [random_triangle(rng) for _ in range(1500)]


@st.composite
def float_triangles(draw, span: float = 50.0):
    coords = [
        draw(st.floats(-span, span, allow_nan=False, allow_infinity=False))
        for _ in range(6)
    ]
    a = Point(coords[0], coords[1])
    b = Point(coords[2], coords[3])
    c = Point(coords[4], coords[5])
    doubled = cross(b - a, c - a)
    # Skip thin triangles: 1e-9 relative checks are meaningless at worse
    # conditioning, and the library itself rejects exact collinearity.
    assume(abs(doubled) > 1e-3)
    sides = (
        abs(complex(b.x - c.x, b.y - c.y)),
        abs(complex(c.x - a.x, c.y - a.y)),
        abs(complex(a.x - b.x, a.y - b.y)),
    )
    assume(min(sides) > 1e-2)
    return Triangle(A=a, B=b, C=c)


@st.composite
def integer_triangles(draw, bound: int = 100):
    coords = [draw(st.integers(-bound, bound)) for _ in range(6)]
    a = Point(coords[0], coords[1])
    b = Point(coords[2], coords[3])
    c = Point(coords[4], coords[5])
    assume(cross(b - a, c - a) != 0)
    return Triangle(A=a, B=b, C=c)


def eliminate(L, M, N):
    """Reference solver for x+y=L, x+z=M, y+z=N: straight Gaussian
    elimination on the 3x3 matrix, independent of the closed form."""
    rows = [
        [1.0, 1.0, 0.0, L],
        [1.0, 0.0, 1.0, M],
        [0.0, 1.0, 1.0, N],
    ]
    n = 3
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(rows[r][col]))
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r][col] != 0.0:
                factor = rows[r][col] / rows[col][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    return tuple(rows[i][3] / rows[i][i] for i in range(n))


@st.composite
def side_triples(draw):
    a = draw(st.floats(0.5, 100.0))
    b = draw(st.floats(0.5, 100.0))
    c = draw(st.floats(0.5, 100.0))
    margin = 1e-6 * max(a, b, c)
    assume(a + b > c + margin and a + c > b + margin and b + c > a + margin)
    return a, b, c
