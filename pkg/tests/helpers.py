"""Shared strategies and numeric helpers for the test modules."""

import math

import numpy as np
from hypothesis import strategies as st

from ads_lorentz.geometry import Point

finite_theta = st.floats(-3.0, 3.0, allow_nan=False)
finite_phi = st.floats(-10.0, 10.0, allow_nan=False)
points = st.builds(Point, finite_theta, finite_phi)


def fd_bracket(fa, fb, p, h=1e-6):
    """Lie bracket of two coefficient functions by central differences."""

    def d(f, p, v):
        a = f(p[0] + h * v[0], p[1] + h * v[1])
        b = f(p[0] - h * v[0], p[1] - h * v[1])
        return ((a[0] - b[0]) / (2 * h), (a[1] - b[1]) / (2 * h))

    va, vb = fa(*p), fb(*p)
    db_a, da_b = d(fb, p, va), d(fa, p, vb)
    return db_a[0] - da_b[0], db_a[1] - da_b[1]


def close(a, b, tol):
    return all(math.isclose(x, y, rel_tol=0, abs_tol=tol) for x, y in zip(a, b))
