"""Points, tangent vectors and the Lorentzian metric of the anti-de Sitter plane.

Coordinates are ``(theta, phi)`` on the universal cover of the one-sheeted
hyperboloid. ``phi`` is never reduced modulo ``2*pi``. The metric is

    g = d theta^2 - cosh(theta)^2 d phi^2

with the orthonormal frame ``X1 = (1/cosh theta) d/dphi`` (timelike) and
``X2 = d/dtheta`` (spacelike). Future-directed means ``phi`` increases.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple, Tuple

#: Absolute tolerance on ``u1**2 - u2**2`` used to decide lightlike membership.
EPS_CONE = 1e-12


class _PointBase(NamedTuple):
    theta: float
    phi: float


class Point(_PointBase):
    """A point ``(theta, phi)`` of the universal cover."""

    __slots__ = ()

    def __new__(cls, theta: float, phi: float) -> "Point":
        theta, phi = float(theta), float(phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError(f"non-finite point ({theta}, {phi})")
        return super().__new__(cls, theta, phi)


class _TangentBase(NamedTuple):
    d_theta: float
    d_phi: float


class TangentVector(_TangentBase):
    """Coefficients of a tangent vector on the coordinate basis (d/dtheta, d/dphi)."""

    __slots__ = ()

    def __new__(cls, d_theta: float, d_phi: float) -> "TangentVector":
        d_theta, d_phi = float(d_theta), float(d_phi)
        if not (math.isfinite(d_theta) and math.isfinite(d_phi)):
            raise ValueError(f"non-finite tangent vector ({d_theta}, {d_phi})")
        return super().__new__(cls, d_theta, d_phi)

    def __add__(self, other):  # type: ignore[override]
        return TangentVector(self.d_theta + other.d_theta, self.d_phi + other.d_phi)

    def __neg__(self) -> "TangentVector":
        return TangentVector(-self.d_theta, -self.d_phi)

    def scale(self, c: float) -> "TangentVector":
        return TangentVector(c * self.d_theta, c * self.d_phi)


class _ControlBase(NamedTuple):
    u1: float
    u2: float


class Control(_ControlBase):
    """Admissible control: ``u1 > 0`` and ``u1**2 - u2**2 >= 0`` (up to EPS_CONE)."""

    __slots__ = ()

    def __new__(cls, u1: float, u2: float) -> "Control":
        u1, u2 = float(u1), float(u2)
        if not u1 > 0:
            raise ValueError(f"control needs u1 > 0, got {u1}")
        if u1 * u1 - u2 * u2 < -EPS_CONE:
            raise ValueError(f"control ({u1}, {u2}) is outside the causal cone")
        return super().__new__(cls, u1, u2)


class AmbientPoint(NamedTuple):
    x1: float
    x2: float
    x3: float

    def constraint_residual(self) -> float:
        """``-x1^2 - x2^2 + x3^2 + 1``; zero on the hyperboloid."""
        return -self.x1 ** 2 - self.x2 ** 2 + self.x3 ** 2 + 1.0


class CausalClass(enum.Enum):
    TimelikeFuture = "TimelikeFuture"
    LightlikeFuture = "LightlikeFuture"
    Spacelike = "Spacelike"
    TimelikePast = "TimelikePast"
    LightlikePast = "LightlikePast"
    Zero = "Zero"


D_THETA = TangentVector(1.0, 0.0)
D_PHI = TangentVector(0.0, 1.0)


def gd(x: float) -> float:
    """Gudermannian function ``arctan(sinh x)``."""
    return math.atan(math.sinh(x))


def metric_eval(p: Point, v: TangentVector, w: TangentVector) -> float:
    # product of the phi components first so the result is exactly symmetric in v, w
    return v.d_theta * w.d_theta - math.cosh(p.theta) ** 2 * (v.d_phi * w.d_phi)


def frame(p: Point) -> Tuple[TangentVector, TangentVector]:
    """Orthonormal frame ``(X1, X2)`` at ``p``; X1 timelike, X2 spacelike."""
    return TangentVector(0.0, 1.0 / math.cosh(p.theta)), TangentVector(1.0, 0.0)


def frame_components(p: Point, v: TangentVector) -> Tuple[float, float]:
    """Decompose ``v = u1*X1 + u2*X2`` and return ``(u1, u2)``."""
    return v.d_phi * math.cosh(p.theta), v.d_theta


def causal_class(v: TangentVector, p: Point) -> CausalClass:
    if v.d_theta == 0.0 and v.d_phi == 0.0:
        return CausalClass.Zero
    u1, u2 = frame_components(p, v)
    q = u1 * u1 - u2 * u2
    if q > EPS_CONE:
        return CausalClass.TimelikeFuture if u1 > 0 else CausalClass.TimelikePast
    if q >= -EPS_CONE and u1 != 0.0:
        return CausalClass.LightlikeFuture if u1 > 0 else CausalClass.LightlikePast
    return CausalClass.Spacelike


def embed(p: Point) -> AmbientPoint:
    """Map to the hyperboloid ``-x1^2 - x2^2 + x3^2 = -1``. For tests and plots only."""
    ch = math.cosh(p.theta)
    return AmbientPoint(ch * math.cos(p.phi), ch * math.sin(p.phi), math.sinh(p.theta))
