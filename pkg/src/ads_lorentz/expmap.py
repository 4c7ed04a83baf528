"""Exponential map from the origin, its inverse, and target classification."""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .errors import DomainError
from .extremals import normal_extremal
from .geometry import Point, gd

#: Absolute tolerance for boundary membership in :func:`classify`.
EPS_BD = 1e-10
_CLAMP = 1e-12


class ExpCoords(NamedTuple):
    psi0: float
    t: float


class Region(enum.Enum):
    Outside = "Outside"
    LowerBoundary = "LowerBoundary"
    Interior = "Interior"
    UpperBoundary = "UpperBoundary"
    Apex = "Apex"
    Beyond = "Beyond"


class Side(enum.Enum):
    Left = "Left"
    Right = "Right"
    Center = "Center"


class ReachabilityClass(NamedTuple):
    tag: Region
    side: Side


def exp_map(c: ExpCoords) -> Point:
    if not 0.0 < c.t < math.pi:
        raise DomainError(f"exp_map needs t in (0, pi), got {c.t}")
    s = normal_extremal(c.psi0, c.t)
    return Point(s.theta, s.phi)


def classify(p: Point) -> ReachabilityClass:
    theta, phi = p
    lower = gd(abs(theta))
    upper = math.pi - lower
    on_axis = abs(theta) <= EPS_BD
    if theta > EPS_BD:
        side = Side.Right
    elif theta < -EPS_BD:
        side = Side.Left
    else:
        side = Side.Center

    if abs(phi - lower) <= EPS_BD:
        return ReachabilityClass(Region.LowerBoundary, side)
    if abs(phi - upper) <= EPS_BD:
        return ReachabilityClass(Region.Apex if on_axis else Region.UpperBoundary, side)
    if phi < lower:
        return ReachabilityClass(Region.Outside, side)
    if phi > upper:
        return ReachabilityClass(Region.Beyond, side)
    return ReachabilityClass(Region.Interior, side)


def _sin2_t(theta: float, phi: float) -> float:
    # sin^2 t0 = (tan^2 phi - sinh^2 theta) / (1 + tan^2 phi), multiplied through by cos^2 phi
    sh = math.sinh(theta)
    sp, cp = math.sin(phi), math.cos(phi)
    s2 = (sp - sh * cp) * (sp + sh * cp)
    if s2 < 0.0:
        if s2 < -_CLAMP:
            raise DomainError(f"point ({theta}, {phi}) is not in the exponential image")
        s2 = 0.0
    return s2


def log_map(p: Point) -> ExpCoords:
    """Inverse of :func:`exp_map` on the open diamond.

    ``sin t0 = sqrt(sin^2 phi - sinh^2 theta cos^2 phi)`` and
    ``cos t0 = cos phi cosh theta``, so ``atan2`` selects the branch
    ``t0 < pi/2``, ``= pi/2`` or ``> pi/2`` from the sign of ``cos phi``.
    """
    if classify(p).tag is not Region.Interior:
        raise DomainError(f"log_map needs an interior point, got {p} ({classify(p).tag.value})")
    theta, phi = p
    sin_t = math.sqrt(_sin2_t(theta, phi))
    t0 = math.atan2(sin_t, math.cos(phi) * math.cosh(theta))
    psi0 = math.asinh(math.sinh(theta) / sin_t)
    return ExpCoords(psi0, t0)
