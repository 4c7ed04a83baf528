"""Pontryagin extremals of the time-maximisation problem.

Normal extremals are parametrised by arclength (``u1**2 - u2**2 = 1``) and
written through the vertical coordinate ``psi``: ``h1 = -cosh psi``,
``h2 = sinh psi``, controls ``(u1, u2) = (cosh psi, sinh psi)``. Abnormal
extremals are the two lightlike curves through a point, parametrised with
``u1 = 1``.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple, Tuple

from .geometry import EPS_CONE, Point, gd


class ExtremalState(NamedTuple):
    theta: float
    phi: float
    psi: float

    @property
    def h1(self) -> float:
        return -math.cosh(self.psi)

    @property
    def h2(self) -> float:
        return math.sinh(self.psi)

    @property
    def point(self) -> Point:
        return Point(self.theta, self.phi)


class AdjointCovector(NamedTuple):
    """``lambda = xi1 dtheta + xi2 dphi``."""

    xi1: float
    xi2: float


class ExtremalClass(enum.Enum):
    Normal = "Normal"
    AbnormalPlus = "AbnormalPlus"
    AbnormalMinus = "AbnormalMinus"


class MaximalityCase(enum.Enum):
    NoMax = "NoMax"
    AbnormalPlus = "AbnormalPlus"
    AbnormalMinus = "AbnormalMinus"
    NormalCone = "NormalCone"


def hamiltonian_rhs(s: ExtremalState) -> Tuple[float, float, float]:
    """Vector field of the normal Hamiltonian system in ``(theta, phi, psi)``."""
    ch_psi = math.cosh(s.psi)
    return math.sinh(s.psi), ch_psi / math.cosh(s.theta), -ch_psi * math.tanh(s.theta)


def first_integral(s: ExtremalState) -> float:
    return math.cosh(s.psi) * math.cosh(s.theta)


def adjoint_covector(s: ExtremalState) -> AdjointCovector:
    return AdjointCovector(math.sinh(s.psi), -math.cosh(s.psi) * math.cosh(s.theta))


def normal_phi(psi0: float, t: float) -> float:
    """``phi`` component of the normal extremal from the origin.

    Uses ``phi(t) = t + atan((c0 - 1) sin t cos t / (cos^2 t + c0 sin^2 t))``
    with ``c0 = cosh psi0``. On ``[0, pi/2)`` this is ``atan(c0 tan t)``; the
    correction term is pi-periodic, so the expression is the smooth
    continuation with ``phi(n pi/2) = n pi/2`` and needs no seam handling.
    Valid for negative ``t`` as well (the flow run backwards).
    """
    c0m1 = 2.0 * math.sinh(0.5 * psi0) ** 2  # cosh(psi0) - 1 without cancellation
    s, c = math.sin(t), math.cos(t)
    return t + math.atan2(c0m1 * s * c, c * c + (1.0 + c0m1) * s * s)


def normal_extremal(psi0: float, t: float) -> ExtremalState:
    """State at time ``t`` of the unit-speed normal extremal from the origin."""
    s0 = math.sinh(psi0)
    sin_t = math.sin(t)
    theta = math.asinh(s0 * sin_t)
    psi = math.asinh(s0 * math.cos(t) / math.sqrt(1.0 + (s0 * sin_t) ** 2))
    return ExtremalState(theta, normal_phi(psi0, t), psi)


def normal_control(psi: float) -> Tuple[float, float]:
    return math.cosh(psi), math.sinh(psi)


def abnormal_extremal(cls: ExtremalClass, q0: Point, t: float) -> Point:
    """Lightlike curve from ``q0`` with ``u1 = 1``, ``u2 = +1`` (Plus) or ``-1`` (Minus)."""
    if cls is ExtremalClass.AbnormalPlus:
        return Point(q0.theta + t, q0.phi + gd(q0.theta + t) - gd(q0.theta))
    if cls is ExtremalClass.AbnormalMinus:
        return Point(q0.theta - t, q0.phi - gd(q0.theta - t) + gd(q0.theta))
    raise ValueError(f"not an abnormal class: {cls}")


def abnormal_control(cls: ExtremalClass) -> Tuple[float, float]:
    if cls is ExtremalClass.AbnormalPlus:
        return 1.0, 1.0
    if cls is ExtremalClass.AbnormalMinus:
        return 1.0, -1.0
    raise ValueError(f"not an abnormal class: {cls}")


def maximality_case(h1: float, h2: float, nu: int) -> MaximalityCase:
    """Where ``max over the cone of h1*u1 + h2*u2 - nu*sqrt(u1^2 - u2^2)`` is attained.

    The Hamiltonian is positively homogeneous in ``u``, so a maximum exists
    only when its supremum is zero and reached at some ``u1 > 0``. For
    ``nu = 0`` this forces ``h1 = -|h2| < 0``; for ``nu = -1`` it forces
    ``h1 = -sqrt(1 + h2^2)``.
    """
    scale = 1.0 + abs(h1) + abs(h2)
    if nu == 0:
        if h1 >= 0 or h1 == 0 and h2 == 0:
            return MaximalityCase.NoMax
        if abs(h1 - h2) <= EPS_CONE * scale:
            return MaximalityCase.AbnormalMinus
        if abs(h1 + h2) <= EPS_CONE * scale:
            return MaximalityCase.AbnormalPlus
        return MaximalityCase.NoMax
    if nu == -1:
        if h1 < 0 and abs(h1 * h1 - h2 * h2 - 1.0) <= EPS_CONE * scale * scale:
            return MaximalityCase.NormalCone
        return MaximalityCase.NoMax
    raise ValueError(f"nu must be 0 or -1, got {nu}")
