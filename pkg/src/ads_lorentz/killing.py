"""Killing fields of the anti-de Sitter plane and distance by isometric transport.

In coordinate components ``(d_theta, d_phi)``::

    K1 = (0, 1)
    K2 = (sin phi,  tanh theta cos phi)
    K3 = (cos phi, -tanh theta sin phi)

with ``[K1, K2] = K3``, ``[K2, K3] = -K1``, ``[K3, K1] = K2``. K1 flows are
translations in ``phi``; K2 and K3 flows are integrated numerically with RK4.
"""

from __future__ import annotations

import enum
import math
import os
import warnings
from typing import Callable, List, NamedTuple, Optional, Tuple

from ._backend import kernels
from .errors import NonFiniteState
from .geometry import Point, TangentVector, metric_eval
from .synthesis import DistanceResult, lorentz_distance_from_origin

DEFAULT_STEP = 1e-3
MAX_HALVINGS = 6
CAUCHY_TOL = 1e-9

Pair = Tuple[float, float]


class KillingField(enum.IntEnum):
    K1 = 1
    K2 = 2
    K3 = 3


class VectorField(NamedTuple):
    """A planar vector field given by its coefficients and their Jacobian.

    ``jacobian(theta, phi)`` returns ``((dA/dtheta, dA/dphi), (dB/dtheta, dB/dphi))``
    for ``coeffs(theta, phi) = (A, B)``.
    """

    coeffs: Callable[[float, float], Pair]
    jacobian: Callable[[float, float], Tuple[Pair, Pair]]


def _k1(theta, phi):
    return 0.0, 1.0


def _k1_jac(theta, phi):
    return (0.0, 0.0), (0.0, 0.0)


def _k2(theta, phi):
    return math.sin(phi), math.tanh(theta) * math.cos(phi)


def _k2_jac(theta, phi):
    sech2 = 1.0 / math.cosh(theta) ** 2
    return (0.0, math.cos(phi)), (sech2 * math.cos(phi), -math.tanh(theta) * math.sin(phi))


def _k3(theta, phi):
    return math.cos(phi), -math.tanh(theta) * math.sin(phi)


def _k3_jac(theta, phi):
    sech2 = 1.0 / math.cosh(theta) ** 2
    return (0.0, -math.sin(phi)), (-sech2 * math.sin(phi), -math.tanh(theta) * math.cos(phi))


FIELDS = {
    KillingField.K1: VectorField(_k1, _k1_jac),
    KillingField.K2: VectorField(_k2, _k2_jac),
    KillingField.K3: VectorField(_k3, _k3_jac),
}


def _field(k) -> VectorField:
    return FIELDS[k] if isinstance(k, KillingField) else k


def killing_eval(k, p: Point) -> TangentVector:
    return TangentVector(*_field(k).coeffs(p.theta, p.phi))


def lie_bracket(a, b, p: Point) -> TangentVector:
    """``[a, b]^i = a^j d_j b^i - b^j d_j a^i`` from the analytic Jacobians."""
    fa, fb = _field(a), _field(b)
    va, vb = fa.coeffs(*p), fb.coeffs(*p)
    ja, jb = fa.jacobian(*p), fb.jacobian(*p)
    return TangentVector(
        jb[0][0] * va[0] + jb[0][1] * va[1] - ja[0][0] * vb[0] - ja[0][1] * vb[1],
        jb[1][0] * va[0] + jb[1][1] * va[1] - ja[1][0] * vb[0] - ja[1][1] * vb[1],
    )


def _bracket_with_constant(f: VectorField, p: Point, v: TangentVector) -> TangentVector:
    # [X, V] = -DX.V when V has constant coefficients
    j = f.jacobian(*p)
    return TangentVector(
        -(j[0][0] * v.d_theta + j[0][1] * v.d_phi),
        -(j[1][0] * v.d_theta + j[1][1] * v.d_phi),
    )


def killing_residual(k, p: Point, v: TangentVector, w: TangentVector, h: float = 1e-5) -> float:
    """``X(g(V, W)) - g([X, V], W) - g(V, [X, W])`` at ``p`` for constant ``V``, ``W``.

    The derivative of ``g(V, W)`` along ``X`` is a central difference with
    step ``h``; the brackets are analytic. Zero (up to the difference error)
    exactly when ``X`` is a Killing field.
    """
    f = _field(k)
    x = f.coeffs(*p)

    def g_vw(s):
        return metric_eval(Point(p.theta + s * x[0], p.phi + s * x[1]), v, w)

    lhs = (g_vw(h) - g_vw(-h)) / (2.0 * h)
    rhs = metric_eval(p, _bracket_with_constant(f, p, v), w) + metric_eval(
        p, v, _bracket_with_constant(f, p, w)
    )
    return lhs - rhs


def default_step() -> float:
    return float(os.environ.get("ADS_LORENTZ_STEP", DEFAULT_STEP))


def _flow_fixed(k: KillingField, theta: float, phi: float, s: float, step: float) -> Pair:
    if k is KillingField.K1:
        return theta, phi + s
    return kernels.killing_flow(int(k), theta, phi, s, step)


def _flow_converged(k: KillingField, theta: float, phi: float, s: float) -> Pair:
    h = default_step()
    prev = _flow_fixed(k, theta, phi, s, h)
    if k is KillingField.K1:
        return prev
    for _ in range(MAX_HALVINGS):
        h *= 0.5
        cur = _flow_fixed(k, theta, phi, s, h)
        if max(abs(cur[0] - prev[0]), abs(cur[1] - prev[1])) < CAUCHY_TOL:
            return cur
        prev = cur
    warnings.warn(
        f"{k.name} flow from ({theta}, {phi}) for s={s} did not meet the "
        f"{CAUCHY_TOL:g} Cauchy tolerance after {MAX_HALVINGS} halvings",
        RuntimeWarning,
    )
    return prev


def killing_flow(k: KillingField, p: Point, s: float, step: Optional[float] = None) -> Point:
    """Move ``p`` along the flow of ``k`` for signed time ``s``.

    With ``step`` given, a single fixed-step RK4 run is made. Without it the
    step starts at ``ADS_LORENTZ_STEP`` (default ``1e-3``) and is halved
    until two successive endpoints agree to ``1e-9``.
    """
    k = KillingField(k)
    if step is None:
        theta, phi = _flow_converged(k, p.theta, p.phi, s)
    else:
        if not 0 < step <= 1e-2:
            raise ValueError(f"step must be in (0, 1e-2], got {step}")
        theta, phi = _flow_fixed(k, p.theta, p.phi, s, step)
    if not (math.isfinite(theta) and math.isfinite(phi)):
        raise NonFiniteState(f"{k.name} flow from {tuple(p)} for s={s} left the finite range")
    return Point(theta, phi)


class IsometryRoute(NamedTuple):
    legs: Tuple[Tuple[KillingField, float], ...]

    def inverse(self) -> "IsometryRoute":
        return IsometryRoute(tuple((k, -s) for k, s in reversed(self.legs)))


def route_to_origin(q0: Point) -> IsometryRoute:
    """Move down or up along K1 to ``phi = 0``, then along K3 (which is
    ``d/dtheta`` on that line) to the origin."""
    return IsometryRoute(((KillingField.K1, -q0.phi), (KillingField.K3, -q0.theta)))


def apply_route(route: IsometryRoute, p: Point, step: Optional[float] = None) -> Point:
    for k, s in route.legs:
        p = killing_flow(k, p, s, step)
    return p


def transport_distance(q0: Point, q1: Point, step: Optional[float] = None) -> DistanceResult:
    """Lorentzian distance from ``q0`` to ``q1``.

    The isometry that takes ``q0`` to the origin is applied to ``q1`` and the
    distance from the origin is evaluated there.
    """
    return lorentz_distance_from_origin(apply_route(route_to_origin(q0), q1, step))


def stream_samples(
    k, theta_range: Pair, phi_range: Pair, nx: int, ny: int
) -> List[Tuple[Point, TangentVector]]:
    """Field values on a uniform ``nx`` by ``ny`` grid, rows of constant ``phi``."""
    if nx < 2 or ny < 2:
        raise ValueError(f"grid needs nx, ny >= 2, got {nx}, {ny}")
    f = _field(k)
    out = []
    for j in range(ny):
        phi = phi_range[0] + (phi_range[1] - phi_range[0]) * j / (ny - 1)
        for i in range(nx):
            theta = theta_range[0] + (theta_range[1] - theta_range[0]) * i / (nx - 1)
            p = Point(theta, phi)
            out.append((p, TangentVector(*f.coeffs(theta, phi))))
    return out
