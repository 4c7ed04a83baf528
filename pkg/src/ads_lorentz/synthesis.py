"""Optimal synthesis from the origin and the Lorentzian distance function."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Tuple

import numpy as np

from .errors import DomainError, NoOptimalTrajectory
from .expmap import EPS_BD, ReachabilityClass, Region, Side, classify, log_map
from .extremals import ExtremalClass, normal_extremal
from .geometry import Control, Point, gd

ORIGIN = Point(0.0, 0.0)


class DistanceResult(NamedTuple):
    """Distance from the base point.

    ``time`` is the arrival time of an optimal trajectory when one exists
    (equal to ``value``), otherwise ``None``.
    """

    region: ReachabilityClass
    value: float
    time: Optional[float]

    @property
    def attained(self) -> bool:
        return self.time is not None


@dataclass(frozen=True)
class Trajectory:
    """Sampled admissible curve with its control.

    ``kind`` is ``None`` for curves that are not extremals (the bypass
    family). ``continuum`` marks a trajectory picked out of a continuum of
    optimal ones.
    """

    t: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    u1: np.ndarray
    u2: np.ndarray
    kind: Optional[ExtremalClass]
    continuum: bool = False

    def __len__(self) -> int:
        return len(self.t)

    @property
    def endpoint(self) -> Point:
        return Point(self.theta[-1], self.phi[-1])

    def samples(self) -> Iterator[Tuple[float, Point, Control]]:
        for row in zip(self.t, self.theta, self.phi, self.u1, self.u2):
            yield float(row[0]), Point(row[1], row[2]), Control(row[3], row[4])


def _require_interior(p: Point) -> None:
    region = classify(p)
    if region.tag is not Region.Interior:
        raise DomainError(f"{p} is not in the interior region (got {region.tag.value})")


def psi_for_target(p: Point) -> float:
    """Initial vertical coordinate of the optimal normal extremal to ``p``."""
    _require_interior(p)
    return log_map(p).psi0


def time_for_target(p: Point) -> float:
    """Arrival time at ``p``, which is also its distance from the origin."""
    _require_interior(p)
    return log_map(p).t


def lorentz_distance_from_origin(p: Point) -> DistanceResult:
    region = classify(p)
    tag = region.tag
    if tag is Region.Interior:
        t = log_map(p).t
        return DistanceResult(region, t, t)
    if tag is Region.LowerBoundary:
        return DistanceResult(region, 0.0, 0.0)
    if tag is Region.Apex:
        return DistanceResult(region, math.pi, math.pi)
    if tag is Region.UpperBoundary:
        return DistanceResult(region, math.pi, None)
    if tag is Region.Beyond:
        return DistanceResult(region, math.inf, None)
    return DistanceResult(region, 0.0, None)


def synthesis_trajectory(p: Point, n_samples: int) -> Trajectory:
    """Optimal trajectory from the origin to ``p``, sampled uniformly in time.

    Interior targets get the normal extremal, lower-boundary targets the
    lightlike abnormal curve, and the apex ``(0, pi)`` the vertical geodesic
    (one member of a continuum, flagged by ``continuum=True``).
    """
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    region = classify(p)
    tag = region.tag

    if tag is Region.Interior:
        psi0, t_end = log_map(p)
        t = np.linspace(0.0, t_end, n_samples)
        states = np.array([normal_extremal(psi0, ti) for ti in t])
        theta, phi, psi = states.T
        return Trajectory(t, theta, phi, np.cosh(psi), np.sinh(psi), ExtremalClass.Normal)

    if tag is Region.LowerBoundary:
        if region.side is Side.Center:
            raise DomainError("the origin is the base point; there is no trajectory to synthesise")
        sign = 1.0 if region.side is Side.Right else -1.0
        t = np.linspace(0.0, abs(p.theta), n_samples)
        kind = ExtremalClass.AbnormalPlus if sign > 0 else ExtremalClass.AbnormalMinus
        ones = np.ones_like(t)
        return Trajectory(t, sign * t, np.arctan(np.sinh(t)), ones, sign * ones, kind)

    if tag is Region.Apex:
        t = np.linspace(0.0, math.pi, n_samples)
        zeros = np.zeros_like(t)
        return Trajectory(t, zeros, t.copy(), np.ones_like(t), zeros, ExtremalClass.Normal,
                          continuum=True)

    raise NoOptimalTrajectory(region, lorentz_distance_from_origin(p).value)


def _require_beyond(p: Point) -> None:
    if classify(p).tag is not Region.Beyond:
        raise DomainError(f"{p} is not above the upper boundary")


def bypass_curve_length(p: Point, alpha: float) -> float:
    """Length of the three-piece causal curve from the origin to ``p``.

    The curve runs along the lower boundary to ``theta = +-alpha`` (side of
    ``p``), straight up with ``u = (1, 0)``, then along the past light ray of
    ``p``. Only the vertical piece has nonzero length, which is
    ``(phi1 + gd|theta1| - 2 gd(alpha)) cosh(alpha)`` and grows without bound
    in ``alpha``.
    """
    _require_beyond(p)
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return (p.phi + gd(abs(p.theta)) - 2.0 * gd(alpha)) * math.cosh(alpha)


def bypass_curve(p: Point, alpha: float, n_per_segment: int = 1000) -> Trajectory:
    """Sampled three-piece curve whose length :func:`bypass_curve_length` gives.

    The curve is admissible only when ``alpha >= |theta1|``; otherwise the
    final lightlike piece would have to run backwards in time.
    """
    length = bypass_curve_length(p, alpha)
    a = abs(p.theta)
    if alpha < a:
        raise DomainError(f"bypass curve needs alpha >= |theta1| = {a}, got {alpha}")
    sign = -1.0 if p.theta < 0 else 1.0
    ch = math.cosh(alpha)
    t1, t2 = alpha, alpha + length
    t3 = t2 + (alpha - a)

    s1 = np.linspace(0.0, t1, n_per_segment, endpoint=False)
    s2 = np.linspace(t1, t2, n_per_segment, endpoint=False)
    s3 = np.linspace(t2, t3, n_per_segment + 1) if t3 > t2 else np.array([t2])
    th3 = alpha - (s3 - t2)
    segments = [
        # (time, |theta|, phi, u2 on the right-hand side)
        (s1, s1, np.arctan(np.sinh(s1)), 1.0),
        (s2, np.full_like(s2, alpha), gd(alpha) + (s2 - t1) / ch, 0.0),
        (s3, th3, p.phi + gd(a) - np.arctan(np.sinh(th3)), -1.0),
    ]
    t = np.concatenate([seg[0] for seg in segments])
    theta = sign * np.concatenate([seg[1] for seg in segments])
    phi = np.concatenate([seg[2] for seg in segments])
    u2 = sign * np.concatenate([np.full_like(seg[0], seg[3]) for seg in segments])
    return Trajectory(t, theta, phi, np.ones_like(t), u2, None)


def upper_boundary_min_index(theta_tilde: float) -> int:
    """Smallest ``n`` for which ``phi_n >= pi/2`` along the upper-boundary sequence."""
    return math.ceil(1.0 / (0.5 * math.pi - gd(abs(theta_tilde))))


def upper_boundary_distance_sequence(theta_tilde: float, n: int) -> float:
    """Distance from the origin to ``(theta_tilde, pi - gd|theta_tilde| - 1/n)``.

    The points approach the upper boundary from inside, and the distances
    increase to ``pi``.
    """
    if theta_tilde == 0:
        raise DomainError("theta_tilde must be nonzero")
    n0 = upper_boundary_min_index(theta_tilde)
    if n < n0:
        raise DomainError(f"n must be >= {n0} for theta_tilde={theta_tilde}, got {n}")
    q_n = Point(theta_tilde, math.pi - gd(abs(theta_tilde)) - 1.0 / n)
    return time_for_target(q_n)


def reachable_from(q0: Point, p: Point) -> bool:
    """Whether ``p`` lies on or above both light rays leaving ``q0``.

    The rays are the abnormal curves ``phi = phi0 +- (gd(theta) - gd(theta0))``,
    so the test is ``phi >= phi0 + |gd(theta) - gd(theta0)|``.
    """
    return p.phi >= q0.phi + abs(gd(p.theta) - gd(q0.theta)) - EPS_BD


def reachable_from_translated(q0: Point, p: Point) -> bool:
    """The origin's cone shifted to ``q0``: ``phi >= phi0 + gd|theta - theta0|``.

    Agrees with :func:`reachable_from` when ``theta0 = 0`` only. Kept for
    comparison; the rays it uses are not solutions of the control system
    when ``theta0 != 0``.
    """
    return p.phi >= q0.phi + gd(abs(p.theta - q0.theta)) - EPS_BD
