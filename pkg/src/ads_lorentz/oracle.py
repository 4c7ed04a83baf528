"""Independent numerical machinery used to check the closed forms.

Nothing here knows about the geometry: a fixed-step RK4 integrator, a
central difference, and the Lorentzian length functional evaluated by
trapezoid quadrature over sampled controls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np

from .errors import NonFiniteState
from .geometry import EPS_CONE

Rhs = Callable[[float, Sequence[float]], Sequence[float]]


@dataclass(frozen=True)
class OdeProblem:
    rhs: Rhs
    initial: Tuple[float, ...]
    t0: float
    t1: float
    step: float

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")
        object.__setattr__(self, "initial", tuple(float(x) for x in self.initial))

    @property
    def dimension(self) -> int:
        return len(self.initial)


def _check(t, y):
    for v in y:
        if not math.isfinite(v):
            raise NonFiniteState(f"non-finite state {tuple(y)} at t={t}")


def _eval(rhs: Rhs, t: float, y) -> Sequence[float]:
    # math.* and float ** raise OverflowError instead of returning inf
    try:
        k = rhs(t, y)
    except OverflowError as exc:
        raise NonFiniteState(f"overflow evaluating the field at t={t}, state {tuple(y)}") from exc
    _check(t, k)
    return k


def rk4_step(rhs: Rhs, t: float, y: Sequence[float], h: float) -> Tuple[float, ...]:
    k1 = _eval(rhs, t, y)
    y2 = [a + 0.5 * h * b for a, b in zip(y, k1)]
    k2 = _eval(rhs, t + 0.5 * h, y2)
    y3 = [a + 0.5 * h * b for a, b in zip(y, k2)]
    k3 = _eval(rhs, t + 0.5 * h, y3)
    y4 = [a + h * b for a, b in zip(y, k3)]
    k4 = _eval(rhs, t + h, y4)
    out = tuple(
        a + h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        for a, b1, b2, b3, b4 in zip(y, k1, k2, k3, k4)
    )
    _check(t + h, out)
    return out


def rk4_integrate(prob: OdeProblem, dense: bool = True):
    """Classical RK4 from ``t0`` to ``t1`` (either direction).

    The step is fixed; the last one is shortened to land on ``t1`` exactly.
    Returns ``(final_state, samples)`` where ``samples`` is an array of rows
    ``(t, y_0, ..., y_{d-1})`` including both endpoints, or ``None`` when
    ``dense`` is false.
    """
    t, t1 = prob.t0, prob.t1
    y = prob.initial
    direction = 1.0 if t1 >= t else -1.0
    h_full = direction * prob.step
    rows = [(t, *y)] if dense else None
    n_full = int(math.floor(abs(t1 - t) / prob.step))
    for i in range(n_full):
        y = rk4_step(prob.rhs, t, y, h_full)
        t = prob.t0 + (i + 1) * h_full
        if dense:
            rows.append((t, *y))
    rest = t1 - t
    if abs(rest) > 1e-15 * max(1.0, abs(t1)):
        y = rk4_step(prob.rhs, t, y, rest)
        if dense:
            rows.append((t1, *y))
    elif dense:
        rows[-1] = (t1, *y)
    return np.asarray(y), (np.asarray(rows) if dense else None)


def rk4_crossing_time(prob: OdeProblem, index: int, level: float) -> float:
    """First time the increasing component ``y[index]`` reaches ``level``.

    Steps with RK4 until the component passes ``level``, then bisects on the
    length of a single RK4 step from the last state below it.
    """
    t, y = prob.t0, prob.initial
    if y[index] >= level:
        return t
    h = prob.step
    while t < prob.t1:
        y_next = rk4_step(prob.rhs, t, y, h)
        if y_next[index] >= level:
            lo, hi = 0.0, h
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if rk4_step(prob.rhs, t, y, mid)[index] >= level:
                    hi = mid
                else:
                    lo = mid
            return t + 0.5 * (lo + hi)
        t, y = t + h, y_next
    raise ValueError(f"component {index} did not reach {level} before t={prob.t1}")


def central_diff(f: Callable[[float], Sequence[float]], x: float, h: float) -> np.ndarray:
    return (np.asarray(f(x + h), dtype=float) - np.asarray(f(x - h), dtype=float)) / (2.0 * h)


def length_functional(traj) -> float:
    """Trapezoid quadrature of ``sqrt(u1^2 - u2^2)`` over a sampled trajectory.

    Values of ``u1^2 - u2^2`` within ``EPS_CONE`` of zero (or below) count as
    lightlike and contribute exactly zero.
    """
    q = np.asarray(traj.u1) ** 2 - np.asarray(traj.u2) ** 2
    integrand = np.where(q > EPS_CONE, np.sqrt(np.maximum(q, 0.0)), 0.0)
    t = np.asarray(traj.t)
    return float(np.sum(0.5 * (integrand[1:] + integrand[:-1]) * np.diff(t)))
