"""Acceptance checks, shared by ``ads-lorentz selftest`` and the test suite.

Each check returns a :class:`CheckResult` carrying the measured quantity so
that the pass/fail table shows how much margin there is.
"""

from __future__ import annotations

import contextlib
import functools
import io
import json
import math
from typing import Callable, List, NamedTuple

import numpy as np

from .expmap import ExpCoords, Region, classify, exp_map, log_map
from .extremals import ExtremalClass, ExtremalState, abnormal_extremal, hamiltonian_rhs, normal_extremal
from .geometry import D_PHI, D_THETA, Point, TangentVector, gd, metric_eval
from .killing import (
    KillingField,
    apply_route,
    killing_eval,
    killing_residual,
    lie_bracket,
    route_to_origin,
    transport_distance,
)
from .oracle import OdeProblem, length_functional, rk4_integrate
from .synthesis import (
    bypass_curve,
    bypass_curve_length,
    lorentz_distance_from_origin,
    synthesis_trajectory,
    upper_boundary_distance_sequence,
)

PSI0_ORACLE = (-3.0, -1.0, -0.5, 0.5, 1.0, 3.0)
ORACLE_TIMES = (0.5, 0.5 * math.pi, 2.0, 3.0)


class CheckResult(NamedTuple):
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}  {self.title}: {self.detail}"


def _ham(t, y):
    return hamiltonian_rhs(ExtremalState(*y))


@functools.lru_cache(maxsize=None)
def _rk4_path(psi0: float):
    """RK4 (step 1e-4) of the Hamiltonian system from ``(0, 0, psi0)``.

    Integrated piecewise so the oracle times are hit exactly; returns the
    states at ``ORACLE_TIMES`` and the dense samples.
    """
    y = (0.0, 0.0, psi0)
    t = 0.0
    at, rows = [], []
    for t_next in ORACLE_TIMES:
        y, samples = rk4_integrate(OdeProblem(_ham, y, t, t_next, 1e-4))
        rows.append(samples)
        at.append(tuple(y))
        t = t_next
    return at, np.vstack(rows)


def check_closed_form_vs_rk4() -> CheckResult:
    err = 0.0
    for psi0 in PSI0_ORACLE:
        states, _ = _rk4_path(psi0)
        for t, y in zip(ORACLE_TIMES, states):
            err = max(err, float(np.max(np.abs(np.subtract(normal_extremal(psi0, t), y)))))
    return CheckResult(1, "closed-form extremals vs RK4", err < 1e-8, f"max_err={err:.3e} (tol 1e-8)")


def check_first_integral() -> CheckResult:
    closed = 0.0
    for psi0 in (-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0):
        for t in np.linspace(0.0, 3.0 * math.pi, 1000):
            s = normal_extremal(psi0, float(t))
            closed = max(closed, abs(math.cosh(s.psi) * math.cosh(s.theta) - math.cosh(psi0)))
    path = 0.0
    for psi0 in PSI0_ORACLE:
        _, rows = _rk4_path(psi0)
        drift = np.abs(np.cosh(rows[:, 3]) * np.cosh(rows[:, 1]) - math.cosh(psi0))
        path = max(path, float(drift.max()))
    ok = closed < 1e-9 and path < 1e-9
    return CheckResult(2, "first integral conservation", ok,
                       f"max_drift closed={closed:.3e} rk4={path:.3e} (tol 1e-9)")


def check_exp_log_roundtrip(n: int = 10_000, seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    psi0 = rng.uniform(-5.0, 5.0, n)
    t = rng.uniform(0.01, math.pi - 0.01, n)
    err = 0.0
    interior = True
    for a, b in zip(psi0, t):
        p = exp_map(ExpCoords(float(a), float(b)))
        interior &= classify(p).tag is Region.Interior
        c = log_map(p)
        err = max(err, abs(c.psi0 - a), abs(c.t - b))
    return CheckResult(3, "exp/log roundtrip", interior and err < 1e-9,
                       f"max_err={err:.3e} all_interior={interior} (tol 1e-9)")


def check_distance_table() -> CheckResult:
    d1 = lorentz_distance_from_origin(Point(0.0, 0.5 * math.pi)).value
    d2 = lorentz_distance_from_origin(Point(2.0, gd(2.0))).value
    d3 = lorentz_distance_from_origin(Point(0.0, math.pi)).value
    d4 = lorentz_distance_from_origin(Point(1.0, 3.0)).value
    ok = abs(d1 - 0.5 * math.pi) < 1e-12 and d2 == 0.0 and abs(d3 - math.pi) < 1e-12 and d4 == math.inf
    return CheckResult(4, "distance table", ok, f"d(0,pi/2)={d1!r} d(2,gd2)={d2!r} d(0,pi)={d3!r} d(1,3)={d4!r}")


def check_upper_boundary_limit() -> CheckResult:
    ns = [10 ** k for k in range(1, 7)]
    d = [upper_boundary_distance_sequence(1.0, n) for n in ns]
    increasing = all(b > a for a, b in zip(d, d[1:]))
    gap = math.pi - d[-1]
    return CheckResult(5, "upper-boundary limit", increasing and gap < 0.01,
                       f"increasing={increasing} pi-d(1e6)={gap:.3e} (tol 0.01)")


def _integrate_controls(traj) -> Point:
    """Integrate the control system with the trajectory's piecewise-constant controls."""
    switches = [0] + [i for i in range(1, len(traj)) if traj.u2[i] != traj.u2[i - 1]] + [len(traj) - 1]
    y = (0.0, 0.0)
    for a, b in zip(switches, switches[1:]):
        u1, u2 = traj.u1[a], traj.u2[a]

        def rhs(t, s, u1=u1, u2=u2):
            return u2, u1 / math.cosh(s[0])

        y, _ = rk4_integrate(OdeProblem(rhs, y, traj.t[a], traj.t[b], 1e-3), dense=False)
    return Point(*y)


def check_bypass_family() -> CheckResult:
    p = Point(1.0, 2.8)
    big = max(bypass_curve_length(p, a) for a in np.linspace(0.5, 10.0, 20))
    rel, miss = 0.0, 0.0
    for alpha in (1.0, 2.0, 5.0):
        curve = bypass_curve(p, alpha, n_per_segment=20_000)
        closed = bypass_curve_length(p, alpha)
        rel = max(rel, abs(length_functional(curve) - closed) / closed)
        miss = max(miss, math.dist(_integrate_controls(curve), p))
    ok = big > 1e3 and rel < 1e-3 and miss < 1e-6
    return CheckResult(6, "unbounded bypass family", ok,
                       f"max L(alpha<=10)={big:.1f} rel_err={rel:.2e} endpoint_miss={miss:.1e}")


def check_killing_suite(n: int = 100, seed: int = 7) -> CheckResult:
    rng = np.random.default_rng(seed)
    pts = [Point(a, b) for a, b in zip(rng.uniform(-2, 2, n), rng.uniform(-3, 3, n))]
    pairs = [(D_THETA, D_THETA), (D_THETA, D_PHI), (D_PHI, D_THETA), (D_PHI, D_PHI)]
    res = max(abs(killing_residual(k, p, v, w)) for k in KillingField for p in pts for v, w in pairs)
    K1, K2, K3 = KillingField
    table = [(K1, K2, K3, 1.0), (K2, K3, K1, -1.0), (K3, K1, K2, 1.0)]
    br = 0.0
    for p in pts:
        for a, b, c, sign in table:
            got, want = lie_bracket(a, b, p), killing_eval(c, p)
            br = max(br, abs(got.d_theta - sign * want.d_theta), abs(got.d_phi - sign * want.d_phi))
    return CheckResult(7, "Killing equation and brackets", res < 1e-6 and br < 1e-12,
                       f"max_residual={res:.2e} (tol 1e-6) max_bracket_err={br:.2e} (tol 1e-12)")


def _same(a: float, b: float, tol: float) -> bool:
    return a == b or abs(a - b) < tol


def check_transport(seed: int = 11) -> CheckResult:
    rng = np.random.default_rng(seed)
    vert = 0.0
    ok = True
    for _ in range(100):
        q0 = Point(0.0, rng.uniform(-3, 3))
        q1 = Point(rng.uniform(-2, 2), rng.uniform(-3, 6))
        a = transport_distance(q0, q1).value
        b = lorentz_distance_from_origin(Point(q1.theta, q1.phi - q0.phi)).value
        ok &= _same(a, b, 1e-9)
        if math.isfinite(a) and math.isfinite(b):
            vert = max(vert, abs(a - b))
    gen, halving = 0.0, 0.0
    for _ in range(50):
        q0 = Point(rng.uniform(-2, 2), rng.uniform(-3, 3))
        psi0, t = rng.uniform(-2, 2), rng.uniform(0.05, math.pi - 0.05)
        q1 = apply_route(route_to_origin(q0).inverse(), exp_map(ExpCoords(psi0, t)))
        gen = max(gen, abs(transport_distance(q0, q1).value - t))
        h1 = transport_distance(q0, q1, step=1e-3).value
        h2 = transport_distance(q0, q1, step=5e-4).value
        halving = max(halving, abs(h1 - h2))
    ok = ok and gen < 1e-5 and halving < 1e-8
    return CheckResult(8, "transport distance", ok,
                       f"phi-shift err={vert:.1e} generated err={gen:.1e} (tol 1e-5) "
                       f"step-halving diff={halving:.1e} (tol 1e-8)")


def check_additivity(n: int = 200, seed: int = 13) -> CheckResult:
    rng = np.random.default_rng(seed)
    err = 0.0
    for _ in range(n):
        psi0, total = rng.uniform(-2, 2), rng.uniform(0.05, math.pi - 0.05)
        s = rng.uniform(0.1, 0.9) * total
        q1 = exp_map(ExpCoords(psi0, total))
        m = exp_map(ExpCoords(psi0, s))
        d = lorentz_distance_from_origin(m).value + transport_distance(m, q1).value
        err = max(err, abs(d - total))
    return CheckResult(9, "geodesic additivity", err < 1e-5, f"max_err={err:.2e} (tol 1e-5)")


def check_lightlike_boundary(seed: int = 17) -> CheckResult:
    rng = np.random.default_rng(seed)
    norm = 0.0
    for cls, sign in ((ExtremalClass.AbnormalPlus, 1.0), (ExtremalClass.AbnormalMinus, -1.0)):
        q0 = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        for t in rng.uniform(0, 3, 100):
            p = abnormal_extremal(cls, q0, float(t))
            # velocity of (theta0 +- t, phi0 +- gd(theta0 +- t)): gd' = sech
            v = TangentVector(sign, 1.0 / math.cosh(p.theta))
            norm = max(norm, abs(metric_eval(p, v, v)))
    length = max(
        abs(length_functional(synthesis_trajectory(Point(th, gd(abs(th))), 500)))
        for th in (-2.0, -0.3, 0.7, 2.5)
    )
    return CheckResult(10, "lightlike boundary", norm < 1e-10 and length < 1e-12,
                       f"max|g(v,v)|={norm:.1e} (tol 1e-10) max_length={length:.1e} (tol 1e-12)")


def _run_cli(argv):
    from .cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def check_cli_contract(include_selftest: bool = False) -> CheckResult:
    code_d, out, _ = _run_cli(["dist", "0", "1.5707963267948966"])
    dist = json.loads(out)["distance"] if code_d == 0 else float("nan")
    digits_ok = f"{dist:.15g}" == f"{0.5 * math.pi:.15g}"
    code_t, _, _ = _run_cli(["traj", "1", "3.0"])
    ok = code_d == 0 and digits_ok and code_t == 2
    detail = f"dist exit={code_d} distance={dist!r} traj(1,3) exit={code_t}"
    if include_selftest:
        code_s, _, _ = _run_cli(["selftest"])
        ok &= code_s == 0
        detail += f" selftest exit={code_s}"
    return CheckResult(11, "CLI contract", ok, detail)


CHECKS: List[Callable[[], CheckResult]] = [
    check_closed_form_vs_rk4,
    check_first_integral,
    check_exp_log_roundtrip,
    check_distance_table,
    check_upper_boundary_limit,
    check_bypass_family,
    check_killing_suite,
    check_transport,
    check_additivity,
    check_lightlike_boundary,
    check_cli_contract,
]


def run_all() -> List[CheckResult]:
    results = []
    for check in CHECKS:
        try:
            results.append(check())
        except Exception as exc:  # a crashing check is a failing check
            number = CHECKS.index(check) + 1
            results.append(CheckResult(number, check.__name__, False, f"raised {exc!r}"))
    return results
