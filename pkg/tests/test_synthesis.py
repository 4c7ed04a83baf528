import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ads_lorentz.errors import DomainError, NoOptimalTrajectory
from ads_lorentz.expmap import ExpCoords, Region, classify, exp_map
from ads_lorentz.extremals import ExtremalClass, ExtremalState, abnormal_extremal, hamiltonian_rhs
from ads_lorentz.geometry import CausalClass, Point, TangentVector, causal_class, gd
from ads_lorentz.killing import transport_distance
from ads_lorentz.oracle import OdeProblem, length_functional, rk4_crossing_time, rk4_integrate
from ads_lorentz.synthesis import (
    ORIGIN,
    bypass_curve,
    bypass_curve_length,
    lorentz_distance_from_origin,
    psi_for_target,
    reachable_from,
    reachable_from_translated,
    synthesis_trajectory,
    time_for_target,
    upper_boundary_distance_sequence,
    upper_boundary_min_index,
)

# Shooting on psi0 with RK4 (step 1e-4) until the trajectory passes through (0.5, 2.0).
TARGET = Point(0.5, 2.0)
TARGET_PSI = 0.5603181141552
TARGET_TIME = 2.0592466334330


def ham(t, y):
    return hamiltonian_rhs(ExtremalState(*y))


def arrival_time(psi0, phi1, step=1e-4):
    return rk4_crossing_time(OdeProblem(ham, (0.0, 0.0, psi0), 0.0, math.pi, step), 1, phi1)


def interior_points(rng, n):
    out = []
    while len(out) < n:
        theta = rng.uniform(-2.5, 2.5)
        lo = gd(abs(theta))
        phi = rng.uniform(lo, math.pi - lo)
        p = Point(theta, phi)
        if classify(p).tag is Region.Interior:
            out.append(p)
    return out


@pytest.mark.parametrize("phi1", [0.3, 1.0, 2.5])
def test_psi_on_axis(phi1):
    assert psi_for_target(Point(0, phi1)) == 0.0
    assert time_for_target(Point(0, phi1)) == pytest.approx(phi1, abs=1e-15)


def test_quarter_turn_target():
    assert psi_for_target(Point(1, math.pi / 2)) == pytest.approx(1.0, abs=1e-15)
    assert time_for_target(Point(0, math.pi / 2)) == pytest.approx(math.pi / 2, abs=1e-15)


def test_target_matches_shooting_oracle():
    assert psi_for_target(TARGET) == pytest.approx(TARGET_PSI, abs=1e-9)
    assert time_for_target(TARGET) == pytest.approx(TARGET_TIME, abs=1e-9)
    assert arrival_time(psi_for_target(TARGET), TARGET.phi) == pytest.approx(time_for_target(TARGET), abs=1e-6)
    assert exp_map(ExpCoords(TARGET_PSI, TARGET_TIME)) == pytest.approx(TARGET, abs=1e-9)


def test_distance_equals_rk4_arrival(rng):
    for p in interior_points(rng, 25):
        d = lorentz_distance_from_origin(p)
        assert d.value == d.time == time_for_target(p)
        end, _ = rk4_integrate(OdeProblem(ham, (0, 0, psi_for_target(p)), 0, d.value, 1e-3), dense=False)
        assert end[:2] == pytest.approx(tuple(p), abs=1e-6)


@pytest.mark.parametrize(
    "p,tag,value,attained",
    [
        (Point(0, math.pi / 2), Region.Interior, math.pi / 2, True),
        (Point(2, gd(2)), Region.LowerBoundary, 0.0, True),
        (Point(0, 0), Region.LowerBoundary, 0.0, True),
        (Point(1, 3.0), Region.Beyond, math.inf, False),
        (Point(0, math.pi), Region.Apex, math.pi, True),
        (Point(1, math.pi - gd(1)), Region.UpperBoundary, math.pi, False),
        (Point(1, 0.2), Region.Outside, 0.0, False),
    ],
)
def test_distance_table(p, tag, value, attained):
    d = lorentz_distance_from_origin(p)
    assert d.region.tag is tag
    assert d.value == pytest.approx(value, abs=1e-15) or d.value == value
    assert d.attained is attained


def test_causal_monotonicity_grid():
    for theta in np.linspace(-2, 2, 100):
        lo = gd(abs(theta))
        phis = np.linspace(lo, math.pi - lo, 100)
        d = [lorentz_distance_from_origin(Point(theta, phi)).value for phi in phis]
        assert all(b >= a - 1e-12 for a, b in zip(d, d[1:]))


def test_trajectory_on_axis():
    traj = synthesis_trajectory(Point(0, math.pi / 2), 3)
    assert len(traj) == 3
    assert traj.t == pytest.approx([0, math.pi / 4, math.pi / 2])
    assert traj.theta == pytest.approx([0, 0, 0])
    assert traj.phi == pytest.approx([0, math.pi / 4, math.pi / 2])
    assert traj.kind is ExtremalClass.Normal and not traj.continuum


def test_trajectory_normal_endpoint():
    traj = synthesis_trajectory(Point(1, math.pi / 2), 50)
    assert traj.t[-1] == pytest.approx(math.pi / 2, abs=1e-14)
    assert traj.endpoint == pytest.approx((1, math.pi / 2), abs=1e-12)
    assert traj.u1[0] == pytest.approx(math.cosh(1), abs=1e-14)


@pytest.mark.parametrize("theta", [2.0, -0.7])
def test_trajectory_abnormal(theta):
    p = Point(theta, gd(abs(theta)))
    traj = synthesis_trajectory(p, 11)
    assert traj.endpoint == pytest.approx(tuple(p), abs=1e-14)
    assert traj.kind is (ExtremalClass.AbnormalPlus if theta > 0 else ExtremalClass.AbnormalMinus)
    assert np.all(traj.u1 == 1.0) and np.all(np.abs(traj.u2) == 1.0)
    assert length_functional(traj) == 0.0
    for t, q, u in traj.samples():
        assert causal_class(TangentVector(u.u2, u.u1 / math.cosh(q.theta)), q) is CausalClass.LightlikeFuture


def test_trajectory_apex_continuum():
    traj = synthesis_trajectory(Point(0, math.pi), 5)
    assert traj.continuum
    assert traj.endpoint == pytest.approx((0, math.pi))


@pytest.mark.parametrize(
    "p,tag",
    [
        (Point(1, 3.0), Region.Beyond),
        (Point(1, math.pi - gd(1)), Region.UpperBoundary),
        (Point(1, 0.1), Region.Outside),
    ],
)
def test_no_optimal_trajectory(p, tag):
    with pytest.raises(NoOptimalTrajectory) as info:
        synthesis_trajectory(p, 10)
    assert info.value.region.tag is tag
    assert str(info.value).startswith(tag.value + ": distance=")


def test_trajectory_argument_errors():
    with pytest.raises(ValueError):
        synthesis_trajectory(Point(0, 1), 1)
    with pytest.raises(DomainError):
        synthesis_trajectory(ORIGIN, 5)


@given(st.floats(-2, 2), st.floats(0.05, 0.95))
@settings(max_examples=50, deadline=None)
def test_geodesic_additivity(theta, frac):
    lo = gd(abs(theta))
    p = Point(theta, lo + frac * (math.pi - 2 * lo))
    if classify(p).tag is not Region.Interior:
        return
    t1 = time_for_target(p)
    traj = synthesis_trajectory(p, 11)
    m = Point(traj.theta[4], traj.phi[4])
    total = lorentz_distance_from_origin(m).value + transport_distance(m, p).value
    assert total == pytest.approx(t1, abs=1e-5)


def test_bypass_examples():
    p = Point(1, 2.8)
    assert bypass_curve_length(p, 10) == pytest.approx((2.8 + gd(1) - 2 * gd(10)) * math.cosh(10), rel=1e-15)
    assert bypass_curve_length(p, 10) == pytest.approx(5774.8815, abs=1e-3)
    assert bypass_curve_length(p, 1e-9) == pytest.approx(2.8 + gd(1), abs=1e-8)
    grid = np.linspace(5, 30, 60)
    lengths = [bypass_curve_length(p, a) for a in grid]
    assert all(b > a for a, b in zip(lengths, lengths[1:]))


@pytest.mark.parametrize("target", [Point(1, 2.8), Point(-0.8, 2.9), Point(0, 3.5)])
@pytest.mark.parametrize("alpha", [1.0, 2.0, 5.0])
def test_bypass_curve_matches_length(target, alpha):
    traj = bypass_curve(target, alpha, n_per_segment=2000)
    assert traj.endpoint == pytest.approx(tuple(target), abs=1e-12)
    assert length_functional(traj) == pytest.approx(bypass_curve_length(target, alpha), rel=1e-3)
    # controls admissible and the samples follow the dynamics
    assert np.all(traj.u1 ** 2 - traj.u2 ** 2 >= -1e-12)
    dt = np.diff(traj.t)
    dtheta = np.diff(traj.theta)
    assert np.all(np.abs(dtheta - traj.u2[:-1] * dt) < 1e-9 + 1e-9 * dt)


def test_bypass_errors():
    with pytest.raises(DomainError):
        bypass_curve_length(Point(0.5, 2.0), 1.0)
    with pytest.raises(DomainError):
        bypass_curve_length(Point(1, 2.8), 0.0)
    with pytest.raises(DomainError):
        bypass_curve(Point(1.5, 3.0), 1.0)


def test_upper_boundary_sequence():
    assert upper_boundary_min_index(1.0) == 2
    values = [upper_boundary_distance_sequence(1.0, 10 ** k) for k in range(1, 7)]
    assert math.pi / 2 < values[0] < math.pi
    assert all(b > a for a, b in zip(values, values[1:]))
    assert math.pi - values[-1] < 0.01
    assert upper_boundary_distance_sequence(-1.0, 100) == pytest.approx(upper_boundary_distance_sequence(1.0, 100))
    with pytest.raises(DomainError):
        upper_boundary_distance_sequence(1.0, 1)
    with pytest.raises(DomainError):
        upper_boundary_distance_sequence(0.0, 10)


def test_reachable_from_origin_agrees_with_classify(rng):
    for theta, phi in zip(rng.uniform(-2, 2, 500), rng.uniform(-0.5, 4, 500)):
        p = Point(theta, phi)
        expected = classify(p).tag is not Region.Outside
        assert reachable_from(ORIGIN, p) is expected
        assert reachable_from_translated(ORIGIN, p) is expected


def test_reachable_from_shifted_base():
    q0 = Point(1, 0)
    assert reachable_from(q0, abnormal_extremal(ExtremalClass.AbnormalPlus, q0, 2))
    assert reachable_from(q0, abnormal_extremal(ExtremalClass.AbnormalMinus, q0, 2))
    below = Point(3, gd(3) - gd(1) - 1e-3)
    # independent form of the Gudermannian: 2 atan(tanh(x / 2))
    assert below.phi == pytest.approx(2 * math.atan(math.tanh(1.5)) - 2 * math.atan(math.tanh(0.5)) - 1e-3, abs=1e-14)
    assert not reachable_from(q0, below)
    # the translated cone disagrees here: gd(2) is larger than gd(3) - gd(1)
    assert not reachable_from_translated(q0, below)
    mid = Point(3, 0.5 * (gd(3) - gd(1) + gd(2)))
    assert reachable_from(q0, mid) and not reachable_from_translated(q0, mid)
