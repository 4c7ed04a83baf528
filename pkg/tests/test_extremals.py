import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ads_lorentz.extremals import (
    ExtremalClass,
    ExtremalState,
    MaximalityCase,
    abnormal_control,
    abnormal_extremal,
    adjoint_covector,
    first_integral,
    hamiltonian_rhs,
    maximality_case,
    normal_control,
    normal_extremal,
    normal_phi,
)
from ads_lorentz.geometry import CausalClass, Point, TangentVector, causal_class, gd
from ads_lorentz.oracle import OdeProblem, central_diff, rk4_integrate

psi0s = st.floats(-3.0, 3.0, allow_nan=False)
times = st.floats(0.0, 3 * math.pi, allow_nan=False)

# Frozen from a generic RK4 integration of the Hamiltonian system (step 1e-4).
RK4_STATES = [
    (1.0, math.pi / 4, (0.75668700329825, 0.9957901442164858, 0.6020805592687145)),
    (1.0, 3 * math.pi / 4, (0.756687003298253, 2.145802509373309, -0.602080559268716)),
]


def _rhs(t, y):
    return hamiltonian_rhs(ExtremalState(*y))


@pytest.mark.parametrize("psi0,t,expected", RK4_STATES)
def test_normal_extremal_matches_rk4_states(psi0, t, expected):
    assert normal_extremal(psi0, t) == pytest.approx(expected, abs=1e-8)


def test_normal_extremal_landmarks():
    s = normal_extremal(1.0, math.pi / 2)
    assert s.theta == pytest.approx(math.asinh(math.sinh(1.0)), abs=1e-15)
    assert s.phi == pytest.approx(math.pi / 2, abs=1e-15)
    assert s.psi == pytest.approx(0.0, abs=1e-15)
    s = normal_extremal(1.0, math.pi)
    assert s.theta == pytest.approx(0.0, abs=1e-15)
    assert s.phi == pytest.approx(math.pi, abs=1e-15)
    assert s.psi == pytest.approx(-1.0, abs=1e-15)


def test_vertical_geodesic():
    for t in np.linspace(0, 5, 11):
        assert normal_extremal(0.0, t) == pytest.approx((0.0, t, 0.0), abs=1e-15)


@given(psi0s, times)
def test_first_integral_conserved(psi0, t):
    d = first_integral(normal_extremal(psi0, t))
    assert d == pytest.approx(math.cosh(psi0), rel=1e-12)


@given(psi0s, st.floats(0.01, 3 * math.pi - 0.01))
def test_closed_form_satisfies_ode(psi0, t):
    h = 1e-5
    fd = central_diff(lambda x: tuple(normal_extremal(psi0, x)), t, h)
    rhs = hamiltonian_rhs(normal_extremal(psi0, t))
    scale = math.cosh(psi0) ** 3
    assert fd == pytest.approx(rhs, abs=1e-7 * scale)


@pytest.mark.parametrize("seam", [math.pi / 2, math.pi, 3 * math.pi / 2, 2 * math.pi])
@pytest.mark.parametrize("psi0", [-2.0, 0.3, 1.5])
def test_phi_smooth_across_seams(psi0, seam):
    for t in (seam - 1e-9, seam, seam + 1e-9):
        dphi = central_diff(lambda x: (normal_phi(psi0, x),), t, 1e-6)[0]
        assert dphi == pytest.approx(hamiltonian_rhs(normal_extremal(psi0, t))[1], rel=1e-6)
    assert normal_phi(psi0, seam) == pytest.approx(seam, abs=1e-14)


@pytest.mark.parametrize("psi0", [-2.5, -0.7, 0.0, 0.4, 1.0, 2.2])
def test_closed_form_vs_rk4_over_period(psi0):
    prob = OdeProblem(_rhs, (0.0, 0.0, psi0), 0.0, 2 * math.pi, 1e-3)
    _, rows = rk4_integrate(prob)
    for row in rows[::157]:
        assert normal_extremal(psi0, row[0]) == pytest.approx(tuple(row[1:]), abs=1e-9 * math.cosh(psi0) ** 4)


@given(psi0s)
def test_phi_monotone_with_bounded_rate(psi0):
    t = np.linspace(0, 3 * math.pi, 301)
    phi = np.array([normal_phi(psi0, x) for x in t])
    assert np.all(np.diff(phi) > 0)
    d = math.cosh(psi0)
    for x in t:
        assert hamiltonian_rhs(normal_extremal(psi0, x))[1] <= d * (1 + 1e-12)


@given(psi0s, times)
def test_reflection_symmetry(psi0, t):
    a = normal_extremal(psi0, t)
    b = normal_extremal(-psi0, t)
    assert b.theta == pytest.approx(-a.theta, abs=1e-12)
    assert b.phi == pytest.approx(a.phi, abs=1e-12)
    assert b.psi == pytest.approx(-a.psi, abs=1e-12)


@given(psi0s, times)
def test_normal_velocity_is_unit_timelike(psi0, t):
    s = normal_extremal(psi0, t)
    u1, u2 = normal_control(s.psi)
    assert u1 * u1 - u2 * u2 == pytest.approx(1.0, abs=1e-9 * u1 * u1)
    assert u1 > 0


def test_adjoint_covector_pairs_with_velocity():
    # lambda(q') equals the Hamiltonian value h1*u1 + h2*u2 = -1 along the normal flow
    for psi0, t in [(0.5, 0.3), (-1.2, 2.0), (2.0, 4.0)]:
        s = normal_extremal(psi0, t)
        lam = adjoint_covector(s)
        dth, dph, _ = hamiltonian_rhs(s)
        assert lam.xi1 * dth + lam.xi2 * dph == pytest.approx(-1.0, abs=1e-12)


@pytest.mark.parametrize("cls,sign", [(ExtremalClass.AbnormalPlus, 1), (ExtremalClass.AbnormalMinus, -1)])
@pytest.mark.parametrize("q0", [Point(0, 0), Point(0.7, 1.1), Point(-1.3, -2.0)])
def test_abnormal_curves(cls, sign, q0):
    assert abnormal_extremal(cls, q0, 0.0) == pytest.approx(q0, abs=1e-15)
    u1, u2 = abnormal_control(cls)
    assert (u1, u2) == (1.0, float(sign))
    for t in np.linspace(0.1, 2.5, 7):
        p = abnormal_extremal(cls, q0, t)
        v = TangentVector(*central_diff(lambda x: tuple(abnormal_extremal(cls, q0, x)), t, 1e-6))
        assert v.d_theta == pytest.approx(sign, abs=1e-9)
        assert v.d_phi == pytest.approx(1 / math.cosh(p.theta), abs=1e-9)
        assert causal_class(TangentVector(sign, 1 / math.cosh(p.theta)), p) is CausalClass.LightlikeFuture


def test_abnormal_from_origin_traces_lower_boundary():
    for t in (0.5, 1.0, 3.0):
        p = abnormal_extremal(ExtremalClass.AbnormalPlus, Point(0, 0), t)
        assert p == pytest.approx((t, gd(t)), abs=1e-15)
        m = abnormal_extremal(ExtremalClass.AbnormalMinus, Point(0, 0), t)
        assert m == pytest.approx((-t, gd(t)), abs=1e-15)


def test_abnormal_rejects_normal():
    with pytest.raises(ValueError):
        abnormal_extremal(ExtremalClass.Normal, Point(0, 0), 1.0)
    with pytest.raises(ValueError):
        abnormal_control(ExtremalClass.Normal)


@pytest.mark.parametrize(
    "h1,h2,nu,expected",
    [
        (-1.0, 1.0, 0, MaximalityCase.AbnormalPlus),
        (-2.5, -2.5, 0, MaximalityCase.AbnormalMinus),
        (1.0, 1.0, 0, MaximalityCase.NoMax),
        (-1.0, 0.5, 0, MaximalityCase.NoMax),
        (0.0, 0.0, 0, MaximalityCase.NoMax),
        (-math.cosh(0.8), math.sinh(0.8), -1, MaximalityCase.NormalCone),
        (-1.0, 0.0, -1, MaximalityCase.NormalCone),
        (1.0, 0.0, -1, MaximalityCase.NoMax),
        (-2.0, 0.0, -1, MaximalityCase.NoMax),
    ],
)
def test_maximality_case(h1, h2, nu, expected):
    assert maximality_case(h1, h2, nu) is expected


def test_maximality_case_rejects_bad_nu():
    with pytest.raises(ValueError):
        maximality_case(-1.0, 1.0, 1)


@given(psi0s, times)
def test_normal_states_satisfy_normal_maximality(psi0, t):
    s = normal_extremal(psi0, t)
    assert maximality_case(s.h1, s.h2, -1) is MaximalityCase.NormalCone


def _brute_force_max(h1, h2, nu):
    # sample the cone u1 = cosh r, |u2| <= u1 and scale out to large radius
    r = np.linspace(-6, 6, 4001)
    vals = [h1 * math.cosh(x) + h2 * math.sinh(x) - nu for x in r]
    return max(vals)


@pytest.mark.parametrize("h1,h2", [(-1.2, 0.3), (-0.5, 0.9), (0.2, 0.0), (-3.0, 2.9)])
def test_normal_cone_only_when_sup_is_zero(h1, h2):
    # on the unit hyperbola the normal Hamiltonian is maximal (value 0) exactly on the cone case
    top = _brute_force_max(h1, h2, -1)
    hit = maximality_case(h1, h2, -1) is MaximalityCase.NormalCone
    assert hit == (abs(top) < 1e-6)
