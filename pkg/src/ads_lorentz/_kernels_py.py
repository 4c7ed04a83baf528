"""Pure-Python RK4 kernels. Same signatures and arithmetic as ``_kernels.pyx``."""

from math import ceil, cos, cosh, sin, sinh, tanh


def _killing_rhs(index, th, ph):
    if index == 2:
        return sin(ph), tanh(th) * cos(ph)
    if index == 3:
        return cos(ph), -tanh(th) * sin(ph)
    return 0.0, 1.0


def killing_flow(index, theta, phi, s, step):
    """RK4 flow of Killing field ``index`` (1, 2 or 3) for signed time ``s``.

    ``ceil(|s| / step)`` equal steps are taken.
    """
    if index not in (1, 2, 3):
        raise ValueError(f"Killing field index must be 1, 2 or 3, got {index}")
    if step <= 0:
        raise ValueError("step must be positive")
    n = int(ceil(abs(s) / step))
    if n == 0:
        return theta, phi
    h = s / n
    th, ph = theta, phi
    for _ in range(n):
        a1, b1 = _killing_rhs(index, th, ph)
        a2, b2 = _killing_rhs(index, th + 0.5 * h * a1, ph + 0.5 * h * b1)
        a3, b3 = _killing_rhs(index, th + 0.5 * h * a2, ph + 0.5 * h * b2)
        a4, b4 = _killing_rhs(index, th + h * a3, ph + h * b3)
        th += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        ph += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
    return th, ph


def _ham_rhs(th, psi):
    cp = cosh(psi)
    return sinh(psi), cp / cosh(th), -cp * tanh(th)


def hamiltonian_flow(theta, phi, psi, t1, step):
    """RK4 flow of the normal Hamiltonian system for time ``t1``."""
    if step <= 0:
        raise ValueError("step must be positive")
    n = int(ceil(abs(t1) / step))
    if n == 0:
        return theta, phi, psi
    h = t1 / n
    th, ph, ps = theta, phi, psi
    for _ in range(n):
        a1, b1, c1 = _ham_rhs(th, ps)
        a2, b2, c2 = _ham_rhs(th + 0.5 * h * a1, ps + 0.5 * h * c1)
        a3, b3, c3 = _ham_rhs(th + 0.5 * h * a2, ps + 0.5 * h * c2)
        a4, b4, c4 = _ham_rhs(th + h * a3, ps + h * c3)
        th += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        ph += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        ps += h / 6.0 * (c1 + 2.0 * c2 + 2.0 * c3 + c4)
    return th, ph, ps
