# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled RK4 kernels; ``_kernels_py`` is the reference fallback."""

from libc.math cimport ceil, cos, cosh, fabs, sin, sinh, tanh


cdef inline void _killing_rhs(int index, double th, double ph,
                              double* a, double* b) noexcept nogil:
    if index == 2:
        a[0] = sin(ph)
        b[0] = tanh(th) * cos(ph)
    elif index == 3:
        a[0] = cos(ph)
        b[0] = -tanh(th) * sin(ph)
    else:
        a[0] = 0.0
        b[0] = 1.0


def killing_flow(int index, double theta, double phi, double s, double step):
    if index < 1 or index > 3:
        raise ValueError(f"Killing field index must be 1, 2 or 3, got {index}")
    if step <= 0:
        raise ValueError("step must be positive")
    cdef long n = <long>ceil(fabs(s) / step)
    if n == 0:
        return theta, phi
    cdef double h = s / n
    cdef double th = theta, ph = phi
    cdef double a1, b1, a2, b2, a3, b3, a4, b4
    cdef long i
    with nogil:
        for i in range(n):
            _killing_rhs(index, th, ph, &a1, &b1)
            _killing_rhs(index, th + 0.5 * h * a1, ph + 0.5 * h * b1, &a2, &b2)
            _killing_rhs(index, th + 0.5 * h * a2, ph + 0.5 * h * b2, &a3, &b3)
            _killing_rhs(index, th + h * a3, ph + h * b3, &a4, &b4)
            th += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
            ph += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
    return th, ph


cdef inline void _ham_rhs(double th, double ps,
                          double* a, double* b, double* c) noexcept nogil:
    cdef double cp = cosh(ps)
    a[0] = sinh(ps)
    b[0] = cp / cosh(th)
    c[0] = -cp * tanh(th)


def hamiltonian_flow(double theta, double phi, double psi, double t1, double step):
    if step <= 0:
        raise ValueError("step must be positive")
    cdef long n = <long>ceil(fabs(t1) / step)
    if n == 0:
        return theta, phi, psi
    cdef double h = t1 / n
    cdef double th = theta, ph = phi, ps = psi
    cdef double a1, b1, c1, a2, b2, c2, a3, b3, c3, a4, b4, c4
    cdef long i
    with nogil:
        for i in range(n):
            _ham_rhs(th, ps, &a1, &b1, &c1)
            _ham_rhs(th + 0.5 * h * a1, ps + 0.5 * h * c1, &a2, &b2, &c2)
            _ham_rhs(th + 0.5 * h * a2, ps + 0.5 * h * c2, &a3, &b3, &c3)
            _ham_rhs(th + h * a3, ps + h * c3, &a4, &b4, &c4)
            th += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
            ph += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
            ps += h / 6.0 * (c1 + 2.0 * c2 + 2.0 * c3 + c4)
    return th, ph, ps
