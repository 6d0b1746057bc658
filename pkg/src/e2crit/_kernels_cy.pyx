# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; mirrors e2crit._kernels_py."""


def horner(double[::1] coeffs, double complex q, int n):
    """sum_{k=1..n} coeffs[k] * q**k, evaluated by Horner's scheme."""
    cdef double complex acc = 0
    cdef int k
    for k in range(n, 0, -1):
        acc = (acc + coeffs[k]) * q
    return acc


def wp_sums(double complex x, double complex q, int n):
    """Lambert-type sums shared by the Weierstrass family."""
    cdef double complex sp = 0, spp = 0, sz = 0
    cdef double complex xk = 1, xmk = 1, qk = 1, lam, d
    cdef int k
    for k in range(1, n + 1):
        xk *= x
        xmk /= x
        qk *= q
        lam = qk / (1 - qk)
        d = (xk - xmk) * lam
        sp += k * (xk + xmk - 2) * lam
        spp += k * k * d
        sz += d
    return sp, spp, sz
