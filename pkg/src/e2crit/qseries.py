"""Weierstrass/Eisenstein layer: eta1, eta2, E2, g2, g3, e_k, wp, wp', zeta
and their tau-derivatives, evaluated by truncated q-expansions with certified
tail bounds.

Conventions: q = exp(2*pi*i*tau); z = r + s*tau in lattice coordinates with
periods 1 and tau.  Arguments with Im tau below the policy threshold are
pulled back to the SL(2,Z) fundamental domain first, where |q| <= e^{-pi*r3}
makes every series short.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import _backend
from .domain import DEFAULT, PrecisionPolicy, as_pair, as_tau
from .errors import PoleAtLattice, TruncationFailure

PI = math.pi
TWO_PI_I = 2j * PI

_HALF_PERIODS = {1: (0.5, 0.0), 2: (0.0, 0.5), 3: (0.5, 0.5)}

# ---------------------------------------------------------------------------
# divisor-sum coefficients and tail bounds

_sigma_cache: dict[int, np.ndarray] = {}


def _sigma(power: int, n: int) -> np.ndarray:
    """sigma_power(k) for k = 1..n as a float array (index 0 unused)."""
    arr = _sigma_cache.get(power)
    if arr is None or len(arr) <= n:
        size = max(n + 1, 64, 0 if arr is None else 2 * len(arr))
        out = np.zeros(size)
        for d in range(1, size):
            out[d::d] += float(d) ** power
        _sigma_cache[power] = arr = out
    return arr


def _nterms(rho: float, tol: float, max_terms: int, power: int = 3) -> int:
    """Smallest N with sum_{k>N} k^power rho^k < tol.

    The majorant tail is evaluated directly (partial sum plus a geometric
    remainder once the term ratio drops below 1).
    """
    if rho <= 0.0:
        return 1
    if rho >= 0.95:
        raise TruncationFailure(f"series parameter rho={rho:.4f} too close to 1")
    terms = []
    k = 1
    while k <= max_terms + 8:
        t = float(k) ** power * rho**k
        terms.append(t)
        if k > 4 and t < tol * 1e-8:
            break
        k += 1
    klast = len(terms)
    ratio = rho * ((klast + 1) / klast) ** power
    remainder = terms[-1] * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
    best = None
    suffix = remainder
    for i in range(len(terms) - 1, -1, -1):  # terms[i] is the k = i+1 term
        if suffix < tol:
            best = i + 1
        suffix += terms[i]
    if best is None or best > max_terms:
        raise TruncationFailure(
            f"cannot reach tolerance {tol:.2e} with {max_terms} terms at rho={rho:.4f}"
        )
    return max(1, best)


def choose_truncation(im_tau: float, eps: float, pp: PrecisionPolicy = DEFAULT) -> int:
    """Series length for the weight-2/4 expansions at height im_tau.

    Returns N such that sum_{k>N} k^3 |q|^k < eps/(320 pi^4) with
    |q| = e^{-2 pi im_tau}; k^3 majorizes sigma_1 and (up to the constant
    folded into the target) sigma_3.
    """
    if im_tau < DEFAULT.min_im_direct - 1e-12:
        raise ValueError(f"im_tau below direct-evaluation threshold: {im_tau}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    rho = math.exp(-2 * PI * im_tau)
    return _nterms(rho, eps / (320 * PI**4), pp.max_terms)


# ---------------------------------------------------------------------------
# weight-2/4/6 series with modular pull-back

def _basic_direct(tau: complex, pp: PrecisionPolicy):
    """(eta1, g2, g3) by direct series; requires Im tau >= pp.min_im_direct."""
    q = cmath.exp(TWO_PI_I * tau)
    # one length serves all three series: k^5 majorizes sigma_5 up to zeta(5),
    # and the tolerance target absorbs the largest prefactor (504 * 8 pi^6/27)
    n = _nterms(abs(q), pp.eps / 150000.0, pp.max_terms, power=5)
    k = _backend.kernels
    s1 = k.horner(_sigma(1, n), q, n)
    s3 = k.horner(_sigma(3, n), q, n)
    s5 = k.horner(_sigma(5, n), q, n)
    eta1 = PI**2 / 3 - 8 * PI**2 * s1
    g2 = (4.0 / 3.0) * PI**4 + 320 * PI**4 * s3
    g3 = (8 * PI**6 / 27) * (1 - 504 * s5)
    return eta1, g2, g3


def _basic(tau: complex, pp: PrecisionPolicy):
    """(eta1, g2, g3) anywhere in H, reducing low points to the SL(2,Z) domain."""
    if tau.imag >= pp.min_im_direct:
        return _basic_direct(tau, pp)
    from .moebius import reduce_to_F

    t1, gam = reduce_to_F(tau)
    z1 = t1.z
    e1, g2v, g3v = _basic_direct(z1, pp)
    mu = gam.c * z1 + gam.d
    e2v = z1 * e1 - TWO_PI_I
    return mu * (gam.c * e2v + gam.d * e1), mu**4 * g2v, mu**6 * g3v


def eval_eta1(tau, pp: PrecisionPolicy = DEFAULT) -> complex:
    """Quasi-period eta1(tau) = pi^2/3 - 8 pi^2 sum sigma_1(k) q^k."""
    return _basic(as_tau(tau), pp)[0]


def eval_eta2(tau, pp: PrecisionPolicy = DEFAULT) -> complex:
    """Second quasi-period via the Legendre relation eta2 = tau*eta1 - 2*pi*i."""
    t = as_tau(tau)
    return t * _basic(t, pp)[0] - TWO_PI_I


def eval_E2(tau, pp: PrecisionPolicy = DEFAULT) -> complex:
    """Normalized weight-2 Eisenstein series, (3/pi^2) * eta1."""
    return 3 / PI**2 * _basic(as_tau(tau), pp)[0]


def eval_invariants(tau, pp: PrecisionPolicy = DEFAULT) -> tuple[complex, complex]:
    """Weierstrass invariants (g2, g3)."""
    _, g2v, g3v = _basic(as_tau(tau), pp)
    return g2v, g3v


def eval_derivatives(tau, pp: PrecisionPolicy = DEFAULT) -> tuple[complex, complex, complex]:
    """Holomorphic tau-derivatives (eta1', g2', g3') via closed-form identities."""
    e1, g2v, g3v = _basic(as_tau(tau), pp)
    eta1_p = (0.5j / PI) * (e1 * e1 - g2v / 12)
    g2_p = (1j / PI) * (2 * e1 * g2v - 3 * g3v)
    g3_p = (1j / PI) * (3 * g3v * e1 - g2v * g2v / 6)
    return eta1_p, g2_p, g3_p


# ---------------------------------------------------------------------------
# Weierstrass family at z = r + s*tau

def reduce_lattice(r: float, s: float) -> tuple[float, float]:
    """Translate lattice coordinates into [-1/2, 1/2)^2."""
    return r - math.floor(r + 0.5), s - math.floor(s + 0.5)


def _wp_family(r: float, s: float, tau: complex, pp: PrecisionPolicy):
    """(wp, wp', Z_{rh,sh}) at the reduced point; Im tau must be comfortable.

    Z_{rh,sh} = zeta(z_reduced) - rh*eta1 - sh*eta2 is returned instead of
    zeta itself so callers can assemble either zeta or the Hecke form without
    losing the exact (r,s)-periodicity.
    """
    rh, sh = reduce_lattice(r, s)
    if abs(rh) < 1e-12 and abs(sh) < 1e-12:
        raise PoleAtLattice(f"z = {r} + {s}*tau reduces to a lattice point")
    # parity: evaluate the sign-canonical representative so that wp(z) == wp(-z)
    # and zeta(z) == -zeta(-z) hold exactly as evaluated
    sign = 1.0
    if sh < 0.0 or (sh == 0.0 and rh < 0.0):
        rh, sh, sign = -rh, -sh, -1.0
    q = cmath.exp(TWO_PI_I * tau)
    x = cmath.exp(TWO_PI_I * (rh + sh * tau))
    ax = abs(x)
    rho = abs(q) * max(ax, 1.0 / ax)
    n = _nterms(rho, pp.eps / (64 * PI**3), pp.max_terms)
    sp, spp, sz = _backend.kernels.wp_sums(x, q, n)
    one_minus = 1 - x
    wp = -4 * PI**2 * (1.0 / 12.0 + x / one_minus**2 + sp)
    wpp = -8j * PI**3 * (x / one_minus**2 + 2 * x * x / one_minus**3 + spp)
    z_hecke = 2j * PI * sh - 1j * PI * (1 + x) / one_minus - TWO_PI_I * sz
    return wp, sign * wpp, sign * z_hecke


def _char_pullback(r: float, s: float, gam) -> tuple[float, float]:
    """Lattice coordinates of z*(c*tau1+d) in the tau1-lattice for tau = gam*tau1."""
    return gam.d * r + gam.b * s, gam.c * r + gam.a * s


def eval_weierstrass(z, tau, pp: PrecisionPolicy = DEFAULT) -> tuple[complex, complex, complex]:
    """(wp, wp', zeta) at z = r + s*tau.

    z is reduced into the validity strip |q| < |e^{2 pi i z}| < |q|^{-1}; the
    quasi-period ledger restores zeta at the original point.
    """
    r, s = as_pair(z)
    t = as_tau(tau)
    if t.imag >= pp.min_im_direct:
        wp, wpp, z_hecke = _wp_family(r, s, t, pp)
        e1, _, _ = _basic(t, pp)
        e2v = t * e1 - TWO_PI_I
        return wp, wpp, z_hecke + r * e1 + s * e2v
    from .moebius import reduce_to_F

    t1, gam = reduce_to_F(t)
    z1 = t1.z
    mu = gam.c * z1 + gam.d
    r1, s1 = _char_pullback(r, s, gam)
    wp1, wpp1, z_hecke1 = _wp_family(r1, s1, z1, pp)
    e1, _, _ = _basic_direct(z1, pp)
    e2v = z1 * e1 - TWO_PI_I
    zeta1 = z_hecke1 + r1 * e1 + s1 * e2v
    return mu * mu * wp1, mu**3 * wpp1, mu * zeta1


def eval_ek(k: int, tau, pp: PrecisionPolicy = DEFAULT) -> complex:
    """Half-period value e_k = wp(omega_k/2 | tau), k in {1, 2, 3}."""
    if k not in _HALF_PERIODS:
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    return eval_weierstrass(_HALF_PERIODS[k], tau, pp)[0]
