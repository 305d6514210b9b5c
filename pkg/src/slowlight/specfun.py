"""Special functions for the statistical sums: Bose-Einstein polylogarithms
g_nu(f) = sum_{l>=1} f^l / l^nu, the Faddeeva function
w(y) = exp(-y^2)(1 + erf(iy)) with its large-|y| expansion, and inversion of
the fugacity relations g_nu(f) = g_nu(1) (Tc/T)^nu.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sc

from .errors import DomainError, SeriesCapError

SQRT_PI = math.sqrt(math.pi)

# Riemann zeta values g_nu(1) used by the thermodynamic relations
ZETA_3_2 = float(sc.zeta(1.5))
ZETA_2 = float(sc.zeta(2.0))
ZETA_5_2 = float(sc.zeta(2.5))
ZETA_3 = float(sc.zeta(3.0))
ZETA_4 = float(sc.zeta(4.0))

# below this fugacity the series is geometric enough to sum directly;
# above it a 2000-term head plus an Euler-Maclaurin tail is used
_DIRECT_SERIES_MAX_F = 0.99
_EM_HEAD_TERMS = 2000
_CHUNK = 256

# |y| boundary above which dw/dy = -2 y w + 2i/sqrt(pi) is evaluated through
# the large-|y| series instead (the direct form loses ~|y|^2 eps to
# cancellation; at 35 both branches are accurate to ~5e-13)
_W_PRIME_ASYMPTOTIC_RADIUS = 35.0


@dataclass(frozen=True)
class Fugacity:
    """Fugacity f = exp(mu/K_B T); f = 1 exactly for T <= Tc."""

    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise DomainError("fugacity must lie in [0, 1], got %r" % self.value)


def _upper_gamma(s, z):
    """Upper incomplete gamma Gamma(s, z) for real s <= 1 and z > 0.

    Brings s into (0, 1] (or 0, handled by E1) and walks back down with
    Gamma(s-1, z) = (Gamma(s, z) - z^(s-1) e^(-z)) / (s-1).
    """
    if s > 1.0:
        raise ValueError("recursion written for s <= 1")
    steps = int(math.ceil(-s)) if s <= 0 else 0
    s0 = s + steps
    if s0 == 0.0:
        g = float(sc.exp1(z))
    else:
        g = float(sc.gammaincc(s0, z)) * float(sc.gamma(s0))
    t = s0
    expz = math.exp(-z)
    for _ in range(steps):
        g = (g - z ** (t - 1.0) * expz) / (t - 1.0)
        t -= 1.0
    return g


def _em_tail(nu, f, l_start):
    """sum_{l > l_start} f^l / l^nu by Euler-Maclaurin (f in (0.99, 1])."""
    length = float(l_start)
    alpha = -math.log(f) if f < 1.0 else 0.0
    if alpha == 0.0:
        integral = length ** (1.0 - nu) / (nu - 1.0)
    else:
        integral = alpha ** (nu - 1.0) * _upper_gamma(1.0 - nu, alpha * length)
    damp = math.exp(-alpha * length)
    h = damp * length**-nu
    hp = -damp * (alpha * length**-nu + nu * length ** -(nu + 1.0))
    hppp = -damp * (
        alpha**3 * length**-nu
        + 3.0 * alpha**2 * nu * length ** -(nu + 1.0)
        + 3.0 * alpha * nu * (nu + 1.0) * length ** -(nu + 2.0)
        + nu * (nu + 1.0) * (nu + 2.0) * length ** -(nu + 3.0)
    )
    return integral - h / 2.0 - hp / 12.0 + hppp / 720.0


def _direct_series(nu, f, l_start, rel_tol, l_max):
    """sum_{l > l_start} f^l / l^nu by chunked summation (f <= 0.99)."""
    total = 0.0
    l0 = l_start + 1
    while l0 <= l_max:
        hi = min(l0 + _CHUNK - 1, l_max)
        l = np.arange(l0, hi + 1, dtype=float)
        terms = f**l / l**nu
        total += float(terms.sum())
        # remainder bound: l^-nu decreasing, geometric envelope in f
        bound = float(terms[-1]) * f / (1.0 - f)
        if bound <= rel_tol * abs(total) or bound == 0.0:
            return total
        l0 = hi + 1
    raise SeriesCapError(
        "polylog(%g, %g) did not converge within %d terms" % (nu, f, l_max)
    )


def _check_polylog_args(nu, f):
    if not nu > 0.0:
        raise DomainError("polylog order must be positive, got %r" % nu)
    if not 0.0 <= f <= 1.0:
        raise DomainError("polylog argument must lie in [0, 1], got %r" % f)
    if f == 1.0 and nu <= 1.0:
        raise DomainError("polylog(nu<=1, 1) diverges")


def polylog(nu, f, rel_tol=1e-12, l_max=10**6):
    """Bose-Einstein function g_nu(f) = sum_{l>=1} f^l / l^nu, f in [0, 1]."""
    if isinstance(f, Fugacity):
        f = f.value
    _check_polylog_args(nu, f)
    if f == 0.0:
        return 0.0
    return polylog_tail(nu, f, 0, rel_tol=rel_tol, l_max=l_max)


def polylog_tail(nu, f, l_start, rel_tol=1e-12, l_max=10**6):
    """Partial tail sum_{l > l_start} f^l / l^nu (l_start = 0 gives g_nu)."""
    if isinstance(f, Fugacity):
        f = f.value
    _check_polylog_args(nu, f)
    if f == 0.0:
        return 0.0
    if f <= _DIRECT_SERIES_MAX_F:
        return _direct_series(nu, f, l_start, rel_tol, l_max)
    if l_start >= _EM_HEAD_TERMS:
        return _em_tail(nu, f, l_start)
    l = np.arange(l_start + 1, _EM_HEAD_TERMS + 1, dtype=float)
    head = float((f**l / l**nu).sum())
    return head + _em_tail(nu, f, _EM_HEAD_TERMS)


def _w_two_term(y):
    return (1j / (SQRT_PI * y)) * (1.0 + 0.5 / (y * y))


def faddeeva_w(y, mode="auto", switch_radius=10.0):
    """Faddeeva function w(y) = exp(-y^2)(1 + erf(iy)).

    mode "exact" evaluates everywhere; "asymptotic" returns the two-term
    expansion i/(sqrt(pi) y) (1 + 1/(2 y^2)), valid for |y| >= 2, Im y > 0;
    "auto" uses the expansion once |y| >= switch_radius.
    """
    arr = np.asarray(y, dtype=complex)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    if mode == "exact":
        out = sc.wofz(a)
    elif mode == "asymptotic":
        if np.any(np.abs(a) < 2.0):
            raise DomainError("two-term w expansion requires |y| >= 2")
        if np.any(a.imag <= 0.0):
            raise DomainError("w expansion requires Im y > 0")
        out = _w_two_term(a)
    elif mode == "auto":
        out = np.empty_like(a)
        big = np.abs(a) >= switch_radius
        if big.any():
            if np.any(a[big].imag <= 0.0):
                raise DomainError("w expansion requires Im y > 0")
            out[big] = _w_two_term(a[big])
        small = ~big
        if small.any():
            out[small] = sc.wofz(a[small])
    else:
        raise ValueError("mode must be 'exact', 'asymptotic' or 'auto'")
    return complex(out[0]) if scalar else out.reshape(arr.shape)


def faddeeva_w_prime(y):
    """dw/dy = -2 y w(y) + 2i/sqrt(pi), stabilized at large |y|.

    Beyond |y| = 35 the identity is evaluated through the expansion
    -(i/sqrt(pi)) (y^-2 + 3/2 y^-4 + 15/4 y^-6 + 105/8 y^-8 + 945/16 y^-10)
    to avoid the cancellation of the two O(1) terms.
    """
    arr = np.asarray(y, dtype=complex)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    out = np.empty_like(a)
    big = np.abs(a) >= _W_PRIME_ASYMPTOTIC_RADIUS
    if big.any():
        y2 = 1.0 / (a[big] * a[big])
        out[big] = (-1j / SQRT_PI) * y2 * (
            1.0 + y2 * (1.5 + y2 * (3.75 + y2 * (13.125 + y2 * 59.0625)))
        )
    small = ~big
    if small.any():
        out[small] = -2.0 * a[small] * sc.wofz(a[small]) + 2j / SQRT_PI
    return complex(out[0]) if scalar else out.reshape(arr.shape)


def fugacity_from_temperature(geometry_kind, t_over_tc, tol=1e-13):
    """Invert g_{3/2}(f) = g_{3/2}(1) (Tc/T)^{3/2} (box) or
    g_3(f) = g_3(1) (Tc/T)^3 (trap) for the fugacity; f = 1 below Tc.

    Bisection with a residual stopping rule |g - target| <= tol*target;
    if the bracket collapses first (the box relation has infinite slope at
    f = 1) the closest endpoint/iterate wins, so T -> Tc+ gives f = 1.0.
    """
    if geometry_kind not in ("box", "trap"):
        raise ValueError("geometry_kind must be 'box' or 'trap', got %r" % geometry_kind)
    if not t_over_tc > 0.0:
        raise DomainError("t_over_tc must be positive, got %r" % t_over_tc)
    if t_over_tc <= 1.0:
        return Fugacity(1.0)
    nu = 1.5 if geometry_kind == "box" else 3.0
    g_at_one = ZETA_3_2 if geometry_kind == "box" else ZETA_3
    target = g_at_one * t_over_tc**-nu

    lo, hi = 0.0, 1.0
    best_f, best_err = 1.0, abs(g_at_one - target)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g = polylog(nu, mid)
        err = abs(g - target)
        if err < best_err:
            best_f, best_err = mid, err
        if err <= tol * target:
            return Fugacity(mid)
        if g < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16:
            break
    return Fugacity(best_f)
