"""Susceptibility and group velocity of the ideal Bose gas in a box.

Above Tc the Doppler-averaged response of the thermal cloud is the series
over l of f^l/l * w(sqrt(l) zeta / A), with A = sqrt(2 K_B T/m) k_g/Gamma_ge
the thermal Doppler width in linewidth units; below Tc the f = 1 series
plus the zero-momentum condensate term -(chi0/zeta) n (1 - (T/Tc)^{3/2}).
"""

import math
from dataclasses import dataclass

import numpy as np

from .eit_core import ComplexResponse, group_velocity_from_response, zeta
from .errors import DomainError, SeriesCapError
from .specfun import (
    SQRT_PI,
    ZETA_3_2,
    Fugacity,
    faddeeva_w,
    faddeeva_w_prime,
    fugacity_from_temperature,
    polylog,
    polylog_tail,
)
from .units_params import HBAR_J_S, KB_J_PER_K, Box, chi0, probe_omega, recoil_frequency

_SERIES_CHUNK = 512
_SERIES_HEAD_MIN = 5000
_SERIES_CAP = 10**6
# the 4-term large-|y| tail is ~1e-13 accurate once |y| = sqrt(l)|zeta|/A >= 70
_TAIL_MIN_ABS_Y = 70.0
# uniform bounds on |w|, |dw/dy| in the upper half plane (for remainder bounds)
_W_BOUND = 1.0
_WPRIME_BOUND = 2.0


@dataclass(frozen=True)
class BoxThermo:
    """Thermodynamic state of the box gas at one temperature."""

    t_c_k: float
    a_param: float
    a_c: float
    fugacity: Fugacity
    condensate_fraction: float


def tc_box(species, number_density):
    """Condensation temperature Tc = (2 pi hbar^2 / m K_B)(n/g_{3/2}(1))^{2/3}."""
    if not number_density > 0.0:
        raise DomainError("number density must be positive, got %r" % number_density)
    return (
        2.0
        * math.pi
        * HBAR_J_S**2
        / (species.mass_kg * KB_J_PER_K)
        * (number_density / ZETA_3_2) ** (2.0 / 3.0)
    )


def doppler_width_param(species, fields, temperature):
    """A = sqrt(2 K_B T / m) k_g / Gamma_ge (thermal Doppler width over linewidth)."""
    speed = math.sqrt(2.0 * KB_J_PER_K * temperature / species.mass_kg)
    return speed * fields.k_g_per_m / fields.gamma_ge_rad_s


def box_thermo(config, temperature):
    """BoxThermo at the given temperature (T = 0 allowed: pure condensate)."""
    if not isinstance(config.geometry, Box):
        raise ValueError("box_thermo requires a box geometry")
    if temperature < 0.0:
        raise DomainError("temperature must be nonnegative, got %r" % temperature)
    n = config.geometry.number_density_per_m3
    t_c = tc_box(config.species, n)
    theta = temperature / t_c
    if temperature == 0.0:
        fugacity = Fugacity(1.0)
    else:
        fugacity = fugacity_from_temperature("box", theta, tol=config.numerics.bisection_tol)
    a_c = (
        2.0
        * (config.fields.k_g_per_m / config.fields.gamma_ge_rad_s)
        * (HBAR_J_S / config.species.mass_kg)
        * (n / ZETA_3_2) ** (1.0 / 3.0)
    )
    return BoxThermo(
        t_c_k=t_c,
        a_param=doppler_width_param(config.species, config.fields, temperature),
        a_c=a_c,
        fugacity=fugacity,
        condensate_fraction=max(0.0, 1.0 - theta**1.5),
    )


def thermal_response_series(fugacity_value, zeta_value, a_param, rel_tol):
    """Doppler series of one thermal cloud: returns (S, S') with
    S = sum_l u^l/l w(sqrt(l) zeta/A) and S' = sum_l u^l/sqrt(l) w'(sqrt(l) zeta/A).

    Explicit chunks with exact w up to at least 5000 terms, then polylog
    tails of the large-|y| expansion; geometric early stop for u < 1.
    """
    u = fugacity_value
    z_over_a = zeta_value / a_param
    abs_ratio = abs(z_over_a)
    s_w = 0.0 + 0.0j
    s_wp = 0.0 + 0.0j
    l0 = 1
    while l0 <= _SERIES_CAP:
        hi = min(l0 + _SERIES_CHUNK - 1, _SERIES_CAP)
        l = np.arange(l0, hi + 1, dtype=float)
        y = np.sqrt(l) * z_over_a
        ul = u**l
        s_w += complex((ul / l * faddeeva_w(y, mode="exact")).sum())
        s_wp += complex((ul / np.sqrt(l) * faddeeva_w_prime(y)).sum())
        if u < 1.0:
            # remainder bounds from |w| <= 1, |w'| <= 2 on the upper half plane
            geom = u ** (hi + 1) / (1.0 - u)
            if (
                geom * _W_BOUND / (hi + 1) <= rel_tol * abs(s_w)
                and geom * _WPRIME_BOUND / math.sqrt(hi + 1) <= rel_tol * abs(s_wp)
            ):
                return s_w, s_wp
        if hi >= _SERIES_HEAD_MIN and math.sqrt(hi + 1) * abs_ratio >= _TAIL_MIN_ABS_Y:
            r = 1.0 / z_over_a  # A/zeta
            g32 = polylog_tail(1.5, u, hi, rel_tol=rel_tol)
            g52 = polylog_tail(2.5, u, hi, rel_tol=rel_tol)
            g72 = polylog_tail(3.5, u, hi, rel_tol=rel_tol)
            g92 = polylog_tail(4.5, u, hi, rel_tol=rel_tol)
            s_w += (1j / SQRT_PI) * (
                r * g32 + 0.5 * r**3 * g52 + 0.75 * r**5 * g72 + 1.875 * r**7 * g92
            )
            s_wp += (-1j / SQRT_PI) * (
                r**2 * g32 + 1.5 * r**4 * g52 + 3.75 * r**6 * g72 + 13.125 * r**8 * g92
            )
            return s_w, s_wp
        l0 = hi + 1
    raise SeriesCapError(
        "Doppler series not converged within %d terms (fugacity %.6g, |zeta/A| = %.3g)"
        % (_SERIES_CAP, u, abs_ratio)
    )


def thermal_series_prefactor(species, temperature, a_param):
    """P = i chi0 (2 m K_B T / hbar^2)^{3/2} / (8 pi A); chi_thermal = P*S."""
    return (
        1j
        * chi0(species)
        * (2.0 * species.mass_kg * KB_J_PER_K * temperature / HBAR_J_S**2) ** 1.5
        / (8.0 * math.pi * a_param)
    )


def _condensate_response(species, zeta_value, condensate_density):
    chi_c = -chi0(species) * condensate_density / zeta_value.value
    dchi_c = chi0(species) * condensate_density * zeta_value.d_domega / zeta_value.value**2
    return chi_c, dchi_c


def chi_box_exact(config, temperature):
    """Series susceptibility of the box gas (thermal series + condensate)."""
    thermo = box_thermo(config, temperature)
    zv = zeta(config.fields, recoil_frequency(config.species))
    n = config.geometry.number_density_per_m3
    chi = 0.0 + 0.0j
    dchi = 0.0 + 0.0j
    if temperature > 0.0:
        pref = thermal_series_prefactor(config.species, temperature, thermo.a_param)
        s_w, s_wp = thermal_response_series(
            thermo.fugacity.value, zv.value, thermo.a_param, config.numerics.series_rel_tol
        )
        chi += pref * s_w
        dchi += pref * (zv.d_domega / thermo.a_param) * s_wp
    if thermo.condensate_fraction > 0.0:
        chi_c, dchi_c = _condensate_response(config.species, zv, n * thermo.condensate_fraction)
        chi += chi_c
        dchi += dchi_c
    return ComplexResponse(chi=chi, dchi_domega=dchi)


def chi_box_asymptotic(config, temperature):
    """Closed-form expansion of chi_box_exact in powers of (A/zeta)^2:
    chi = -(n chi0/zeta)[1 + (T/Tc)^{3/2} (g_{5/2}(f)/(2 g_{3/2}(1))) (A/zeta)^2],
    with f = 1 below Tc (condensate term already folded in)."""
    thermo = box_thermo(config, temperature)
    zv = zeta(config.fields, recoil_frequency(config.species))
    n = config.geometry.number_density_per_m3
    x0 = chi0(config.species)
    a = thermo.a_param
    if a > 0.0:
        ratio = abs(zv.value) / a
        if ratio < 5.0:
            raise DomainError(
                "asymptotic expansion requires |zeta/A| >= 5, got |zeta/A| = %.3g" % ratio
            )
    theta = temperature / thermo.t_c_k
    correction = (
        theta**1.5
        * polylog(2.5, thermo.fugacity.value, rel_tol=config.numerics.series_rel_tol)
        / (2.0 * ZETA_3_2)
        * a**2
    )
    chi = -n * x0 * (1.0 / zv.value + correction / zv.value**3)
    dchi = n * x0 * (1.0 / zv.value**2 + 3.0 * correction / zv.value**4) * zv.d_domega
    return ComplexResponse(chi=chi, dchi_domega=dchi)


def vg_box(config, temperature, mode="exact"):
    """Group velocity of the probe in the box gas (m/s)."""
    if mode == "exact":
        resp = chi_box_exact(config, temperature)
    elif mode == "asymptotic":
        resp = chi_box_asymptotic(config, temperature)
    else:
        raise ValueError("mode must be 'exact' or 'asymptotic', got %r" % mode)
    return group_velocity_from_response(resp, probe_omega(config.species))
