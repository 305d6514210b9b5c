"""Semiclassical response of the harmonically trapped ideal Bose gas.

Local susceptibility chi(r, z), per-ray probe delays Delta_t(r) through the
cloud, uniform pinhole averages over a circular section of radius R, cloud
sizes, and the experimental group velocity v_g = D_z / <Delta_t>.
All closed forms are first order in (A/zeta)^2 (Doppler width over
generalized linewidth), the regime of the underlying expansion.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .box_gas import doppler_width_param
from .eit_core import ComplexResponse, zeta
from .errors import DomainError, ValidityWarning
from .specfun import ZETA_3, Fugacity, fugacity_from_temperature, polylog
from .units_params import (
    C_M_S,
    HBAR_J_S,
    KB_J_PER_K,
    TWO_PI,
    HarmonicTrap,
    chi0,
    probe_omega,
    recoil_frequency,
)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


@dataclass(frozen=True)
class TrapThermo:
    """Thermodynamic state of the trapped gas at one temperature."""

    t_c_k: float
    fugacity: Fugacity
    condensate_fraction: float
    d_z_m: float
    d_r_m: float
    a0_r_m: float
    a0_z_m: float


@dataclass(frozen=True)
class PinholeSpec:
    """Illuminated circular section: fixed radius or the thermal radius
    R = sqrt(K_B T / m nu_r^2); path_half_length_m = inf selects the
    closed-form infinite path."""

    radius_mode: str
    radius_m: float = None
    path_half_length_m: float = math.inf

    def __post_init__(self):
        if self.radius_mode not in ("fixed", "thermal"):
            raise ValueError("radius_mode must be 'fixed' or 'thermal', got %r" % self.radius_mode)
        if self.radius_mode == "fixed" and not (self.radius_m is not None and self.radius_m > 0.0):
            raise DomainError("fixed pinhole requires radius_m > 0")
        if not self.path_half_length_m > 0.0:
            raise DomainError("path_half_length_m must be positive")


@dataclass(frozen=True)
class DelayResult:
    """Pinhole-averaged delay, cloud size, and their ratio v_g = D/<Delta t>."""

    mean_delay_s: float
    cloud_size_m: float
    group_velocity_m_s: float
    branch: str


def tc_trap(species, trap):
    """K_B Tc = hbar (nu_z nu_r^2)^{1/3} (N / g_3(1))^{1/3}."""
    nu_bar = (trap.nu_z_rad_s * trap.nu_r_rad_s**2) ** (1.0 / 3.0)
    return HBAR_J_S * nu_bar * (trap.atom_count / ZETA_3) ** (1.0 / 3.0) / KB_J_PER_K


def ground_state_size(species, nu):
    """Oscillator ground-state size a_0 = sqrt(hbar / m nu)."""
    return math.sqrt(HBAR_J_S / (species.mass_kg * nu))


def thermal_radius(species, trap, temperature):
    """Pinhole radius of the thermal mode, R = sqrt(K_B T / m nu_r^2)."""
    if not temperature > 0.0:
        raise DomainError("thermal pinhole radius undefined at T = %r" % temperature)
    return math.sqrt(KB_J_PER_K * temperature / (species.mass_kg * trap.nu_r_rad_s**2))


def _require_trap(config):
    if not isinstance(config.geometry, HarmonicTrap):
        raise ValueError("operation requires a harmonic-trap geometry")


def cloud_size(config, temperature):
    """Axial cloud size D_z: sqrt(2 K_B T / m nu_z^2) above Tc, and
    sqrt(2) [ (T/Tc)^3 R_+^2 + (1-(T/Tc)^3) a_0z^2 ]^{1/2} below, with
    R_+^2 = K_B T/(m nu_z^2) so the two branches meet at Tc."""
    _require_trap(config)
    if temperature < 0.0:
        raise DomainError("temperature must be nonnegative, got %r" % temperature)
    trap = config.geometry
    species = config.species
    t_c = tc_trap(species, trap)
    r_plus_sq = KB_J_PER_K * temperature / (species.mass_kg * trap.nu_z_rad_s**2)
    if temperature >= t_c:
        return math.sqrt(2.0 * r_plus_sq)
    theta3 = (temperature / t_c) ** 3
    a0z = ground_state_size(species, trap.nu_z_rad_s)
    return math.sqrt(2.0 * (theta3 * r_plus_sq + (1.0 - theta3) * a0z**2))


def trap_thermo(config, temperature):
    """TrapThermo at the given temperature (T = 0 allowed: pure condensate)."""
    _require_trap(config)
    if temperature < 0.0:
        raise DomainError("temperature must be nonnegative, got %r" % temperature)
    trap = config.geometry
    species = config.species
    t_c = tc_trap(species, trap)
    theta = temperature / t_c
    if temperature == 0.0:
        fugacity = Fugacity(1.0)
    else:
        fugacity = fugacity_from_temperature("trap", theta, tol=config.numerics.bisection_tol)
        nu_max = max(trap.nu_r_rad_s, trap.nu_z_rad_s)
        if KB_J_PER_K * temperature < 10.0 * HBAR_J_S * nu_max:
            warnings.warn(
                "semiclassical statistics assume K_B T >> hbar nu "
                "(K_B T / hbar nu_max = %.3g)" % (KB_J_PER_K * temperature / (HBAR_J_S * nu_max)),
                ValidityWarning,
                stacklevel=2,
            )
    return TrapThermo(
        t_c_k=t_c,
        fugacity=fugacity,
        condensate_fraction=max(0.0, 1.0 - theta**3),
        d_z_m=cloud_size(config, temperature),
        d_r_m=math.sqrt(2.0 * KB_J_PER_K * temperature / (species.mass_kg * trap.nu_r_rad_s**2)),
        a0_r_m=ground_state_size(species, trap.nu_r_rad_s),
        a0_z_m=ground_state_size(species, trap.nu_z_rad_s),
    )


class _LocalResponse:
    """Per-(config, T) evaluator of the local response; hoists the fugacity
    solve, zeta, and all temperature-only factors out of quadrature loops."""

    def __init__(self, config, temperature):
        self.config = config
        self.temperature = temperature
        self.thermo = trap_thermo(config, temperature)
        self.zv = zeta(config.fields, recoil_frequency(config.species))
        self.x0 = chi0(config.species)
        self.omega = probe_omega(config.species)
        self.rel_tol = config.numerics.series_rel_tol
        species = config.species
        trap = config.geometry
        self.mass = species.mass_kg
        self.nu_r = trap.nu_r_rad_s
        self.nu_z = trap.nu_z_rad_s
        self.atom_count = trap.atom_count
        if temperature > 0.0:
            self.beta = 1.0 / (KB_J_PER_K * temperature)
            self.lam = (self.mass * KB_J_PER_K * temperature / (TWO_PI * HBAR_J_S**2)) ** 1.5
            self.a_param = doppler_width_param(species, config.fields, temperature)

    def chi(self, r, z):
        zval = self.zv.value
        dz_domega = self.zv.d_domega
        chi = 0.0 + 0.0j
        dchi = 0.0 + 0.0j
        if self.temperature > 0.0:
            potential = 0.5 * self.mass * (self.nu_r**2 * r**2 + self.nu_z**2 * z**2)
            u = self.thermo.fugacity.value * math.exp(-self.beta * potential)
            g32 = polylog(1.5, u, rel_tol=self.rel_tol)
            g52 = polylog(2.5, u, rel_tol=self.rel_tol)
            a_sq = self.a_param**2
            chi += -self.x0 * self.lam * (g32 / zval + 0.5 * g52 * a_sq / zval**3)
            dchi += self.x0 * self.lam * dz_domega * (g32 / zval**2 + 1.5 * g52 * a_sq / zval**4)
        if self.thermo.condensate_fraction > 0.0:
            n0 = (
                self.atom_count
                * self.thermo.condensate_fraction
                * math.exp(-(r / self.thermo.a0_r_m) ** 2 - (z / self.thermo.a0_z_m) ** 2)
                / (math.pi**1.5 * self.thermo.a0_r_m**2 * self.thermo.a0_z_m)
            )
            chi += -self.x0 * n0 / zval
            dchi += self.x0 * n0 * dz_domega / zval**2
        return ComplexResponse(chi=chi, dchi_domega=dchi)

    def inverse_velocity_excess(self, r, z):
        """1/v_g(r, z) - 1/c = (2 pi Re chi + 2 pi omega Re dchi/domega)/c."""
        resp = self.chi(r, z)
        return TWO_PI * (resp.chi.real + self.omega * resp.dchi_domega.real) / C_M_S

    def delay_at_radius(self, r, path_half_length_m):
        if not math.isinf(path_half_length_m):
            value, _ = integrate.quad(
                lambda zz: self.inverse_velocity_excess(r, zz),
                0.0,
                path_half_length_m,
                epsabs=0.0,
                epsrel=self.config.numerics.quad_rel_tol,
                limit=200,
            )
            return 2.0 * value
        zval = self.zv.value
        delay = 0.0
        if self.temperature > 0.0:
            y_r = self.thermo.fugacity.value * math.exp(
                -0.5 * self.beta * self.mass * self.nu_r**2 * r**2
            )
            g2 = polylog(2.0, y_r, rel_tol=self.rel_tol)
            g3 = polylog(3.0, y_r, rel_tol=self.rel_tol)
            kernel = self.zv.d_domega * (g2 / zval**2 + 1.5 * self.a_param**2 * g3 / zval**4)
            delay += (
                (self.omega / C_M_S)
                * self.mass
                * (KB_J_PER_K * self.temperature) ** 2
                / (HBAR_J_S**3 * self.nu_z)
                * self.x0
                * kernel.real
            )
        if self.thermo.condensate_fraction > 0.0:
            column = (
                self.atom_count
                * self.thermo.condensate_fraction
                * math.exp(-(r / self.thermo.a0_r_m) ** 2)
                / (math.pi * self.thermo.a0_r_m**2)
            )
            delay += TWO_PI * (self.omega / C_M_S) * self.x0 * (self.zv.d_domega / zval**2).real * column
        return delay


def chi_trap_local(config, temperature, r):
    """Susceptibility in the plane z = 0 at radial distance r:
    -(chi0/zeta)(m K_B T/2 pi hbar^2)^{3/2} [g_{3/2}(f e^{-beta V}) +
    g_{5/2}(f e^{-beta V}) A^2/(2 zeta^2)] plus the condensate term below Tc."""
    _require_trap(config)
    if r < 0.0:
        raise DomainError("radial position must be nonnegative, got %r" % r)
    return _LocalResponse(config, temperature).chi(r, 0.0)


def delay_at_radius(config, temperature, r, path_half_length_m=math.inf):
    """Probe delay accumulated along the line of sight at radius r (s).

    Infinite path: the closed form
    (omega/c)(m (K_B T)^2 / hbar^3 nu_z) chi0 Re{zeta'(omega)(g_2(y_r)/zeta^2
    + (3/2) A^2 g_3(y_r)/zeta^4)}, y_r = f e^{-beta m nu_r^2 r^2/2}, plus the
    condensate line integral below Tc.  Finite path: adaptive z-quadrature of
    1/v_g - 1/c (the L/c vacuum term is subtracted by construction).
    """
    _require_trap(config)
    if r < 0.0:
        raise DomainError("radial position must be nonnegative, got %r" % r)
    if not math.isinf(path_half_length_m) and not path_half_length_m > 0.0:
        raise DomainError("path_half_length_m must be positive")
    return _LocalResponse(config, temperature).delay_at_radius(r, path_half_length_m)


def _condensate_section_factor(thermo, radius, path_half_length_m, fc_mode):
    """F_C: paper mode 2/(pi R^2); exact mode the closed Gaussian integral
    (1/(pi R^2))(1 - e^{-R^2/a0r^2}) erf(L/a0z)."""
    if fc_mode == "paper":
        return 2.0 / (math.pi * radius**2)
    if fc_mode == "exact":
        erf_term = 1.0 if math.isinf(path_half_length_m) else math.erf(path_half_length_m / thermo.a0_z_m)
        return (1.0 - math.exp(-(radius / thermo.a0_r_m) ** 2)) * erf_term / (math.pi * radius**2)
    raise ValueError("fc_mode must be 'paper' or 'exact', got %r" % fc_mode)


def mean_delay(config, temperature, pinhole, fc_mode="paper"):
    """Uniform average of delay_at_radius over the section of radius R:
    <Delta t> = (1/pi R^2) int_0^R 2 pi r Delta_t(r) dr, as a DelayResult.

    Infinite path, thermal part: the closed form
    2 pi (omega/c) chi0 ((K_B T)^3/(hbar^3 nu_z nu_r^2)) (1/(pi R^2))
    Re{zeta'(omega)([g_3(f)-g_3(f e^{-c})]/zeta^2
    + (3/2)(A^2/zeta^4)[g_4(f)-g_4(f e^{-c})])}, c = beta m nu_r^2 R^2/2;
    below Tc f = 1 plus the condensate term with the selected F_C mode.
    Finite path: 64-point Gauss-Legendre radial average of the z-quadrature
    delays (vacuum-subtracted; fc_mode does not apply).
    """
    _require_trap(config)
    if temperature < 0.0:
        raise DomainError("temperature must be nonnegative, got %r" % temperature)
    if fc_mode not in ("paper", "exact"):
        raise ValueError("fc_mode must be 'paper' or 'exact', got %r" % fc_mode)
    local = _LocalResponse(config, temperature)
    thermo = local.thermo
    species = config.species
    trap = config.geometry
    if pinhole.radius_mode == "thermal":
        radius = thermal_radius(species, trap, temperature)
    else:
        radius = pinhole.radius_m
    half_length = pinhole.path_half_length_m

    if not math.isinf(half_length):
        # average = (2/R^2) int_0^R r dt(r) dr on a fixed Gauss-Legendre rule
        total = 0.0
        for xi, wi in zip(_GL_NODES, _GL_WEIGHTS):
            ri = 0.5 * radius * (xi + 1.0)
            total += wi * ri * local.delay_at_radius(ri, half_length)
        delay = total / radius
    else:
        zval = local.zv.value
        delay = 0.0
        if temperature > 0.0:
            f = thermo.fugacity.value
            shrink = math.exp(-0.5 * local.beta * species.mass_kg * trap.nu_r_rad_s**2 * radius**2)
            rel_tol = local.rel_tol
            g3_diff = polylog(3.0, f, rel_tol=rel_tol) - polylog(3.0, f * shrink, rel_tol=rel_tol)
            g4_diff = polylog(4.0, f, rel_tol=rel_tol) - polylog(4.0, f * shrink, rel_tol=rel_tol)
            kernel = local.zv.d_domega * (
                g3_diff / zval**2 + 1.5 * local.a_param**2 * g4_diff / zval**4
            )
            delay += (
                TWO_PI
                * (local.omega / C_M_S)
                * local.x0
                * (KB_J_PER_K * temperature) ** 3
                / (HBAR_J_S**3 * trap.nu_z_rad_s * trap.nu_r_rad_s**2)
                / (math.pi * radius**2)
                * kernel.real
            )
        if thermo.condensate_fraction > 0.0:
            section = _condensate_section_factor(thermo, radius, half_length, fc_mode)
            delay += (
                TWO_PI
                * (local.omega / C_M_S)
                * local.x0
                * (local.zv.d_domega / zval**2).real
                * trap.atom_count
                * thermo.condensate_fraction
                * section
            )

    d_z = cloud_size(config, temperature)
    return DelayResult(
        mean_delay_s=delay,
        cloud_size_m=d_z,
        group_velocity_m_s=d_z / delay,
        branch="above" if temperature > thermo.t_c_k else "below",
    )


def vg_trap(config, temperature, pinhole, fc_mode="paper"):
    """Experimental group velocity v_g = D_z / <Delta t> (m/s)."""
    return mean_delay(config, temperature, pinhole, fc_mode=fc_mode).group_velocity_m_s
