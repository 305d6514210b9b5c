"""Slow light in an ultracold ideal Bose gas.

EIT susceptibility of a weak probe in a three-level Lambda medium, quantum
statistics of the ideal gas in a box or a harmonic trap, probe delays and
group velocities across the condensation transition, and zero-temperature
ideal-gas vs Thomas-Fermi estimates.
"""

from .box_gas import (
    BoxThermo,
    box_thermo,
    chi_box_asymptotic,
    chi_box_exact,
    doppler_width_param,
    tc_box,
    thermal_response_series,
    thermal_series_prefactor,
    vg_box,
)
from .eit_core import (
    BlochSteadyState,
    ComplexResponse,
    ZetaValue,
    bloch_steady_oracle,
    coherence_steady_state,
    group_velocity_from_response,
    transparency_limit_response,
    zeta,
)
from .errors import (
    ConfigError,
    DomainError,
    PhysicsError,
    PoleError,
    SeriesCapError,
    UnphysicalDispersionError,
    UsageError,
    ValidityWarning,
)
from .specfun import (
    Fugacity,
    faddeeva_w,
    faddeeva_w_prime,
    fugacity_from_temperature,
    polylog,
    polylog_tail,
)
from .tf_model import (
    TfGeometry,
    hau_group_velocity,
    ideal_t0_density,
    tf_geometry,
    tf_t0_density,
)
from .trap_gas import (
    DelayResult,
    PinholeSpec,
    TrapThermo,
    chi_trap_local,
    cloud_size,
    delay_at_radius,
    ground_state_size,
    mean_delay,
    tc_trap,
    thermal_radius,
    trap_thermo,
    vg_trap,
)
from .units_params import (
    C_M_S,
    HBAR_J_S,
    KB_J_PER_K,
    AtomSpecies,
    Box,
    ExperimentConfig,
    FieldParams,
    HarmonicTrap,
    NumericsConfig,
    chi0,
    dipole_moment_sq,
    load_config,
    probe_omega,
    recoil_frequency,
    serialize_config,
)

__version__ = "0.1.0"

__all__ = [
    "AtomSpecies",
    "BlochSteadyState",
    "Box",
    "BoxThermo",
    "C_M_S",
    "ComplexResponse",
    "ConfigError",
    "DelayResult",
    "DomainError",
    "ExperimentConfig",
    "FieldParams",
    "Fugacity",
    "HBAR_J_S",
    "HarmonicTrap",
    "KB_J_PER_K",
    "NumericsConfig",
    "PhysicsError",
    "PinholeSpec",
    "PoleError",
    "SeriesCapError",
    "TfGeometry",
    "TrapThermo",
    "UnphysicalDispersionError",
    "UsageError",
    "ValidityWarning",
    "ZetaValue",
    "bloch_steady_oracle",
    "box_thermo",
    "chi0",
    "chi_box_asymptotic",
    "chi_box_exact",
    "chi_trap_local",
    "cloud_size",
    "coherence_steady_state",
    "delay_at_radius",
    "dipole_moment_sq",
    "doppler_width_param",
    "faddeeva_w",
    "faddeeva_w_prime",
    "fugacity_from_temperature",
    "ground_state_size",
    "group_velocity_from_response",
    "hau_group_velocity",
    "ideal_t0_density",
    "load_config",
    "mean_delay",
    "polylog",
    "polylog_tail",
    "probe_omega",
    "recoil_frequency",
    "serialize_config",
    "tc_box",
    "tc_trap",
    "tf_geometry",
    "tf_t0_density",
    "thermal_radius",
    "thermal_response_series",
    "thermal_series_prefactor",
    "transparency_limit_response",
    "trap_thermo",
    "vg_box",
    "vg_trap",
    "zeta",
]
