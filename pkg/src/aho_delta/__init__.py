"""Three-scale delta expansion for the ground state of the quartic anharmonic oscillator."""

from aho_delta.errors import (
    ConvergenceError,
    DomainError,
    NoStationaryPointError,
    PrecisionExhaustedError,
)
from aho_delta.oscillator import AnsatzScales, OscillatorParams, ansatz_scales, reduce_units, validate
from aho_delta.polynomial import Polynomial
from aho_delta.expansion import (
    K_MAX,
    DeltaExpansion,
    expand,
    next_order,
    order_zero,
    residual_check,
    third_order_closed_form,
)
from aho_delta.pms import (
    Candidate,
    PMSResult,
    StrongCouplingResult,
    energy_curve,
    optimize,
    select_pms,
    stationary_points,
    strong_coupling_alpha0,
)
from aho_delta.reference import ground_energy, ground_wavefunction
from aho_delta.wavefunction import WaveProfile, assemble, compare, normalize

__version__ = "0.1.0"

__all__ = [
    "AnsatzScales",
    "Candidate",
    "ConvergenceError",
    "DeltaExpansion",
    "DomainError",
    "K_MAX",
    "NoStationaryPointError",
    "OscillatorParams",
    "PMSResult",
    "Polynomial",
    "PrecisionExhaustedError",
    "StrongCouplingResult",
    "WaveProfile",
    "ansatz_scales",
    "assemble",
    "compare",
    "energy_curve",
    "expand",
    "ground_energy",
    "ground_wavefunction",
    "next_order",
    "normalize",
    "optimize",
    "order_zero",
    "reduce_units",
    "residual_check",
    "select_pms",
    "stationary_points",
    "strong_coupling_alpha0",
    "third_order_closed_form",
    "validate",
]
