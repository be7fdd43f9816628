"""Oscillator parameters, unit reduction and the exponential envelope coefficients.

The Hamiltonian is ``p^2/(2m) + m omega^2 x^2/2 + mu x^4/4``.  The ground
state is written as ``exp(-gamma |x|^3 - beta x^2) * xi(x)`` where the cubic
term carries the exact large-|x| decay and ``beta`` belongs to a harmonic
oscillator of the shifted frequency ``omega_tilde = sqrt(omega^2 + Omega^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from aho_delta.errors import DomainError


@dataclass(frozen=True)
class OscillatorParams:
    hbar: float = 1.0
    mass: float = 1.0
    omega: float = 1.0
    mu: float = 0.0

    @property
    def is_reduced(self) -> bool:
        return self.hbar == 1.0 and self.mass == 1.0


@dataclass(frozen=True)
class AnsatzScales:
    gamma: float
    beta: float
    omega_artificial: float
    omega_tilde: float


def validate(params: OscillatorParams) -> OscillatorParams:
    """Return ``params`` unchanged, or raise :class:`DomainError` naming the broken invariant."""
    for name in ("hbar", "mass", "omega", "mu"):
        value = getattr(params, name)
        if not isinstance(value, (int, float)) or not math.isfinite(value):
            raise DomainError(f"{name} must be a finite real number, got {value!r}")
    if params.hbar <= 0:
        raise DomainError(f"hbar must be > 0, got {params.hbar}")
    if params.mass <= 0:
        raise DomainError(f"mass must be > 0, got {params.mass}")
    if params.omega < 0:
        raise DomainError(f"omega must be >= 0, got {params.omega}")
    if params.mu < 0:
        raise DomainError(f"mu must be >= 0, got {params.mu}")
    if params.mu == 0 and params.omega == 0:
        raise DomainError("mu = omega = 0 is a free particle with no bound state")
    return params


def ansatz_scales(params: OscillatorParams, omega_artificial: float) -> AnsatzScales:
    """Envelope coefficients for artificial frequency ``omega_artificial`` (Omega >= 0)."""
    validate(params)
    if not math.isfinite(omega_artificial) or omega_artificial < 0:
        raise DomainError(f"artificial frequency must be finite and >= 0, got {omega_artificial}")
    hbar, m = params.hbar, params.mass
    gamma = math.sqrt(params.mu * m / 2.0) / (3.0 * hbar)
    if omega_artificial == 0.0:
        omega_tilde = float(params.omega)
    else:
        omega_tilde = math.hypot(params.omega, omega_artificial)
    beta = m * omega_tilde / (2.0 * hbar)
    return AnsatzScales(gamma, beta, float(omega_artificial), omega_tilde)


def reduce_units(params: OscillatorParams) -> tuple[OscillatorParams, float, float]:
    """Map to hbar = m = 1 units.

    Returns ``(reduced, energy_scale, length_scale)``.  For omega > 0 the
    reduced problem has omega = 1; for the pure quartic case it has mu = 4,
    so its ground energy is the strong-coupling coefficient directly.
    Physical energies are reduced energies times ``energy_scale``; physical
    lengths are reduced lengths times ``length_scale``.
    """
    validate(params)
    hbar, m, w, mu = params.hbar, params.mass, params.omega, params.mu
    if w > 0:
        reduced = OscillatorParams(1.0, 1.0, 1.0, mu * hbar / (m * m * w**3))
        return reduced, hbar * w, math.sqrt(hbar / (m * w))
    energy_scale = (hbar**4 * mu / (4.0 * m * m)) ** (1.0 / 3.0)
    length_scale = (4.0 * hbar * hbar / (m * mu)) ** (1.0 / 6.0)
    return OscillatorParams(1.0, 1.0, 0.0, 4.0), energy_scale, length_scale
