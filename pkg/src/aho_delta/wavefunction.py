"""Ground-state wave function from the three-scale ansatz.

``psi(x) = exp(-gamma |x|^3 - beta x^2) * sum_k xi_k(|x|)``, built on the
half line and mirrored, then normalized and compared with the
finite-difference reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from aho_delta.errors import DomainError
from aho_delta.expansion import DeltaExpansion
from aho_delta.oscillator import AnsatzScales

QUADRATURE = "trapezoid"


@dataclass(frozen=True)
class WaveProfile:
    grid: np.ndarray
    values: np.ndarray
    normalized: bool = False
    norm_quadrature: str = QUADRATURE


def _check_symmetric(grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 3:
        raise DomainError("grid must be a 1-D array with at least 3 points")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("grid must be strictly increasing")
    if not np.allclose(grid, -grid[::-1], rtol=0, atol=1e-12 * max(1.0, np.max(np.abs(grid)))):
        raise DomainError("grid must be symmetric about 0")
    return grid


def _mirror(values):
    """Copy the x > 0 half onto x < 0 so parity holds bit for bit."""
    n = values.size
    out = values.copy()
    out[: n // 2] = values[::-1][: n // 2]
    return out


def envelope_exponent(scales: AnsatzScales, x):
    x = np.abs(np.asarray(x, dtype=float))
    return -scales.gamma * x**3 - scales.beta * x * x


def default_grid(scales: AnsatzScales, points: int = 2001, depth: float = 30.0, xi=None) -> np.ndarray:
    """Uniform symmetric grid on ``[-X, X]`` with ``gamma X^3 + beta X^2 >= depth``.

    Passing the correction polynomial ``xi`` also accounts for its growth,
    i.e. ``-log|psi(X)/psi(0)| >= depth``.
    """

    def decay(x):
        d = scales.gamma * x**3 + scales.beta * x * x
        if xi is not None:
            d -= math.log(max(abs(xi(x)), 1e-300))
        return d

    x = 1.0
    while decay(x) < depth:
        x *= 1.1
    return np.linspace(-x, x, points)


def _check_scales(expansion: DeltaExpansion, scales: AnsatzScales):
    if not math.isclose(expansion.omega_tilde, scales.omega_tilde, rel_tol=1e-12):
        raise DomainError(
            f"expansion omega_tilde {expansion.omega_tilde} does not match scales {scales.omega_tilde}"
        )


def assemble(expansion: DeltaExpansion, scales: AnsatzScales, grid, order: int | None = None) -> WaveProfile:
    """Unnormalized profile; ``psi(0) = 1`` because every correction vanishes at 0."""
    _check_scales(expansion, scales)
    grid = _check_symmetric(grid)
    xi = expansion.xi_total(order)
    ax = np.abs(grid)
    values = np.exp(envelope_exponent(scales, ax)) * xi(ax)
    return WaveProfile(grid, _mirror(values), normalized=False)


def log_abs_psi(expansion: DeltaExpansion, scales: AnsatzScales, x, order: int | None = None):
    """``log|psi(x)|`` of the unnormalized profile, safe far into the tail."""
    _check_scales(expansion, scales)
    ax = np.abs(np.asarray(x, dtype=float))
    return envelope_exponent(scales, ax) + np.log(np.abs(expansion.xi_total(order)(ax)))


def normalize(profile: WaveProfile) -> WaveProfile:
    """Scale to unit trapezoid norm with ``psi(0) > 0``."""
    values = np.asarray(profile.values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError("profile contains non-finite values")
    peak = np.max(np.abs(values))
    if peak == 0:
        raise DomainError("profile has zero norm")
    if max(abs(values[0]), abs(values[-1])) >= 1e-12 * peak:
        raise DomainError("grid too narrow: boundary values are not negligible")
    norm = math.sqrt(trapezoid(values * values, profile.grid))
    values = values / norm
    center = np.argmin(np.abs(profile.grid))
    if values[center] < 0:
        values = -values
    return WaveProfile(profile.grid, values, normalized=True, norm_quadrature=QUADRATURE)


def compare(approx: WaveProfile, exact: WaveProfile) -> dict:
    """``Linf``, ``L2`` and ``overlap`` between two normalized profiles on one grid."""
    if approx.grid.shape != exact.grid.shape or not np.allclose(approx.grid, exact.grid, rtol=0, atol=1e-12):
        raise DomainError("profiles live on different grids")
    diff = approx.values - exact.values
    return {
        "Linf": float(np.max(np.abs(diff))),
        "L2": float(math.sqrt(trapezoid(diff * diff, approx.grid))),
        "overlap": float(trapezoid(approx.values * exact.values, approx.grid)),
    }


def origin_slope(profile_fn, scale: float = 1.0, h: float = 1e-4) -> float:
    """One-sided derivative at ``0+`` with the 4-point forward stencil."""
    f = [profile_fn(i * h) for i in range(4)]
    return scale * (-11.0 * f[0] + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * h)
