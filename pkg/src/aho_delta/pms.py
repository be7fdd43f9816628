"""Principle of minimal sensitivity over the artificial frequency.

The order-K energy depends on the artificial frequency ``Omega`` only
through truncation.  Stationary points of ``E(Omega)`` are candidate
estimates.  ``Omega = 0`` is always stationary in ``Omega`` (``E`` is even
in ``Omega``) and is listed as the boundary candidate; interior candidates
are roots of ``dE/d omega_tilde`` with ``omega_tilde = sqrt(omega^2 + Omega^2)``.

At ``Omega = 0`` the expansion degenerates into plain perturbation theory
in ``sqrt(mu)``, and for odd K its curvature in ``Omega`` vanishes
identically.  Selection therefore ranks interior local minima first, then
interior maxima, then the boundary, and takes the flattest point (smallest
``|d^2E/dOmega^2|``) within the first non-empty class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from aho_delta.errors import DomainError, NoStationaryPointError
from aho_delta.expansion import K_MAX, partial_sums
from aho_delta.oscillator import OscillatorParams, reduce_units, validate

BOUNDARY = "boundary"
MINIMUM = "min"
MAXIMUM = "max"

_RANK = {MINIMUM: 0, MAXIMUM: 1, BOUNDARY: 2}


@dataclass(frozen=True)
class Candidate:
    omega_tilde: float
    omega: float
    energy: float
    slope: float
    curvature: float
    kind: str


@dataclass(frozen=True)
class PMSResult:
    """Selected stationary point.  Frequencies and energy are in reduced units."""

    order: int
    omega_tilde_star: float
    omega_star: float
    energy: float
    flatness: float
    kind: str
    candidates: tuple
    energy_scale: float = 1.0

    @property
    def physical_energy(self) -> float:
        return self.energy * self.energy_scale


@dataclass(frozen=True)
class StrongCouplingResult:
    order: int
    alpha0: float
    omega_tilde_star: float


def default_omega_tilde_max(params: OscillatorParams) -> float:
    return max(10.0 * params.omega, 10.0, 4.0 * params.mu ** (1.0 / 3.0))


def _energy(params, order, wt):
    return partial_sums(params, wt, order)[order]


def _slope(params, order, wt):
    """Central-difference ``dE/d omega_tilde``, vectorized over ``wt``."""
    wt = np.asarray(wt, dtype=float)
    h = 1e-5 * np.maximum(1.0, wt)
    return (_energy(params, order, wt + h) - _energy(params, order, wt - h)) / (2.0 * h)


def _energy_of_omega(params, order, omega):
    wt = math.sqrt(params.omega**2 + omega * omega)
    return float(_energy(params, order, wt))


def _curvature_omega(params, order, omega):
    """Central-difference ``d^2E/dOmega^2``; ``E`` is even in ``Omega``."""
    h = 1e-4 * max(1.0, omega)
    f0 = _energy_of_omega(params, order, omega)
    fp = _energy_of_omega(params, order, omega + h)
    fm = _energy_of_omega(params, order, abs(omega - h))
    return (fp - 2.0 * f0 + fm) / (h * h)


def _curvature_omega_tilde(params, order, wt):
    h = 1e-4 * max(1.0, wt)
    e = _energy(params, order, np.array([wt - h, wt, wt + h]))
    return (e[2] - 2.0 * e[1] + e[0]) / (h * h)


def energy_curve(params: OscillatorParams, order: int, omega_tilde_grid) -> list:
    """``[(omega_tilde, E^(K)(omega_tilde)), ...]`` in grid order."""
    grid = np.atleast_1d(np.asarray(omega_tilde_grid, dtype=float))
    if grid.size > 1 and np.any(np.diff(grid) < 0):
        raise DomainError("omega_tilde grid must be sorted")
    if np.any(grid < params.omega):
        raise DomainError("omega_tilde grid must lie in [omega, omega_tilde_max]")
    energies = _energy(params, order, grid)
    return [(float(w), float(e)) for w, e in zip(grid, energies)]


def _make_candidate(params, order, wt, kind):
    omega = math.sqrt(max(wt * wt - params.omega**2, 0.0))
    return Candidate(
        omega_tilde=float(wt),
        omega=omega,
        energy=float(_energy(params, order, wt)),
        slope=float(abs(_slope(params, order, wt))),
        curvature=float(abs(_curvature_omega(params, order, omega))),
        kind=kind,
    )


def stationary_points(
    params: OscillatorParams,
    order: int,
    omega_tilde_max: float | None = None,
    n_grid: int = 400,
) -> list:
    """All PMS candidates of the order-K energy in ``[omega, omega_tilde_max]``.

    Interior roots of ``dE/d omega_tilde`` are bracketed by sign changes on an
    ``n_grid``-point grid and refined by bisection to relative 1e-10.
    Raises :class:`NoStationaryPointError` when nothing is found.
    """
    validate(params)
    if not 1 <= order <= K_MAX:
        raise DomainError(f"order must be in 1..{K_MAX}, got {order}")
    w = params.omega
    wmax = default_omega_tilde_max(params) if omega_tilde_max is None else float(omega_tilde_max)
    if wmax <= w:
        raise DomainError(f"omega_tilde_max = {wmax} must exceed omega = {w}")
    lo = w if w > 0 else wmax / n_grid
    grid = np.linspace(lo, wmax, n_grid)
    slopes = _slope(params, order, grid)

    def slope_at(x):
        return float(_slope(params, order, np.array([x]))[0])

    roots = []
    for i in range(n_grid - 1):
        a, b = grid[i], grid[i + 1]
        da, db = slopes[i], slopes[i + 1]
        if da == 0.0:
            root = a
        elif da * db < 0:
            root = bisect(slope_at, a, b, xtol=1e-15, rtol=1e-10, maxiter=200)
        else:
            continue
        if w > 0 and root - w <= 1e-6 * max(1.0, w):
            continue  # same point as the boundary candidate
        if roots and abs(root - roots[-1]) <= 1e-9 * max(1.0, root):
            continue
        roots.append(root)

    candidates = []
    if w > 0:
        candidates.append(_make_candidate(params, order, w, BOUNDARY))
    for root in roots:
        kind = MINIMUM if _curvature_omega_tilde(params, order, root) > 0 else MAXIMUM
        candidates.append(_make_candidate(params, order, root, kind))
    if not candidates:
        raise NoStationaryPointError(
            f"no stationary point of the order-{order} energy in [{lo:.6g}, {wmax:.6g}]"
        )
    return candidates


def select_pms(candidates, order: int = 0, energy_scale: float = 1.0) -> PMSResult:
    """Pick the flattest candidate of the highest-ranked non-empty kind."""
    if not candidates:
        raise NoStationaryPointError("empty candidate list")
    best = min(candidates, key=lambda c: (_RANK[c.kind], c.curvature, c.omega))
    return PMSResult(
        order=order,
        omega_tilde_star=best.omega_tilde,
        omega_star=best.omega,
        energy=best.energy,
        flatness=best.curvature,
        kind=best.kind,
        candidates=tuple(candidates),
        energy_scale=energy_scale,
    )


def optimize(params: OscillatorParams, order: int, omega_tilde_max: float | None = None) -> PMSResult:
    """PMS-optimized order-K ground energy for physical ``params``.

    Reduction to hbar = m = 1 happens here; ``omega_tilde_max`` is in reduced units.
    """
    reduced, energy_scale, _ = reduce_units(params)
    candidates = stationary_points(reduced, order, omega_tilde_max)
    return select_pms(candidates, order=order, energy_scale=energy_scale)


def strong_coupling_alpha0(order: int) -> StrongCouplingResult:
    """Coefficient ``alpha0`` of ``E = alpha0 (mu/4)^(1/3)`` in the pure quartic limit.

    The omega = 0, mu = 4 problem has ``(mu/4)^(1/3) = 1``, so its optimized
    energy is ``alpha0`` itself.
    """
    result = optimize(OscillatorParams(1.0, 1.0, 0.0, 4.0), order)
    return StrongCouplingResult(order, result.energy, result.omega_tilde_star)
