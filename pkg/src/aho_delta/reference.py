"""Independent finite-difference eigensolver for the anharmonic oscillator.

The Hamiltonian is discretized with the three-point Laplacian on interior
points of ``[-L, L]`` (Dirichlet walls), giving a symmetric tridiagonal
matrix.  The lowest eigenvalue is isolated by bisection on the Sturm
sequence count, the box is grown until it no longer matters, and the
spacing is halved with Richardson extrapolation on the ``h^2`` error.
The eigenvector comes from inverse iteration at the converged shift.

Everything here runs in reduced units (hbar = m = 1) and is rescaled at
the public boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.linalg import LinAlgError, solve_banded

from aho_delta.errors import ConvergenceError
from aho_delta.oscillator import OscillatorParams, reduce_units

L0 = 8.0
N0 = 1024
L_CAP = 64.0
N_CAP = 2**20


@njit(cache=True)
def _sturm_count(diag, off2, lam):
    """Number of eigenvalues below ``lam`` for constant squared off-diagonal ``off2``."""
    q = diag[0] - lam
    count = 1 if q < 0.0 else 0
    for i in range(1, diag.size):
        if q == 0.0:
            q = -1e-300
        q = diag[i] - lam - off2 / q
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect_lowest(diag, off2, lo, hi):
    for _ in range(400):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _sturm_count(diag, off2, mid) >= 1:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 2.2e-16 * max(abs(lo), abs(hi)):
            break
    return lo, hi


def grid_points(half_width: float, n: int) -> np.ndarray:
    """Interior nodes ``x_i = -L + i h``, built to be exactly antisymmetric."""
    h = 2.0 * half_width / (n + 1)
    return h * (np.arange(1, n + 1) - 0.5 * (n + 1))


def potential(params: OscillatorParams, x):
    return 0.5 * params.omega**2 * x * x + 0.25 * params.mu * x**4


@dataclass(frozen=True)
class GridHamiltonian:
    half_width: float
    points: int
    spacing: float
    diagonal: np.ndarray
    offdiagonal: float
    grid: np.ndarray

    @classmethod
    def build(cls, params: OscillatorParams, half_width: float, points: int) -> GridHamiltonian:
        x = grid_points(half_width, points)
        h = 2.0 * half_width / (points + 1)
        diag = 1.0 / (h * h) + potential(params, x)
        return cls(half_width, points, h, diag, -0.5 / (h * h), x)

    def count_below(self, lam: float) -> int:
        return int(_sturm_count(self.diagonal, self.offdiagonal**2, float(lam)))

    def lowest_eigenvalue(self) -> float:
        # spectrum of the kinetic part is positive, so min(V) bounds from below
        lo = float(np.min(self.diagonal)) - 2.0 * abs(self.offdiagonal)
        hi = float(np.max(self.diagonal)) + 2.0 * abs(self.offdiagonal)
        lo, hi = _bisect_lowest(self.diagonal, self.offdiagonal**2, lo, hi)
        return 0.5 * (lo + hi)

    def apply(self, v: np.ndarray) -> np.ndarray:
        out = self.diagonal * v
        out[1:] += self.offdiagonal * v[:-1]
        out[:-1] += self.offdiagonal * v[1:]
        return out

    def inverse_iteration(self, shift: float, max_iter: int = 50) -> np.ndarray:
        """Ground eigenvector normalized to ``sum psi^2 h = 1`` with ``psi(0) > 0``."""
        n = self.points
        gap = 1e-9 * max(1.0, abs(shift))
        for offset in (gap, 1e2 * gap, 1e4 * gap):
            ab = np.empty((3, n))
            ab[0, :] = self.offdiagonal
            ab[1, :] = self.diagonal - (shift - offset)
            ab[2, :] = self.offdiagonal
            v = np.ones(n) / math.sqrt(n * self.spacing)
            try:
                for _ in range(max_iter):
                    y = solve_banded((1, 1), ab, v)
                    y /= math.sqrt(np.sum(y * y) * self.spacing)
                    if y[n // 2] < 0:
                        y = -y
                    done = np.max(np.abs(y - v)) < 1e-13 * np.max(np.abs(y))
                    v = y
                    if done:
                        return v
            except LinAlgError:
                continue
        raise ConvergenceError("inverse iteration stagnated", bracket=(shift, shift))


def grid_ground_energy(params: OscillatorParams, half_width: float, points: int) -> float:
    """Lowest eigenvalue of one finite-difference Hamiltonian (reduced params)."""
    return GridHamiltonian.build(params, half_width, points).lowest_eigenvalue()


@dataclass(frozen=True)
class GroundState:
    """Converged reference solution in reduced units."""

    params: OscillatorParams
    energy: float
    half_width: float
    points: int
    grid_energies: tuple
    energy_scale: float
    length_scale: float


def solve_ground(
    params: OscillatorParams,
    tol: float = 1e-8,
    half_width: float = L0,
    points: int = N0,
) -> GroundState:
    """Grid-refined ground energy.

    The box is doubled at fixed spacing until the eigenvalue moves by less
    than ``tol/10``; then the spacing is halved (``N -> 2N + 1``) until two
    successive Richardson values agree within ``tol``.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0")
    reduced, escale, lscale = reduce_units(params)
    L, n = float(half_width), int(points)
    e_cur = grid_ground_energy(reduced, L, n)
    while True:
        if 2 * L > L_CAP or 2 * n + 1 > N_CAP:
            raise ConvergenceError("box size did not converge within caps", bracket=(L, 2 * L))
        e_big = grid_ground_energy(reduced, 2 * L, 2 * n + 1)
        if abs(e_big - e_cur) < tol / 10:
            break
        L, n, e_cur = 2 * L, 2 * n + 1, e_big

    energies = [e_cur]
    rich_prev = None
    while True:
        n = 2 * n + 1
        if n > N_CAP:
            raise ConvergenceError(
                "grid refinement did not converge within caps",
                bracket=(rich_prev, energies[-1]),
            )
        energies.append(grid_ground_energy(reduced, L, n))
        rich = (4.0 * energies[-1] - energies[-2]) / 3.0
        if rich_prev is not None and abs(rich - rich_prev) < tol:
            return GroundState(reduced, rich, L, n, tuple(energies), escale, lscale)
        rich_prev = rich


def ground_energy(params: OscillatorParams, tol: float = 1e-8) -> float:
    """Reference ground-state energy in physical units."""
    state = solve_ground(params, tol)
    return state.energy * state.energy_scale


def _eigenvector(state: GroundState, points: int):
    ham = GridHamiltonian.build(state.params, state.half_width, points)
    shift = ham.lowest_eigenvalue()
    return ham, ham.inverse_iteration(shift)


def reduced_wavefunction(state: GroundState):
    """Richardson-combined eigenvector on the coarser of the last two grids.

    Nodes of the ``N`` grid are every other node of the ``2N + 1`` grid, so
    the two eigenvectors combine pointwise to cancel the ``h^2`` error.
    """
    coarse_n = (state.points - 1) // 2
    coarse, psi_c = _eigenvector(state, coarse_n)
    _, psi_f = _eigenvector(state, state.points)
    psi = (4.0 * psi_f[1::2] - psi_c) / 3.0
    psi /= math.sqrt(np.sum(psi * psi) * coarse.spacing)
    return coarse.grid, psi


def ground_wavefunction(params: OscillatorParams, tol: float = 1e-8):
    """``(grid, values)`` of the normalized ground state in physical units."""
    state = solve_ground(params, tol)
    x, psi = reduced_wavefunction(state)
    ell = state.length_scale
    return x * ell, psi / math.sqrt(ell)


def expectation_terms(params: OscillatorParams, half_width: float, points: int):
    """Discrete ``<p^2/2>`` and ``<x V'(x)>/2`` for one grid (reduced params)."""
    ham = GridHamiltonian.build(params, half_width, points)
    psi = ham.inverse_iteration(ham.lowest_eigenvalue())
    h = ham.spacing
    kinetic = float(psi @ (ham.apply(psi) - potential(params, ham.grid) * psi)) * h
    x = ham.grid
    xdv = x * (params.omega**2 * x + params.mu * x**3)
    return kinetic, 0.5 * float(np.sum(psi * psi * xdv)) * h


def virial_gap(state: GroundState) -> float:
    """Richardson-extrapolated ``<p^2/2> - <x V'>/2`` from the last two grids."""
    coarse_n = (state.points - 1) // 2
    t_c, v_c = expectation_terms(state.params, state.half_width, coarse_n)
    t_f, v_f = expectation_terms(state.params, state.half_width, state.points)
    return (4.0 * (t_f - v_f) - (t_c - v_c)) / 3.0
