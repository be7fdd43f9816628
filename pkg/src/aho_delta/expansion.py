"""Order-by-order delta expansion of the ground state.

In reduced units (hbar = m = 1) the correction polynomial ``xi`` obeys, with
``s = sqrt(2 mu)`` and ``Omega^2 = omega_tilde^2 - omega^2``::

    xi'' - 2 wt x xi' + (2E - wt) xi
        = delta * { s x^2 xi' - [s wt x^3 + Omega^2 x^2 - s x] xi }

Expanding ``xi`` and ``E`` in powers of ``delta`` and collecting order ``k``
gives a linear equation for ``xi_k`` whose right-hand side only involves
lower orders.  Matching powers ``x^p`` from the top degree ``3k`` down to
``p = 1`` is a triangular solve; the ``p = 0`` equation fixes ``E_k``.
The constant term of each ``xi_k`` (k >= 1) is set to zero, which removes
the component parallel to ``xi_0 = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import hermite

from aho_delta.errors import DomainError, PrecisionExhaustedError
from aho_delta.oscillator import OscillatorParams, validate
from aho_delta.polynomial import Polynomial

K_MAX = 12


@dataclass(frozen=True)
class DeltaExpansion:
    """Per-order corrections ``xi_0..xi_K`` and ``E_0..E_K`` at fixed omega_tilde.

    All reported quantities are partial sums at ``delta = 1``.
    ``growth[k]`` is ``max_p |c_p|`` of ``xi_k``, a cheap conditioning gauge.
    """

    params: OscillatorParams
    omega_tilde: float
    order: int
    xi: tuple
    energies: tuple
    growth: tuple = field(default=())
    n: int = 0

    def partial_sum(self, order: int | None = None) -> float:
        k = self.order if order is None else order
        if not 0 <= k <= self.order:
            raise DomainError(f"order {k} outside 0..{self.order}")
        return math.fsum(self.energies[: k + 1])

    @property
    def energy(self) -> float:
        return self.partial_sum()

    def xi_total(self, order: int | None = None) -> Polynomial:
        k = self.order if order is None else order
        total = Polynomial.zero()
        for poly in self.xi[: k + 1]:
            total = total + poly
        return total


def order_zero(n: int, omega_tilde: float) -> tuple[Polynomial, float]:
    """Hermite polynomial ``H_n(sqrt(wt) x)`` and energy ``wt (n + 1/2)``."""
    if int(n) != n or n < 0:
        raise DomainError(f"quantum number must be a non-negative integer, got {n}")
    if not omega_tilde > 0:
        raise DomainError(f"omega_tilde must be > 0, got {omega_tilde}")
    n = int(n)
    c = hermite.herm2poly([0] * n + [1])
    c = c * np.sqrt(omega_tilde) ** np.arange(n + 1)
    return Polynomial(c), omega_tilde * (n + 0.5)


def _step(xi, energies, s, omega2, wt):
    """Solve one order of the recursion.

    ``xi`` holds coefficient arrays for orders ``0..k-1`` with shape
    ``(3j + 1,) + batch``; ``energies`` the matching energy corrections.
    ``omega2`` is ``Omega^2``.  Works for real or complex batches.
    Returns ``(c, E_k, rhs)`` with ``c`` of length ``3k + 1``.
    """
    k = len(xi)
    deg = 3 * k
    prev = xi[-1]
    batch = np.shape(wt)
    dtype = np.result_type(prev, wt, float)
    rhs = np.zeros((deg + 1,) + batch, dtype=dtype)

    m = prev.shape[0]
    if m > 1:
        powers = np.arange(1, m).reshape((-1,) + (1,) * len(batch))
        rhs[2 : m + 1] += s * powers * prev[1:]
    rhs[3 : m + 3] -= s * wt * prev
    rhs[2 : m + 2] -= omega2 * prev
    rhs[1 : m + 1] += s * prev
    for j in range(1, k):
        q = xi[k - j]
        rhs[: q.shape[0]] -= 2.0 * energies[j] * q

    c = np.zeros((deg + 3,) + batch, dtype=dtype)
    for p in range(deg, 0, -1):
        c[p] = ((p + 1) * (p + 2) * c[p + 2] - rhs[p]) / (2.0 * wt * p)
    # p = 0: 2 c_2 = rhs_0 - 2 E_k, and rhs_0 vanishes identically for the ground state
    e_k = 0.5 * rhs[0] - c[2]
    return c[: deg + 1], e_k, rhs


def _check_reduced(params, omega_tilde):
    validate(params)
    if not params.is_reduced:
        raise DomainError("the engine works in reduced units (hbar = m = 1); call reduce_units first")
    w = np.asarray(omega_tilde)
    if np.iscomplexobj(w):
        w = w.real
    if np.any(w <= 0):
        raise DomainError("omega_tilde must be > 0")


def _recurse(params, omega_tilde, order):
    s = math.sqrt(2.0 * params.mu)
    wt = omega_tilde
    omega2 = wt * wt - params.omega**2
    one = np.ones((1,) + np.shape(wt), dtype=np.result_type(wt, float))
    xi = [one]
    energies = [0.5 * wt]
    for k in range(1, order + 1):
        with np.errstate(over="ignore", invalid="ignore"):
            c, e_k, _ = _step(xi, energies, s, omega2, wt)
        if not (np.all(np.isfinite(c)) and np.all(np.isfinite(e_k))):
            raise PrecisionExhaustedError(k)
        xi.append(c)
        energies.append(e_k)
    return xi, energies


def partial_sums(params: OscillatorParams, omega_tilde, order: int) -> np.ndarray:
    """Energy partial sums ``E_0 + ... + E_order`` on an array of omega_tilde.

    Returns shape ``(order + 1,) + omega_tilde.shape``; row ``k`` is the order-k
    partial sum.  Accepts complex omega_tilde for complex-step derivatives.
    """
    _check_order(order)
    wt = np.asarray(omega_tilde)
    if not np.iscomplexobj(wt):
        wt = wt.astype(float)
    _check_reduced(params, wt)
    _, energies = _recurse(params, wt, order)
    return np.cumsum(np.stack([np.broadcast_to(e, wt.shape) for e in energies]), axis=0)


def _check_order(order):
    if int(order) != order or not 0 <= order <= K_MAX:
        raise DomainError(f"order must be an integer in 0..{K_MAX}, got {order}")


def expand(params: OscillatorParams, omega_tilde: float, order: int) -> DeltaExpansion:
    """Build the expansion through ``order`` at fixed ``omega_tilde``."""
    _check_order(order)
    _check_reduced(params, omega_tilde)
    if omega_tilde < params.omega:
        raise DomainError(f"omega_tilde = {omega_tilde} below omega = {params.omega}")
    xi, energies = _recurse(params, float(omega_tilde), int(order))
    polys = tuple(Polynomial(c) for c in xi)
    return DeltaExpansion(
        params=params,
        omega_tilde=float(omega_tilde),
        order=int(order),
        xi=polys,
        energies=tuple(float(e) for e in energies),
        growth=tuple(float(np.max(np.abs(c))) for c in xi),
    )


def _padded(poly: Polynomial, length: int) -> np.ndarray:
    out = np.zeros(length)
    out[: poly.coeffs.size] = poly.coeffs
    return out


def next_order(prior: DeltaExpansion) -> tuple[Polynomial, float]:
    """Solve for ``(xi_k, E_k)`` given an expansion through order ``k - 1``."""
    if prior.n != 0:
        raise DomainError("the recursion is implemented for the ground state only")
    _check_order(prior.order + 1)
    _check_reduced(prior.params, prior.omega_tilde)
    s = math.sqrt(2.0 * prior.params.mu)
    wt = prior.omega_tilde
    xi = [_padded(p, 3 * j + 1) for j, p in enumerate(prior.xi)]
    with np.errstate(over="ignore", invalid="ignore"):
        c, e_k, _ = _step(xi, list(prior.energies), s, wt * wt - prior.params.omega**2, wt)
    if not (np.all(np.isfinite(c)) and np.isfinite(e_k)):
        raise PrecisionExhaustedError(prior.order + 1)
    return Polynomial(c), float(e_k)


def third_order_closed_form(params: OscillatorParams, omega_tilde: float) -> float:
    """Closed-form third-order energy partial sum (reduced units)."""
    validate(params)
    if omega_tilde == 0:
        raise DomainError("omega_tilde must be nonzero")
    w2 = params.omega**2
    wt = omega_tilde
    wt2 = wt * wt
    bracket = 6.0 * params.mu * wt * (2.0 * wt2 - w2) + (
        w2**3 - 5.0 * w2 * w2 * wt2 + 15.0 * w2 * wt2 * wt2 + 5.0 * wt2**3
    )
    return bracket / (32.0 * wt**5)


def transformed_operator(expansion: DeltaExpansion, order: int | None = None) -> Polynomial:
    """Left-hand side of the exact equation for ``xi`` with the truncated series inserted.

    An exact solution makes this polynomial vanish identically.
    """
    p = expansion.params
    s = math.sqrt(2.0 * p.mu)
    wt = expansion.omega_tilde
    omega2 = wt * wt - p.omega**2
    xi = expansion.xi_total(order)
    energy = expansion.partial_sum(order)
    d1 = xi.derivative()
    d2 = d1.derivative()
    drift = Polynomial([0.0, 2.0 * wt, s])
    potential = Polynomial([2.0 * energy - wt, -s, omega2, s * wt])
    return d2 - drift * d1 + potential * xi


def residual_check(expansion: DeltaExpansion, x_grid) -> float:
    """Max absolute residual of the exact transformed equation over ``x_grid``."""
    residual = transformed_operator(expansion)
    return float(np.max(np.abs(residual(np.asarray(x_grid, dtype=float)))))
