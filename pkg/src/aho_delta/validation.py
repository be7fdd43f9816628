"""Self-checks run by ``aho-delta validate``."""

from __future__ import annotations

import math

import numpy as np

from aho_delta.expansion import expand, residual_check, third_order_closed_form
from aho_delta.oscillator import OscillatorParams
from aho_delta.pms import optimize, strong_coupling_alpha0
from aho_delta.reference import GridHamiltonian, ground_energy, solve_ground, virial_gap

W_TILDES = (1.0, 1.5, 2.0, 5.0)
MUS = (0.5, 5.0, 50.0)


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def first_order_closed_form():
    worst = 0.0
    for mu in MUS:
        p = OscillatorParams(1.0, 1.0, 1.0, mu)
        for wt in W_TILDES:
            e = expand(p, wt, 1)
            om2 = wt * wt - 1.0
            a2, a3 = om2 / (4 * wt), math.sqrt(mu / 2) / 3
            worst = max(worst, abs(e.xi[1].coeff(1)))
            worst = max(worst, _rel(e.xi[1].coeff(3), a3))
            if om2:
                worst = max(worst, _rel(e.xi[1].coeff(2), a2), _rel(e.energies[1], -a2))
    return worst <= 1e-13


def third_order_matches_closed_form():
    for mu in MUS:
        p = OscillatorParams(1.0, 1.0, 1.0, mu)
        for wt in W_TILDES:
            if _rel(expand(p, wt, 3).energy, third_order_closed_form(p, wt)) > 1e-12:
                return False
    return expand(OscillatorParams(1.0, 1.0, 1.0, 5.0), 2.0, 3).energy == 961 / 1024


def first_order_pms_is_harmonic():
    r = optimize(OscillatorParams(1.0, 1.0, 1.0, 5.0), 1)
    return r.omega_star == 0.0 and r.energy == 0.5


def alpha0_third_order():
    return abs(strong_coupling_alpha0(3).alpha0 - 0.1875 * 37.5 ** (1 / 3)) <= 1e-4


def residual_decreases():
    p = OscillatorParams(1.0, 1.0, 1.0, 0.5)
    x = np.linspace(0.0, 2.0, 201)
    res = [residual_check(expand(p, 1.5, k), x) for k in range(1, 6)]
    return all(b < a for a, b in zip(res, res[1:]))


def harmonic_reference():
    return abs(ground_energy(OscillatorParams(1.0, 1.0, 1.0, 0.0)) - 0.5) <= 1e-8


def sturm_count_brackets_ground_state():
    state = solve_ground(OscillatorParams(1.0, 1.0, 1.0, 1.0))
    ham = GridHamiltonian.build(state.params, state.half_width, state.points)
    e = ham.lowest_eigenvalue()
    return ham.count_below(e + 1e-9) == 1 and ham.count_below(e - 1e-9) == 0


def virial_theorem():
    return abs(virial_gap(solve_ground(OscillatorParams(1.0, 1.0, 1.0, 5.0)))) <= 1e-7


CHECKS = (
    ("first-order closed form", first_order_closed_form),
    ("third-order closed form", third_order_matches_closed_form),
    ("first-order PMS selects Omega = 0", first_order_pms_is_harmonic),
    ("alpha0 at third order", alpha0_third_order),
    ("residual decreases with order", residual_decreases),
    ("harmonic reference energy", harmonic_reference),
    ("Sturm count at ground energy", sturm_count_brackets_ground_state),
    ("virial theorem", virial_theorem),
)


def run_all():
    """``[(name, passed), ...]``; an exception counts as a failure."""
    results = []
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception:  # noqa: BLE001 - reported as a failed check
            ok = False
        results.append((name, ok))
    return results
