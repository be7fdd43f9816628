"""Acceptance suite; each criterion prints one PASS/FAIL line in the terminal summary."""

import math

import numpy as np
from conftest import record

from aho_delta import OscillatorParams
from aho_delta.expansion import expand, residual_check, third_order_closed_form
from aho_delta.pms import BOUNDARY, optimize, strong_coupling_alpha0
from aho_delta.reference import grid_ground_energy, ground_energy
from aho_delta.report import scan_omega, wavefunction_comparison

MUS = (0.5, 5.0, 50.0)
W_TILDES = (1.0, 1.5, 2.0, 5.0)

# first oracle run at mu = 200: Linf 0.024669 / 0.012127, overlap 0.999803 / 0.999948
LINF_K3_MAX, LINF_K4_MAX = 0.0247, 0.0122
OVERLAP_K3_MIN, OVERLAP_K4_MIN = 0.9998, 0.99994


def rel(a, b):
    return abs(a - b) / abs(b)


def test_01_first_order_closed_form():
    worst = 0.0
    for mu in MUS:
        p = OscillatorParams(1.0, 1.0, 1.0, mu)
        for wt in W_TILDES:
            e = expand(p, wt, 1)
            om2 = wt * wt - 1.0
            c = e.xi[1]
            worst = max(worst, abs(c.coeff(0)), abs(c.coeff(1)), rel(c.coeff(3), math.sqrt(mu / 2) / 3))
            if om2:
                worst = max(worst, rel(c.coeff(2), om2 / (4 * wt)), rel(e.energies[1], -om2 / (4 * wt)))
            else:
                worst = max(worst, abs(c.coeff(2)), abs(e.energies[1]))
    ok = worst <= 1e-13
    record(1, "first-order closed form", ok, f"max rel err {worst:.2e}")
    assert ok


def test_02_third_order_closed_form():
    worst = 0.0
    for mu in MUS:
        p = OscillatorParams(1.0, 1.0, 1.0, mu)
        for wt in W_TILDES:
            worst = max(worst, rel(expand(p, wt, 3).energy, third_order_closed_form(p, wt)))
    spot = expand(OscillatorParams(1.0, 1.0, 1.0, 5.0), 2.0, 3).energy
    spot_err = rel(spot, 961 / 1024)
    ok = worst <= 1e-12 and spot_err <= 1e-12
    record(2, "third-order closed form", ok, f"max rel err {worst:.2e}, 961/1024 rel err {spot_err:.2e}")
    assert ok


def test_03_first_order_pms_is_harmonic():
    checks = []
    for omega, mu in ((1.0, 5.0), (1.0, 0.1), (2.0, 50.0)):
        r = optimize(OscillatorParams(1.0, 1.0, omega, mu), 1)
        checks.append(r.omega_star == 0.0 and r.kind == BOUNDARY and r.physical_energy == omega / 2)
    ok = all(checks)
    record(3, "K=1 PMS selects Omega = 0, E = omega/2", ok)
    assert ok


def test_04_alpha0_third_order(alpha0_ref):
    a3 = strong_coupling_alpha0(3).alpha0
    closed = 0.1875 * 37.5 ** (1 / 3)
    gap = 1.0 - a3 / alpha0_ref
    ok = abs(a3 - 0.62759) <= 1e-4 and abs(a3 - closed) <= 1e-10 and 0.05 <= gap <= 0.07
    record(4, "alpha0 at third order", ok, f"alpha0 = {a3:.10f}, below reference by {100 * gap:.3f}%")
    assert ok


def test_05_alpha0_eighth_order(alpha0_ref):
    a3 = strong_coupling_alpha0(3).alpha0
    a8 = strong_coupling_alpha0(8).alpha0
    err = abs(a8 / alpha0_ref - 1.0)
    ok = err <= 5e-3 and abs(a8 - alpha0_ref) < abs(a3 - alpha0_ref)
    record(5, "alpha0 at eighth order", ok, f"alpha0 = {a8:.10f}, rel err {100 * err:.4f}%")
    assert ok


def test_06_pms_energy_below_exact(reference_energies):
    worst = -math.inf
    for mu, exact in reference_energies.items():
        for k in range(1, 6):
            e = optimize(OscillatorParams(1.0, 1.0, 1.0, mu), k).physical_energy
            worst = max(worst, e - exact)
    ok = worst <= 1e-8
    record(6, "PMS energy <= exact on the coupling grid", ok, f"max(E_pms - E_ref) = {worst:.3e}")
    assert ok


def test_07_interior_stationary_points():
    table = scan_omega(OscillatorParams(1.0, 1.0, 1.0, 5.0), range(2, 6))
    stationary = table.summary["stationary"]
    details, ok = [], True
    for k in range(2, 6):
        interior = [s for s in stationary if s["order"] == k and s["kind"] != BOUNDARY]
        selected = [s for s in stationary if s["order"] == k and s["selected"]]
        good = len(interior) >= 1 and len(selected) == 1 and abs(selected[0]["slope"]) <= 1e-8
        ok = ok and good
        slope = selected[0]["slope"] if selected else math.nan
        details.append(f"K{k}: {len(interior)} interior, |slope| {abs(slope):.1e}")
    record(7, "interior stationary points at mu = 5", ok, "; ".join(details))
    assert ok


def test_08_wavefunction_improves_with_order():
    m = wavefunction_comparison(OscillatorParams(1.0, 1.0, 1.0, 200.0), (3, 4))
    m3, m4 = m[3], m[4]
    ok = (
        m4["Linf"] < m3["Linf"]
        and m4["overlap"] > m3["overlap"]
        and m3["Linf"] <= LINF_K3_MAX
        and m4["Linf"] <= LINF_K4_MAX
        and m3["overlap"] >= OVERLAP_K3_MIN
        and m4["overlap"] >= OVERLAP_K4_MIN
    )
    detail = (
        f"Linf {m3['Linf']:.5f} -> {m4['Linf']:.5f}, overlap {m3['overlap']:.7f} -> {m4['overlap']:.7f}"
    )
    record(8, "wave function at mu = 200, K = 3 vs 4", ok, detail)
    assert ok


def test_09_reference_solver():
    e0 = ground_energy(OscillatorParams(1.0, 1.0, 1.0, 0.0))
    lam = 0.025
    rs2 = 0.5 + 0.75 * lam - 21 * lam**2 / 8
    e01 = ground_energy(OscillatorParams(1.0, 1.0, 1.0, 0.1))
    p = OscillatorParams(1.0, 1.0, 1.0, 1.0)
    coarse, mid, fine = (grid_ground_energy(p, 8.0, n) for n in (255, 511, 1023))
    ratio = (coarse - mid) / (mid - fine)
    harmonic_ok = abs(e0 - 0.5) <= 1e-8
    rs_ok = abs(e01 - rs2) <= 5e-5
    ratio_ok = abs(ratio - 4.0) <= 0.5
    ok = harmonic_ok and rs_ok and ratio_ok
    detail = (
        f"|E(0) - 0.5| = {abs(e0 - 0.5):.1e} [{'ok' if harmonic_ok else 'fail'}]; "
        f"|E(0.1) - RS2| = {abs(e01 - rs2):.2e} [{'ok' if rs_ok else 'fail'}]; "
        f"h^2 ratio {ratio:.5f} [{'ok' if ratio_ok else 'fail'}]"
    )
    record(9, "reference solver correctness", ok, detail)
    assert ok


def test_10_residual_decreases():
    p = OscillatorParams(1.0, 1.0, 1.0, 0.5)
    x = np.linspace(0.0, 2.0, 201)
    res = [residual_check(expand(p, 1.5, k), x) for k in range(1, 6)]
    ok = all(b < a for a, b in zip(res, res[1:]))
    record(10, "residual decreases with order", ok, " > ".join(f"{r:.3e}" for r in res))
    assert ok
