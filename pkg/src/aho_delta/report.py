"""Tables behind the figures, and deterministic CSV/JSON writers."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile

import numpy as np
from scipy.interpolate import CubicSpline

from aho_delta.errors import NoStationaryPointError
from aho_delta.expansion import expand, partial_sums
from aho_delta.oscillator import OscillatorParams, ansatz_scales, reduce_units
from aho_delta.pms import default_omega_tilde_max, optimize, stationary_points, select_pms, strong_coupling_alpha0
from aho_delta.reference import ground_energy, reduced_wavefunction, solve_ground
from aho_delta.wavefunction import WaveProfile, assemble, compare, default_grid, normalize

SIG_DIGITS = 12


class Table:
    """Header, rows and an optional free-form summary for one command."""

    def __init__(self, command, params, columns, rows=None, summary=None):
        self.command = command
        self.params = params
        self.columns = list(columns)
        self.rows = list(rows or [])
        self.summary = summary or {}


def fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    if value is None or not math.isfinite(value):
        return "nan"
    return f"{float(value):.{SIG_DIGITS}g}"


def _json_value(value):
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, str) or value is None:
        return value
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(f"{value:.{SIG_DIGITS}g}")


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def render_json(table: Table) -> str:
    p = table.params
    doc = {
        "command": table.command,
        "params": {"hbar": p.hbar, "mass": p.mass, "omega": p.omega, "mu": p.mu},
        "columns": table.columns,
        "rows": table.rows,
        "summary": table.summary,
    }
    return json.dumps(_json_value(doc), sort_keys=True, indent=2) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _frequency_scale(params: OscillatorParams) -> float:
    _, energy_scale, _ = reduce_units(params)
    return energy_scale / params.hbar


def energy_report(params: OscillatorParams, order: int, tol: float = 1e-8, omega_tilde_max=None) -> Table:
    result = optimize(params, order, omega_tilde_max)
    exact = ground_energy(params, tol)
    approx = result.physical_energy
    fscale = _frequency_scale(params)
    row = [
        params.mu,
        order,
        result.omega_star * fscale,
        result.omega_tilde_star * fscale,
        approx,
        exact,
        approx - exact,
        (approx - exact) / exact,
    ]
    columns = ["mu", "order", "omega_star", "omega_tilde_star", "energy_pms", "energy_exact", "abs_gap", "rel_gap"]
    return Table("energy", params, columns, [row], {"selected_kind": result.kind})


def scan_omega(params: OscillatorParams, orders, omega_tilde_max=None, points: int = 201) -> Table:
    """Energy versus the artificial frequency at fixed coupling, one block per order."""
    reduced, energy_scale, _ = reduce_units(params)
    fscale = _frequency_scale(params)
    wmax = default_omega_tilde_max(reduced) if omega_tilde_max is None else float(omega_tilde_max)
    lo = reduced.omega if reduced.omega > 0 else wmax / points
    grid = np.linspace(lo, wmax, points)
    omegas = np.sqrt(np.maximum(grid * grid - reduced.omega**2, 0.0))
    top = max(orders)
    curves = partial_sums(reduced, grid, top)
    rows = []
    stationary = []
    for k in orders:
        for w, wt, e in zip(omegas, grid, curves[k]):
            rows.append([w * fscale, wt * fscale, k, e * energy_scale])
        try:
            candidates = stationary_points(reduced, k, wmax)
        except NoStationaryPointError:
            continue
        chosen = select_pms(candidates, order=k)
        for c in candidates:
            stationary.append(
                {
                    "order": k,
                    "omega": c.omega * fscale,
                    "omega_tilde": c.omega_tilde * fscale,
                    "energy": c.energy * energy_scale,
                    "slope": c.slope,
                    "curvature": c.curvature,
                    "kind": c.kind,
                    "selected": c.omega_tilde == chosen.omega_tilde_star,
                }
            )
    return Table("scan-omega", params, ["omega", "omega_tilde", "order", "energy"], rows, {"stationary": stationary})


def parse_range(text: str) -> list:
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def scan_mu(params: OscillatorParams, orders, mus, tol: float = 1e-8) -> Table:
    """PMS energies against the reference solver over a coupling grid."""
    rows = []
    for mu in mus:
        p = OscillatorParams(params.hbar, params.mass, params.omega, float(mu))
        exact = ground_energy(p, tol)
        for k in orders:
            try:
                approx = optimize(p, k).physical_energy
            except NoStationaryPointError:
                approx = math.nan
            rows.append([float(mu), k, approx, exact])
    return Table("scan-mu", params, ["mu", "order", "energy_pms", "energy_exact"], rows)


def alpha0_table(max_order: int, tol: float = 1e-8) -> Table:
    ref = ground_energy(OscillatorParams(1.0, 1.0, 0.0, 4.0), tol)
    rows = []
    for k in range(1, max_order + 1):
        try:
            a = strong_coupling_alpha0(k).alpha0
        except NoStationaryPointError:
            a = math.nan  # order 1 is monotone in omega_tilde at omega = 0
        rows.append([k, a, ref, a / ref - 1.0])
    params = OscillatorParams(1.0, 1.0, 0.0, 4.0)
    return Table("alpha0", params, ["order", "alpha0", "alpha0_ref", "rel_error"], rows)


def approximate_profiles(params: OscillatorParams, orders, grid):
    """Normalized PMS profiles on a reduced-unit grid, keyed by order."""
    reduced, _, _ = reduce_units(params)
    out = {}
    for k in orders:
        result = optimize(params, k)
        expansion = expand(reduced, result.omega_tilde_star, k)
        scales = ansatz_scales(reduced, result.omega_star)
        out[k] = normalize(assemble(expansion, scales, grid))
    return out


def wavefunction_comparison(params: OscillatorParams, orders=(3, 4), tol: float = 1e-8) -> dict:
    """Metrics of each order's profile against the reference, on the reference grid."""
    state = solve_ground(params, tol)
    x, psi = reduced_wavefunction(state)
    exact = WaveProfile(x, psi, normalized=True)
    profiles = approximate_profiles(params, orders, x)
    return {k: compare(profiles[k], exact) for k in orders}


def wavefunction_table(params: OscillatorParams, tol: float = 1e-8, points: int = 2001) -> Table:
    reduced, _, lscale = reduce_units(params)
    state = solve_ground(params, tol)
    xr, psi_r = reduced_wavefunction(state)
    k3 = optimize(params, 3)
    xi3 = expand(reduced, k3.omega_tilde_star, 3).xi_total()
    grid = default_grid(ansatz_scales(reduced, k3.omega_star), points, xi=xi3)
    inside = np.abs(grid) <= xr[-1]
    psi_exact = np.zeros_like(grid)
    psi_exact[inside] = CubicSpline(xr, psi_r)(grid[inside])
    profiles = approximate_profiles(params, (3, 4), grid)
    metrics = wavefunction_comparison(params, (3, 4), tol)
    root = math.sqrt(lscale)
    rows = [
        [x * lscale, e / root, a / root, b / root]
        for x, e, a, b in zip(grid, psi_exact, profiles[3].values, profiles[4].values)
    ]
    summary = {f"K{k}": m for k, m in metrics.items()}
    return Table("wavefunction", params, ["x", "psi_exact", "psi_K3", "psi_K4"], rows, summary)
