"""Command-line front end.

Every subcommand reads flags and, optionally, a flat JSON config file whose
keys mirror the flag names; explicit flags win.  Exit codes: 0 success,
2 configuration error, 3 numerical failure, 4 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from aho_delta import report, validation
from aho_delta.errors import ConvergenceError, DomainError, NoStationaryPointError, PrecisionExhaustedError
from aho_delta.expansion import K_MAX
from aho_delta.oscillator import OscillatorParams, validate

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_VALIDATION = 0, 2, 3, 4

COMMANDS = ("energy", "scan-omega", "scan-mu", "alpha0", "wavefunction", "validate")

# lowest-priority defaults; the config file and flags override them
DEFAULTS = {
    "energy": {"mu": 1.0, "order": 3},
    "scan-omega": {"mu": 5.0},
    "scan-mu": {"mu_grid": "0.1:20:25"},
    "alpha0": {"order": 8},
    "wavefunction": {"mu": 200.0},
    "validate": {},
}
COMMON = {"omega_phys": 1.0, "hbar": 1.0, "mass": 1.0, "tol": 1e-8, "format": "csv", "omega_max": None, "out": None}


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mu", type=float)
    common.add_argument("--omega-phys", dest="omega_phys", type=float)
    common.add_argument("--hbar", type=float)
    common.add_argument("--mass", type=float)
    common.add_argument("--order", type=int)
    common.add_argument("--orders", help="A..B or a single order")
    common.add_argument("--mu-grid", dest="mu_grid", help="start:stop:count")
    common.add_argument("--omega-max", dest="omega_max", type=float, help="upper end of the omega_tilde scan (reduced units)")
    common.add_argument("--tol", type=float)
    common.add_argument("--out", help="output file path")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--config", help="flat JSON config file")

    parser = _Parser(prog="aho-delta", description="Delta expansion of the anharmonic oscillator ground state.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def resolve(argv) -> dict:
    """Merge built-in defaults, the config file and explicit flags."""
    args = build_parser().parse_args(argv)
    merged = dict(COMMON)
    merged.update(DEFAULTS[args.command])
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a flat JSON object")
        known = set(vars(args)) - {"config", "command"}
        for key, value in data.items():
            key = key.replace("-", "_")
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            merged[key] = value
    for key, value in vars(args).items():
        if value is not None and key != "config":
            merged[key] = value
    merged["command"] = args.command
    return merged


def _params(cfg, mu=None) -> OscillatorParams:
    try:
        p = OscillatorParams(
            float(cfg["hbar"]), float(cfg["mass"]), float(cfg["omega_phys"]), float(cfg["mu"] if mu is None else mu)
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad numeric parameter: {exc}") from exc
    return validate(p)


def _orders(cfg, first: int, last: int) -> list:
    """``--orders A..B`` wins; ``--order K`` means ``first..K`` for scans starting above 1."""
    order, orders = cfg.get("order"), cfg.get("orders")
    if order is not None and orders is not None:
        raise ConfigError("give either --order or --orders")
    if orders is not None:
        try:
            ks = report.parse_range(str(orders))
        except ValueError as exc:
            raise ConfigError(f"bad --orders value {orders!r}") from exc
    elif order is not None:
        ks = list(range(first, int(order) + 1)) if first > 1 else [int(order)]
    else:
        ks = list(range(first, last + 1))
    if not ks or min(ks) < 1 or max(ks) > K_MAX:
        raise ConfigError(f"orders must lie in 1..{K_MAX}")
    return ks


def _mu_values(cfg) -> list:
    if cfg.get("mu") is not None:
        return [float(cfg["mu"])]
    try:
        start, stop, count = str(cfg["mu_grid"]).split(":")
        values = np.linspace(float(start), float(stop), int(count))
    except ValueError as exc:
        raise ConfigError(f"bad --mu-grid {cfg['mu_grid']!r}; expected start:stop:count") from exc
    return [float(v) for v in values]


def _single_order(cfg) -> int:
    k = int(cfg["order"])
    if not 1 <= k <= K_MAX:
        raise ConfigError(f"order must lie in 1..{K_MAX}")
    return k


def _emit(table, cfg, lines=(), print_lines=False):
    """Write the table to ``--out`` (then print ``lines``) or to stdout."""
    text = report.render_json(table) if cfg["format"] == "json" else report.render_csv(table)
    if cfg.get("out"):
        report.write_atomic(cfg["out"], text)
        print_lines = True
    if print_lines:
        for line in lines:
            print(line)
    else:
        sys.stdout.write(text)


def run(cfg: dict) -> int:
    command = cfg["command"]
    tol = float(cfg["tol"])
    if not tol > 0:
        raise ConfigError("tol must be > 0")

    if command == "validate":
        results = validation.run_all()
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
        table = report.Table("validate", OscillatorParams(), ["property", "passed"], [list(r) for r in results])
        if cfg.get("out"):
            _emit(table, cfg)
        return EXIT_OK if all(ok for _, ok in results) else EXIT_VALIDATION

    if command == "energy":
        table = report.energy_report(_params(cfg), _single_order(cfg), tol, cfg.get("omega_max"))
        mu, k, _, _, approx, exact, gap, rel = table.rows[0]
        lines = [
            f"mu = {report.fmt(mu)}  order = {k}",
            f"E_pms   = {report.fmt(approx)}",
            f"E_exact = {report.fmt(exact)}",
            f"gap     = {report.fmt(gap)} (relative {report.fmt(rel)})",
        ]
        _emit(table, cfg, lines, print_lines=True)
        return EXIT_OK

    if command == "scan-omega":
        table = report.scan_omega(_params(cfg), _orders(cfg, 2, 5), cfg.get("omega_max"))
        lines = [
            f"order {s['order']}: selected omega_tilde = {report.fmt(s['omega_tilde'])}  "
            f"E = {report.fmt(s['energy'])}  |dE/domega_tilde| = {report.fmt(s['slope'])}"
            for s in table.summary["stationary"]
            if s["selected"]
        ]
        _emit(table, cfg, lines)
        return EXIT_OK

    if command == "scan-mu":
        params = _params(cfg, mu=_mu_values(cfg)[0])
        table = report.scan_mu(params, _orders(cfg, 1, 5), _mu_values(cfg), tol)
        _emit(table, cfg)
        return EXIT_OK

    if command == "alpha0":
        table = report.alpha0_table(_single_order(cfg), tol)
        _emit(table, cfg)
        return EXIT_OK

    if command == "wavefunction":
        table = report.wavefunction_table(_params(cfg), tol)
        lines = [
            f"{key}: Linf = {report.fmt(m['Linf'])}  L2 = {report.fmt(m['L2'])}  overlap = {report.fmt(m['overlap'])}"
            for key, m in table.summary.items()
        ]
        _emit(table, cfg, lines)
        return EXIT_OK

    raise ConfigError(f"unknown command {command!r}")


def _fail(exc, code) -> int:
    record = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    try:
        cfg = resolve(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except (ConfigError, DomainError, OSError) as exc:
        return _fail(exc, EXIT_CONFIG)
    except (PrecisionExhaustedError, NoStationaryPointError, ConvergenceError, ArithmeticError) as exc:
        return _fail(exc, EXIT_NUMERIC)


if __name__ == "__main__":
    sys.exit(main())
