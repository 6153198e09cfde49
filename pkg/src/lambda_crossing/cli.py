"""Command-line front end: parameter scans written as plot-ready CSV.

Subcommands: levels, resonance, shift-scan, probe-spectrum,
probe-resonance, resolvent, experiment. Flags may be preloaded from a
flat `key = value` config file (# comments allowed); flags override file
values. With --units hz all frequency inputs are ordinary frequencies,
converted to angular internally and converted back on output.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import experiment as exp
from . import probe as probe_mod
from . import resonance as res
from .errors import LambdaCrossingError
from .hamiltonian import RamanParams, dressed_spectrum
from .resolvent import iterate_levels

OUTDIR_ENV = "LAMBDA_CROSSING_OUTDIR"


def _fmt(value) -> str:
    return f"{float(value):.17g}"


def _write_csv(path: Path, header, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _parse_range(text: str, key: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise SystemExit(f"error: {key}: range must be start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise SystemExit(f"error: {key}: malformed range {text!r}") from None
    if count < 2:
        raise SystemExit(f"error: {key}: range count must be >= 2")
    return np.linspace(start, stop, count)


def _load_config(path: str) -> dict:
    values = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise SystemExit(f"error: config: {err}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SystemExit(f"error: config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _resolve_output(name: str) -> Path:
    path = Path(name)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not path.is_absolute():
        path = Path(outdir) / path
    return path


def _merge_config(args: argparse.Namespace):
    """Fill unset flags from the config file, leaving flag values in charge."""
    if not getattr(args, "config", None):
        return
    config = _load_config(args.config)
    for key, value in config.items():
        if not hasattr(args, key):
            raise SystemExit(f"error: config: unknown key {key!r}")
        if getattr(args, key) is None:
            setattr(args, key, value)


def _require(args, *keys):
    for key in keys:
        if getattr(args, key) is None:
            raise SystemExit(f"error: missing required option --{key.replace('_', '-')}")


def _num(args, key) -> float:
    value = getattr(args, key)
    try:
        return float(value)
    except (TypeError, ValueError):
        raise SystemExit(f"error: {key}: malformed number {value!r}") from None


def _scale(args) -> float:
    units = args.units or "dimensionless"
    if units not in ("dimensionless", "hz"):
        raise SystemExit(f"error: units must be dimensionless or hz, got {units!r}")
    return 2.0 * math.pi if units == "hz" else 1.0


def cmd_levels(args) -> int:
    _require(args, "omega1", "omega2", "delta1_range")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    grid = _parse_range(args.delta1_range, "delta1-range") * s
    o1, o2 = _num(args, "omega1") * s, _num(args, "omega2") * s
    rows = []
    for d1 in grid:
        e = dressed_spectrum(RamanParams(o1, o2, float(d1), d2)).energies
        rows.append([d1 / s, e[0] / s, e[1] / s, e[2] / s, (e[2] - e[1]) / s])
    out = _resolve_output(args.output or "levels.csv")
    _write_csv(out, ["delta1", "eps1", "eps2", "eps3", "gap32"], rows)
    return 0


def cmd_resonance(args) -> int:
    _require(args, "omega1", "omega2")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    params = RamanParams(_num(args, "omega1") * s, _num(args, "omega2") * s, d2, d2)
    tol = float(args.tol) if args.tol is not None else res.DEFAULT_TOL
    report = res.resonance_report(params, tol)
    header = [
        "structural_exact",
        "structural_approx",
        "dynamical_exact_effective",
        "dynamical_exact_full",
        "dynamical_approx",
        "shift_exact",
        "shift_approx",
    ]
    row = [getattr(report, name) / s for name in header]
    _write_csv(_resolve_output(args.output or "resonance.csv"), header, [row])
    return 0


def cmd_shift_scan(args) -> int:
    _require(args, "omega2", "ratio_range")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    ratios = _parse_range(args.ratio_range, "ratio-range")
    tol = float(args.tol) if args.tol is not None else res.DEFAULT_TOL
    rows_out, skipped = res.shift_scan(_num(args, "omega2") * s, ratios, tol=tol, delta2=d2)
    for ratio, message in skipped:
        print(f"shift-scan: skipped ratio {ratio:g}: {message}", file=sys.stderr)
    rows = [[r.ratio, r.shift_exact / s, r.shift_approx / s] for r in rows_out]
    _write_csv(
        _resolve_output(args.output or "shift_scan.csv"),
        ["ratio", "shift_exact", "shift_approx"],
        rows,
    )
    return 0


def cmd_probe_spectrum(args) -> int:
    _require(args, "omega1", "omega2", "delta1", "omega_p", "duration")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    params = RamanParams(
        _num(args, "omega1") * s, _num(args, "omega2") * s, _num(args, "delta1") * s, d2
    )
    # Durations are absolute times (seconds when --units hz): no conversion.
    duration = _num(args, "duration")
    omega_p = _num(args, "omega_p") * s
    if args.nu_range is not None:
        nu_grid = _parse_range(args.nu_range, "nu-range") * s
    else:
        nu_grid = probe_mod.default_nu_grid(params, duration)
    spectrum = probe_mod.probe_spectrum(params, omega_p, duration, nu_grid)
    out = _resolve_output(args.output or "probe_spectrum.csv")
    _write_csv(
        out,
        ["nu", "probability"],
        [[nu / s, p] for nu, p in zip(spectrum.nu_grid, spectrum.probabilities)],
    )
    peaks_path = out.with_name(out.stem + "_peaks.csv")
    _write_csv(
        peaks_path,
        ["position", "height", "width"],
        [[pk.position / s, pk.height, pk.width / s] for pk in spectrum.peaks],
    )
    return 0


def cmd_probe_resonance(args) -> int:
    _require(args, "omega1", "omega2", "delta1_range", "omega_p", "duration")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    params = RamanParams(_num(args, "omega1") * s, _num(args, "omega2") * s, d2, d2)
    grid = _parse_range(args.delta1_range, "delta1-range") * s
    result = probe_mod.probed_structural_resonance(
        params, grid, _num(args, "omega_p") * s, _num(args, "duration")
    )
    _write_csv(
        _resolve_output(args.output or "probe_resonance.csv"),
        ["delta1", "measured_splitting"],
        [[d1 / s, sp / s] for d1, sp in zip(result.delta1_grid, result.splittings)],
    )
    print(f"probed_structural_resonance = {_fmt(result.delta1 / s)}")
    return 0


def cmd_resolvent(args) -> int:
    _require(args, "omega1", "omega2", "delta1")
    s = _scale(args)
    d2 = _num(args, "delta2") * s
    params = RamanParams(
        _num(args, "omega1") * s, _num(args, "omega2") * s, _num(args, "delta1") * s, d2
    )
    tol = float(args.tol) if args.tol is not None else 1e-12
    max_iter = int(args.max_iter) if args.max_iter is not None else 200
    levels = iterate_levels(params, tol=tol, max_iter=max_iter)
    _write_csv(
        _resolve_output(args.output or "resolvent.csv"),
        ["e_minus", "e_plus", "iterations_minus", "iterations_plus"],
        [[levels.e_minus / s, levels.e_plus / s, levels.iterations[0], levels.iterations[1]]],
    )
    return 0


def cmd_experiment(args) -> int:
    _require(args, "preset", "scenario", "delta2")
    preset = exp.PRESETS.get(str(args.preset).lower())
    if preset is None:
        raise SystemExit(f"error: unknown preset {args.preset!r}")
    if args.omega is not None:
        omega1 = omega2 = _num(args, "omega")
    else:
        _require(args, "omega1", "omega2")
        omega1, omega2 = _num(args, "omega1"), _num(args, "omega2")
    delta1 = _num(args, "delta1") if args.delta1 is not None else None
    report = exp.scenario_report(
        preset,
        omega1,
        omega2,
        _num(args, "delta2"),
        delta1=delta1,
        scenario=str(args.scenario),
    )
    out = _resolve_output(args.output or "experiment.txt")
    lines = [
        f"scenario = {report.scenario}",
        f"bias_field_G = {_fmt(report.bias_field)}",
        f"delta_e31_Hz = {_fmt(report.delta_e31)}",
        f"delta_e23_Hz = {_fmt(report.delta_e23)}",
        f"delta_e21_Hz = {_fmt(report.delta_e21)}",
        f"dynamical_shift_Hz = {_fmt(report.dynamical_shift)}",
        f"probe_time_bound_s = {_fmt(report.probe_time_bound)}",
        f"probe_rabi_bound_Hz = {_fmt(report.probe_rabi_bound)}",
    ]
    if report.scattering_rate is not None:
        lines.append(f"scattering_rate_per_s = {_fmt(report.scattering_rate)}")
    lines.append(f"feasible = {str(report.feasible).lower()}")
    lines.append(f"notes = {report.notes}")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def _add_common(parser):
    parser.add_argument("--config", help="flat key = value config file")
    parser.add_argument("--output", help="output file path")
    parser.add_argument("--units", choices=["dimensionless", "hz"], default=None)
    parser.add_argument("--delta2", default="1.0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-crossing",
        description="Avoided-crossing resonance analysis of a driven 3-level Lambda system",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("levels", help="dressed energies over a delta1 scan")
    _add_common(p)
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--delta1-range", dest="delta1_range", help="start:stop:count")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("resonance", help="all resonance loci and the shift")
    _add_common(p)
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--tol")
    p.set_defaults(func=cmd_resonance)

    p = sub.add_parser("shift-scan", help="dynamical shift vs coupling ratio")
    _add_common(p)
    p.add_argument("--omega2")
    p.add_argument("--ratio-range", dest="ratio_range", help="start:stop:count")
    p.add_argument("--tol")
    p.set_defaults(func=cmd_shift_scan)

    p = sub.add_parser("probe-spectrum", help="probe transition probability vs nu")
    _add_common(p)
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--delta1")
    p.add_argument("--omega-p", dest="omega_p")
    p.add_argument("--duration")
    p.add_argument("--nu-range", dest="nu_range", help="start:stop:count")
    p.set_defaults(func=cmd_probe_spectrum)

    p = sub.add_parser("probe-resonance", help="structural resonance via the probe protocol")
    _add_common(p)
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--delta1-range", dest="delta1_range", help="start:stop:count")
    p.add_argument("--omega-p", dest="omega_p")
    p.add_argument("--duration")
    p.set_defaults(func=cmd_probe_resonance)

    p = sub.add_parser("resolvent", help="iterated implicit-Hamiltonian levels")
    _add_common(p)
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--delta1")
    p.add_argument("--tol")
    p.add_argument("--max-iter", dest="max_iter")
    p.set_defaults(func=cmd_resolvent)

    p = sub.add_parser("experiment", help="alkali-atom scenario report (inputs in Hz)")
    _add_common(p)
    p.add_argument("--preset")
    p.add_argument("--scenario", choices=["optical", "microwave"])
    p.add_argument("--omega", help="shorthand for equal omega1 and omega2")
    p.add_argument("--omega1")
    p.add_argument("--omega2")
    p.add_argument("--delta1")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _merge_config(args)
    try:
        return args.func(args)
    except LambdaCrossingError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
