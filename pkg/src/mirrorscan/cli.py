"""Command line front end: analyses, simulations, scans and reference reproductions.

Exit codes: 0 success, 1 invalid input, 2 a reproduction missed its expected
values.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .config import RunConfig, load_config
from .errors import MirrorScanError
from .models import (
    actuator,
    apply_correction,
    bode_point,
    build_simplified_second_order,
    build_third_order,
    modal_analysis,
    time_constant_ratio,
    transfer_function,
)
from .reference_data import IDEAL_SCAN, SYNCHRONIZED_SCAN, TRACKED_SCAN
from .scan import calibrate_separation, flatten, generate_scan, samples_from_rows
from .scenarios import SYNC_ROW, TOC_SCENARIOS, scan_controllers
from .sim import InputSignal, calibrate_friction, integrate_friction, integrate_linear
from .toc import TocProblem, certify, default_accuracy, solve
from .tracking import run_tracking

__all__ = ["main", "write_csv", "read_csv", "format_csv"]

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2

SCAN_HEADER = ("t_s", "phi_lm_deg", "phi_sm_deg", "x_m", "y_m")
TABLE_HEADER = ("Time (s)", "Large mirror (deg)", "Small mirror (deg)", "Horizontal position (m)",
                "Vertical position (m)")

# channel -> (csv name, scale from internal units)
CHANNEL_UNITS = {
    "phi": ("phi_deg", 180 / math.pi),
    "omega": ("omega_deg_s", 180 / math.pi),
    "i": ("i_a", 1.0),
    "u": ("u_v", 1.0),
    "T_RL": ("t_rl_nm", 1.0),
    "T_CF": ("t_cf_nm", 1.0),
    "T_R": ("t_r_nm", 1.0),
    "stick": ("stick_flag", 1.0),
    "phi_demand": ("phi_demand_deg", 180 / math.pi),
}


def _fmt(v, decimals: int) -> str:
    if isinstance(v, str):
        return v
    text = f"{float(v):.{decimals}f}"
    # avoid a signed zero after rounding
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def format_csv(header: Sequence[str], rows, decimals: int = 6) -> str:
    """CSV text with a header row, fixed decimals and LF line endings."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v, decimals) for v in row) + "\n")
    return buf.getvalue()


def write_csv(path: Optional[str], header, rows, decimals: int = 6, out=None):
    text = format_csv(header, rows, decimals)
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        (out or sys.stdout).write(text)


def read_csv(text: str):
    """Parse CSV text produced by :func:`format_csv` into ``(header, array)``."""
    lines = [ln for ln in text.split("\n") if ln]
    header = tuple(lines[0].split(","))
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float)
    return header, data.reshape(-1, len(header))


def _series_rows(series):
    names = [c for c in CHANNEL_UNITS if c in series]
    header = ["t_s"] + [CHANNEL_UNITS[c][0] for c in names]
    cols = [series.t] + [series[c] * CHANNEL_UNITS[c][1] for c in names]
    return header, np.column_stack(cols)


def _run_config(args) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    over = {}
    for flag, field_name in (("actuator", "actuator"), ("correction", "correction"), ("plant", "plant"),
                             ("u0", "u0_volts"), ("ts_control", "ts_control_s"), ("ts_demand", "ts_demand_s"),
                             ("target_mode", "target_mode"), ("phase_shift_deg", "phase_shift_deg"),
                             ("duration", "duration_s"), ("tc", "tc_nm"), ("demand", "demand_kind"),
                             ("amplitude_deg", "demand_amplitude_deg"), ("frequency", "demand_frequency_hz")):
        v = getattr(args, flag, None)
        if v is not None:
            over[field_name] = v
    if getattr(args, "no_prediction", False):
        over["prediction"] = False
    return replace(cfg, **over)


def _model(args, default_correction: str = "none"):
    p = apply_correction(actuator(args.actuator or "large"), args.correction or default_correction)
    return p, (build_simplified_second_order(p) if args.order == 2 else build_third_order(p))


# ---------------------------------------------------------------- commands

def cmd_model_info(args) -> int:
    p, m = _model(args)
    ma = modal_analysis(m)
    info = {
        "actuator": args.actuator or "large",
        "correction": args.correction or "none",
        "order": m.order,
        "A": np.asarray(m.A).tolist(),
        "B": np.asarray(m.B).tolist(),
        "C": np.asarray(m.C).tolist(),
        "D": m.D,
        "eigenvalues": [[z.real, z.imag] for z in ma.eigenvalues],
        "natural_frequency_rad_s": ma.natural_frequency,
        "damping_ratio": ma.damping_ratio,
        "resonant_frequency_hz": ma.resonant_frequency_hz,
        "time_constant_ratio": time_constant_ratio(p) if p.c > 0 else None,
    }
    if not (p.c == 0 and args.order == 2):
        tf = transfer_function(p, m.order)
        info["transfer_function"] = {"K": tf.K, "denominator": list(tf.denom), "integrator": tf.integrator}
    print(json.dumps(info, indent=2))
    return EXIT_OK


def _default_dt(model) -> float:
    """1e-4 s, or 5e-5 s when the electrical pole makes 1e-4 s fail the step guard."""
    return 1e-4 if model.order == 2 else 5e-5


def _open_loop(args, signal: InputSignal) -> int:
    cfg = _run_config(args)
    p, m = _model(args)
    if args.plant == "friction3":
        p = replace(p, Tc=cfg.tc_nm)
        series = integrate_friction(build_third_order(p), p, np.zeros(3), signal, args.dt or 1e-5, cfg.duration_s)
    else:
        series = integrate_linear(m, np.zeros(m.order), signal, args.dt or _default_dt(m), cfg.duration_s, J=p.J)
    header, data = _series_rows(series)
    step = max(1, int(round((args.record_every or series.dt) / series.dt)))
    write_csv(args.out, header, data[::step])
    return EXIT_OK


def cmd_step(args) -> int:
    return _open_loop(args, InputSignal.step(args.volts))


def cmd_sine(args) -> int:
    return _open_loop(args, InputSignal.sinusoid(args.volts, args.frequency_hz))


def cmd_bode(args) -> int:
    _, m = _model(args)
    if args.omega:
        omegas = np.asarray(args.omega, dtype=float)
    else:
        omegas = np.logspace(math.log10(args.start), math.log10(args.stop), args.points)
    rows = []
    for w in omegas:
        mag, ph = bode_point(m, float(w))
        rows.append((w, mag, math.degrees(ph)))
    write_csv(args.out, ("omega_rad_s", "magnitude", "phase_deg"), rows)
    return EXIT_OK


def cmd_toc_solve(args) -> int:
    p, m = _model(args, default_correction="zero_pivot_stiffness")
    n = m.order
    xf = np.zeros(n)
    xf[0] = math.radians(args.target_deg)
    acc = default_accuracy(n)
    if args.accuracy:
        acc = (math.radians(args.accuracy[0]), math.radians(args.accuracy[1]), *args.accuracy[2:])[:n]
    prob = TocProblem(m, np.zeros(n), xf, args.u0 or 20.0, acc)
    sol = solve(prob)
    out = {"solution": sol.to_dict()}
    if sol.converged and sol.intervals:
        out["certificate"] = certify(prob, sol).to_dict()
    print(json.dumps(out, indent=2))
    return EXIT_OK if sol.converged else EXIT_MISMATCH


def cmd_track(args) -> int:
    cfg = _run_config(args)
    res = run_tracking(cfg.plant_object(), cfg.controller(), cfg.demand(), cfg.duration_s,
                       J=cfg.params().J, record_every=args.record_every)
    header, data = _series_rows(res.series)
    write_csv(args.out, header, data)
    print(f"accuracy_achieved_deg={math.degrees(res.accuracy_achieved):.6f} "
          f"max_error_deg={math.degrees(res.max_error):.6f} transition_time_s={res.transition_time:.6f} "
          f"solver_failures={res.samples['failures']}", file=sys.stderr)
    return EXIT_OK


def _scan_rows(samples, table_style: bool):
    if table_style:
        # time keeps millisecond resolution, the other columns two decimals
        return TABLE_HEADER, [(f"{s.t:.3f}", *s.as_tuple()[1:]) for s in samples], 2
    return SCAN_HEADER, [s.as_tuple() for s in samples], 6


def _tracked_passes(cfg: RunConfig, shift: bool):
    runs = {}
    for mirror, (plant, ccfg, dem) in scan_controllers(shift).items():
        runs[mirror] = run_tracking(plant, ccfg, dem, cfg.duration_s, record_every=1e-3)
    return generate_scan(cfg.scan(), cfg.duration_s, "tracked", (runs["large"], runs["small"]))


def cmd_scan(args) -> int:
    cfg = _run_config(args)
    if args.source == "ideal":
        passes = generate_scan(cfg.scan(), cfg.duration_s)
    else:
        passes = _tracked_passes(cfg, args.source == "synchronized")
    header, rows, dec = _scan_rows(flatten(passes), args.table_format)
    write_csv(args.out, header, rows, dec)
    if args.pass_dir:
        for ps in passes:
            h, r, d = _scan_rows(ps.samples, args.table_format)
            write_csv(str(Path(args.pass_dir) / f"pass_{ps.index:02d}_{ps.parity}.csv"), h, r, d)
    return EXIT_OK


def cmd_calibrate(args) -> int:
    if args.what == "friction":
        p = apply_correction(actuator(args.actuator or "large"), args.correction or "none")
        Tc, finals = calibrate_friction(p)
        out = {"Tc_nm": Tc, "final_angles_deg": [float(v) for v in finals],
               "gain_deg_per_volt": [float(v) / u for v, u in zip(finals, (1, 2, 3, 4))]}
    else:
        d, rms = calibrate_separation(samples_from_rows(IDEAL_SCAN), 200.0)
        out = {"separation_m": d, "rms_m": rms}
    print(json.dumps(out, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------- reproduce

def _report(name: str, checks) -> int:
    """Print one line per check ``(label, worst, tolerance)``; exit code from the worst."""
    ok = True
    for label, worst, tol in checks:
        good = bool(worst <= tol)
        ok &= good
        print(f"{name} {label}: worst={worst:.6g} tol={tol:.6g} {'PASS' if good else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def _scan_checks(samples, table, start: float = 0.0, tol_deg: float = 0.005, tol_m: float = 0.05):
    a = np.array([s.as_tuple() for s in samples])
    b = np.array(table)[: len(a)]
    m = b[:, 0] >= start - 1e-9
    d = np.abs(a[m] - b[m])
    return [("phi_lm_deg", d[:, 1].max(), tol_deg), ("phi_sm_deg", d[:, 2].max(), tol_deg),
            ("x_m", d[:, 3].max(), tol_m), ("y_m", d[:, 4].max(), tol_m)]


def cmd_reproduce(args) -> int:
    target = args.target
    names = ["table2", *TOC_SCENARIOS, "table9", "table10"] if target == "all" else [target]
    code = EXIT_OK
    for name in names:
        code = max(code, _reproduce_one(name, args))
    return code


def _reproduce_one(name: str, args) -> int:
    if name == "table2":
        samples = flatten(generate_scan(duration=0.4))
        header, rows, dec = _scan_rows(samples, args.table_format)
        write_csv(args.out, header, rows, dec)
        return _report(name, _scan_checks(samples, IDEAL_SCAN))
    if name in TOC_SCENARIOS:
        sc = TOC_SCENARIOS[name]
        prob = sc.problem()
        sol = solve(prob)
        print(json.dumps({name: sol.to_dict()}), file=args.stdout or sys.stdout)
        if not sol.converged:
            return _report(name, [("converged", 1.0, 0.0)])
        cert = certify(prob, sol)
        exp = sc.expected_intervals
        got = tuple(sol.intervals) + (0.0,) * (len(exp) - len(sol.intervals))
        worst = max(abs(a - b) for a, b in zip(got, exp)) if len(got) == len(exp) else math.inf
        return _report(name, [("intervals_s", worst, sc.tolerance),
                              ("total_time_s", abs(sol.total_time - sc.expected_total), sc.tolerance),
                              ("certificate", 0.0 if cert.sign_match else 1.0, 0.0)])
    if name in ("table9", "table10"):
        cfg = replace(RunConfig(), duration_s=args.duration or 2.0)
        samples = flatten(_tracked_passes(cfg, name == "table10"))
        header, rows, dec = _scan_rows(samples, args.table_format)
        write_csv(args.out, header, rows, dec)
        table = TRACKED_SCAN if name == "table9" else SYNCHRONIZED_SCAN
        checks = _scan_checks(samples, table, start=0.2, tol_deg=0.5, tol_m=3.5)
        if name == "table10" and cfg.duration_s >= SYNC_ROW[0]:
            row = next(s for s in samples if abs(s.t - SYNC_ROW[0]) < 1e-9)
            checks.append(("sync_row_deg", max(abs(row.phi_lm - SYNC_ROW[1]), abs(row.phi_sm - SYNC_ROW[2])), 0.5))
        return _report(name, checks)
    raise MirrorScanError(f"unknown reproduction target {name!r}")


def cmd_plot_data(args) -> int:
    cfg = _run_config(args)
    if args.kind == "track":
        res = run_tracking(cfg.plant_object(), cfg.controller(), cfg.demand(), cfg.duration_s,
                           J=cfg.params().J, record_every=args.record_every)
        series = res.series
    else:
        p = cfg.params()
        sig = InputSignal.step(args.volts) if args.kind == "step" else InputSignal.sinusoid(args.volts, args.frequency_hz)
        series = integrate_friction(build_third_order(p), p, np.zeros(3), sig, 1e-5, cfg.duration_s)
        step = max(1, int(round((args.record_every or 1e-4) / series.dt)))
        series = type(series)(series.dt * step, series.t0, {k: series[k][::step].copy() for k in series.channels})
    header, data = _series_rows(series)
    rows = [(f"{t:.6f}", name, f"{v:.6f}") for j, name in enumerate(header[1:], start=1)
            for t, v in zip(data[:, 0], data[:, j])]
    text = "t_s,channel,value\n" + "".join(",".join(r) + "\n" for r in rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_model_flags(p, order: bool = True):
    p.add_argument("--actuator", choices=("large", "small"))
    p.add_argument("--correction", choices=("none", "damping_x10", "zero_pivot_stiffness"))
    if order:
        p.add_argument("--order", type=int, choices=(2, 3), default=3)


def _add_run_flags(p):
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--plant", choices=("linear2", "linear3", "friction3"))
    p.add_argument("--u0", type=float)
    p.add_argument("--ts-control", type=float)
    p.add_argument("--ts-demand", type=float)
    p.add_argument("--no-prediction", action="store_true")
    p.add_argument("--target-mode", choices=("position_only", "position_velocity"))
    p.add_argument("--phase-shift-deg", type=float)
    p.add_argument("--duration", type=float)
    p.add_argument("--tc", type=float, help="Coulomb torque [N m]")
    p.add_argument("--demand", choices=("constant", "square", "sinusoid"))
    p.add_argument("--amplitude-deg", type=float)
    p.add_argument("--frequency", type=float, help="demand frequency [Hz]")
    p.add_argument("--record-every", type=float, help="output sample period [s]")
    p.add_argument("--out", help="CSV output path (stdout if omitted)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mirrorscan", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model-info", help="matrices, transfer function, eigenvalues, resonance")
    _add_model_flags(p)
    p.set_defaults(func=cmd_model_info)

    for name, func in (("step", cmd_step), ("sine", cmd_sine)):
        p = sub.add_parser(name, help=f"open-loop {name} response")
        _add_model_flags(p)
        _add_run_flags(p)
        p.add_argument("--volts", type=float, default=1.0)
        p.add_argument("--dt", type=float)
        if name == "sine":
            p.add_argument("--frequency-hz", type=float, default=2.5)
        p.set_defaults(func=func)

    p = sub.add_parser("bode", help="frequency response magnitude and phase")
    _add_model_flags(p)
    p.add_argument("--omega", type=float, nargs="+")
    p.add_argument("--start", type=float, default=0.1)
    p.add_argument("--stop", type=float, default=1e4)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bode)

    p = sub.add_parser("toc-solve", help="time-optimal bang-bang transfer from rest")
    _add_model_flags(p)
    p.add_argument("--u0", type=float, default=20.0)
    p.add_argument("--target-deg", type=float, required=True)
    p.add_argument("--accuracy", type=float, nargs="+", help="deg, deg/s[, A]")
    p.set_defaults(func=cmd_toc_solve)

    p = sub.add_parser("track", help="closed-loop tracking run")
    _add_model_flags(p, order=False)
    _add_run_flags(p)
    p.set_defaults(func=cmd_track)

    p = sub.add_parser("scan", help="scan pattern rows and per-pass files")
    _add_run_flags(p)
    p.add_argument("--source", choices=("ideal", "tracked", "synchronized"), default="ideal")
    p.add_argument("--pass-dir")
    p.add_argument("--table-format", action="store_true")
    p.set_defaults(func=cmd_scan, actuator=None, correction=None)

    p = sub.add_parser("calibrate", help="fit friction torque or mirror separation")
    p.add_argument("what", choices=("friction", "geometry"))
    _add_model_flags(p, order=False)
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("reproduce", help="rerun a reference table and compare")
    p.add_argument("target", choices=("all", "table2", *TOC_SCENARIOS, "table9", "table10"))
    p.add_argument("--out")
    p.add_argument("--duration", type=float)
    p.add_argument("--table-format", action="store_true")
    p.set_defaults(func=cmd_reproduce, stdout=None)

    p = sub.add_parser("plot-data", help="long-format CSV for plotting")
    p.add_argument("kind", choices=("track", "step", "sine"))
    _add_model_flags(p, order=False)
    _add_run_flags(p)
    p.add_argument("--volts", type=float, default=1.0)
    p.add_argument("--frequency-hz", type=float, default=2.5)
    p.set_defaults(func=cmd_plot_data)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (MirrorScanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
