"""Command-line front end: point evaluation, sweeps, regime reports, selftest.

Subcommands:

    shift     breakdown of the shift at one parameter point
    scan      parameter sweep over z or a, written as CSV + sidecar JSON
    regime    regime classification and applicable asymptotes
    ratio     accelerated/static and thermal/accelerated comparators
    selftest  run the oracle suite and print a pass/fail table

CSV output is deterministic: fixed 17-significant-digit float formatting,
LF line endings, no timestamps in the data file (run metadata goes to a
``<out>.meta.json`` sidecar).  Exit codes: 2 invalid flags, 3 quadrature
failure, 4 unwritable output, 5 when some sweep rows failed.
"""

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .asymptotic import Regime, UnsupportedRegimeError, asymptote, classify
from .oracle import (
    OracleConfig,
    OracleInconclusive,
    OracleReport,
    analytic_limit_checks,
    dual_path_check,
    isotropic_reduction_check,
    rr_epsilon_regulated,
)
from .shift import ratios, shift_total
from .structfun import AccuracyError, QuadratureSettings, stat_functions
from .units import C_SI, AtomSpec, DomainError, Kinematics

CSV_COLUMNS = (
    "z_si", "a_si", "omega0", "az", "w0z",
    "total_reduced", "vf_reduced", "rr_reduced", "bracket",
    "regime", "ratio_to_static", "err_est", "error",
)

EXIT_BAD_FLAGS = 2
EXIT_QUADRATURE = 3
EXIT_UNWRITABLE = 4
EXIT_ROW_FAILURES = 5


def _fmt(x):
    """17-significant-digit float formatting, frozen for CSV stability."""
    return f"{x:.17g}"


def _parse_pol(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--pol expects px,py,pz")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _config_to_flags(path):
    """Translate a flat key=value file into an equivalent flag list."""
    flags = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            flags += [f"--{key.strip().replace('_', '-')}", val.strip()]
    return flags


def _to_kinematics(args):
    if args.units == "si":
        a = args.accel / C_SI
        z = args.z / C_SI
    else:
        a = args.accel
        z = args.z
    return Kinematics(a=a, z=z)


def _atom(args):
    px, py, pz = args.pol
    return AtomSpec(args.omega0, px, py, pz)


def _point_record(atom, kin):
    sf = stat_functions(atom.omega0, kin.z, kin.a)
    bd = shift_total(atom, kin)
    rc = classify(atom.omega0, kin.a, kin.z)
    return {
        "omega0": atom.omega0,
        "a_si": kin.a * C_SI,
        "z_si": kin.z * C_SI,
        "az": kin.az,
        "w0z": atom.omega0 * kin.z,
        "vf_reduced": bd.vf_reduced,
        "rr_reduced": bd.rr_reduced,
        "total_reduced": bd.total_reduced,
        "bracket": bd.bracket,
        "err_est": bd.err_est,
        "regime": rc.regime.value,
        "stat_functions": {
            "f_xx": sf.f_xx, "f_yy": sf.f_yy, "f_zz": sf.f_zz, "f_xz": sf.f_xz,
            "g_xx": sf.g_xx, "g_yy": sf.g_yy, "g_zz": sf.g_zz, "g_xz": sf.g_xz,
            "nbar2": sf.nbar2,
        },
    }


def cmd_shift(args):
    atom = _atom(args)
    kin = _to_kinematics(args)
    rec = _point_record(atom, kin)
    if args.format == "json":
        print(json.dumps(rec, indent=2, sort_keys=True))
    elif args.format == "csv":
        keys = [k for k in rec if k != "stat_functions"]
        print(",".join(keys))
        print(",".join(_fmt(rec[k]) if isinstance(rec[k], float) else str(rec[k])
                       for k in keys))
    else:
        print(f"regime: {rec['regime']}")
        for k in ("vf_reduced", "rr_reduced", "total_reduced", "bracket",
                  "err_est"):
            print(f"{k}: {_fmt(rec[k])}")
        for k, v in rec["stat_functions"].items():
            print(f"{k}: {_fmt(v)}")
    return 0


def cmd_ratio(args):
    atom = _atom(args)
    kin = _to_kinematics(args)
    res = ratios(atom, kin)
    rec = {
        "ratio_to_static": None if res.ratio_indeterminate else res.ratio_to_static,
        "ratio_indeterminate": res.ratio_indeterminate,
        "ratio_thermal_to_accel": (None if math.isnan(res.ratio_thermal_to_accel)
                                   else res.ratio_thermal_to_accel),
        "thermal_asymptote_value": res.thermal_asymptote_value,
        "thermal_valid": res.thermal_valid,
    }
    if args.format == "json":
        print(json.dumps(rec, indent=2, sort_keys=True))
    else:
        for k, v in rec.items():
            print(f"{k}: {v if not isinstance(v, float) else _fmt(v)}")
    return 0


def cmd_regime(args):
    atom = _atom(args)
    kin = _to_kinematics(args)
    rc = classify(atom.omega0, kin.a, kin.z, args.strictness)
    print(f"regime: {rc.regime.value}")
    print(f"margin: {_fmt(rc.margin)}")
    for k, v in rc.groups.items():
        print(f"{k}: {_fmt(v)}")
    if rc.regime is not Regime.AMBIGUOUS:
        rep = asymptote(rc, atom, kin)
        print(f"asymptote_total: {_fmt(rep.asymptote_total)}")
        if not math.isnan(rep.asymptote_vf):
            print(f"asymptote_vf: {_fmt(rep.asymptote_vf)}")
            print(f"asymptote_rr: {_fmt(rep.asymptote_rr)}")
        print(f"exact_total: {_fmt(rep.exact_total)}")
        print(f"rel_deviation: {_fmt(rep.rel_deviation)}")
        if rep.note:
            print(f"note: {rep.note}")
    return 0


def _sweep_grid(args):
    lo, hi, n = args.range_from, args.range_to, args.points
    if not (lo < hi):
        raise DomainError("--from must be less than --to")
    if n < 2:
        raise DomainError("--points must be at least 2")
    if args.spacing == "log":
        if lo <= 0:
            raise DomainError("log spacing requires --from > 0")
        ratio = (hi / lo) ** (1.0 / (n - 1))
        return [lo * ratio**i for i in range(n)]
    step = (hi - lo) / (n - 1)
    return [lo + step * i for i in range(n)]


def _scan_row(atom, fixed_kin, var, value, units, with_ratio):
    if units == "si":
        value_nat = value / C_SI
    else:
        value_nat = value
    if var == "z":
        kin = Kinematics(a=fixed_kin.a, z=value_nat)
    else:
        kin = Kinematics(a=value_nat, z=fixed_kin.z)
    row = dict.fromkeys(CSV_COLUMNS, "")
    row["z_si"] = _fmt(kin.z * C_SI)
    row["a_si"] = _fmt(kin.a * C_SI)
    row["omega0"] = _fmt(atom.omega0)
    row["az"] = _fmt(kin.az)
    row["w0z"] = _fmt(atom.omega0 * kin.z)
    try:
        bd = shift_total(atom, kin)
        rc = classify(atom.omega0, kin.a, kin.z)
        row["total_reduced"] = _fmt(bd.total_reduced)
        row["vf_reduced"] = _fmt(bd.vf_reduced)
        row["rr_reduced"] = _fmt(bd.rr_reduced)
        row["bracket"] = _fmt(bd.bracket)
        row["regime"] = rc.regime.value
        row["err_est"] = _fmt(bd.err_est)
        if with_ratio:
            res = ratios(atom, kin)
            row["ratio_to_static"] = ("NA" if res.ratio_indeterminate
                                      else _fmt(res.ratio_to_static))
        else:
            row["ratio_to_static"] = "NA"
    except (AccuracyError, DomainError) as exc:
        row["error"] = str(exc).replace(",", ";").replace("\n", " ")
    return row


def cmd_scan(args):
    atom = _atom(args)
    fixed_kin = _to_kinematics(args)
    grid = _sweep_grid(args)
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("ACCELSHIFT_THREADS", "1"))

    t0 = time.monotonic()
    work = [(i, v) for i, v in enumerate(grid)]
    results = [None] * len(grid)

    def run(item):
        i, v = item
        results[i] = _scan_row(atom, fixed_kin, args.var, v, args.units,
                               args.ratio)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, work))
    else:
        for item in work:
            run(item)
    wall = time.monotonic() - t0

    lines = [",".join(CSV_COLUMNS)]
    lines += [",".join(row[c] for c in CSV_COLUMNS) for row in results]
    payload = "\n".join(lines) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
        meta = {
            "command_line": sys.argv[1:],
            "version": __version__,
            "settings": {
                "var": args.var, "from": args.range_from, "to": args.range_to,
                "points": args.points, "spacing": args.spacing,
                "units": args.units, "threads": threads,
            },
            "wall_time_s": wall,
        }
        with open(args.out + ".meta.json", "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    if any(row["error"] for row in results):
        return EXIT_ROW_FAILURES
    return 0


def cmd_selftest(args):
    skip = set(args.skip or [])
    reports = []
    t0 = time.monotonic()
    reports.append(dual_path_check())
    reports.append(isotropic_reduction_check(1.0, 1e-3, 1e-2))
    reports.append(analytic_limit_checks())
    if "epsilon" not in skip:
        pinned = [("xx", 1.0, 1.0, 1.0), ("xx", 1.0, 0.5, 2.0),
                  ("xz", 1.0, 1.0, 1.0)]
        for comp, w, z, a in pinned:
            name = f"rr_epsilon_regulated[{comp}@w={w},z={z},a={a}]"
            try:
                val, rep = rr_epsilon_regulated(comp, w, z, a, OracleConfig())
                closed = rep["closed_form"]
                ok = abs(val - closed) <= 0.01 * abs(closed)
                details = {"value": val, "closed_form": closed}
            except OracleInconclusive as exc:
                ok, details = False, {"inconclusive": str(exc)}
            reports.append(OracleReport(name, ok, details))
    wall = time.monotonic() - t0

    all_ok = True
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        all_ok = all_ok and rep.passed
        print(f"[{status}] {rep.name}")
    print(f"selftest wall time: {wall:.1f} s")
    if args.json:
        payload = [{"name": r.name, "passed": r.passed, "details": r.details}
                   for r in reports]
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
    return 0 if all_ok else 1


def _add_point_flags(p):
    p.add_argument("--omega0", type=float, required=True,
                   help="transition frequency, rad/s")
    p.add_argument("--accel", type=float, required=True,
                   help="proper acceleration (m/s^2 in SI mode, rad/s natural)")
    p.add_argument("--z", type=float, required=True,
                   help="wall distance (m in SI mode, seconds natural)")
    p.add_argument("--units", choices=("si", "natural"), default="si")
    p.add_argument("--pol", type=_parse_pol,
                   default=(1 / 3, 1 / 3, 1 / 3),
                   help="polarization weights px,py,pz (sum to 1)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="accelshift",
        description="Boundary-induced level shift of an accelerated atom "
                    "near a conducting plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shift", help="evaluate the shift at one point")
    _add_point_flags(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("ratio", help="comparator ratios at one point")
    _add_point_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("regime", help="regime classification and asymptotes")
    _add_point_flags(p)
    p.add_argument("--strictness", type=float, default=10.0)
    p.set_defaults(func=cmd_regime)

    p = sub.add_parser("scan", help="sweep z or a and write a CSV")
    _add_point_flags(p)
    p.add_argument("--var", choices=("z", "a"), required=True,
                   help="swept variable (the matching point flag is ignored)")
    p.add_argument("--from", dest="range_from", type=float, required=True)
    p.add_argument("--to", dest="range_to", type=float, required=True)
    p.add_argument("--points", type=int, default=100)
    p.add_argument("--spacing", choices=("linear", "log"), default="log")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--ratio", action="store_true",
                   help="fill the ratio_to_static column")
    p.add_argument("--threads", type=int, default=None,
                   help="row-parallel workers (default: ACCELSHIFT_THREADS or 1)")
    p.add_argument("--config", help="flat key=value config file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selftest", help="run the oracle suite")
    p.add_argument("--skip", action="append", choices=("epsilon",),
                   help="skip a named oracle group")
    p.add_argument("--json", help="write the report table as JSON")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        # config values become flags inserted before the explicit ones,
        # so the command line wins by argparse's last-one-wins rule
        try:
            extra = _config_to_flags(args.config)
            args = parser.parse_args([argv[0]] + extra + list(argv[1:]))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_FLAGS
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_BAD_FLAGS
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_FLAGS
    except AccuracyError as exc:
        print(f"error: quadrature failure: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE


if __name__ == "__main__":
    sys.exit(main())
