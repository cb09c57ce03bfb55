"""Command-line front end: every computation as a subcommand.

Reports are machine readable (JSON by default, CSV on request), embed the
method provenance and achieved tolerance of every quantity, and are byte
identical across repeated runs so they can serve as regression baselines.
Exit codes: 0 success, 1 numeric failure (with a JSON error object),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import dilutegas, instanton, oracle, susyqm, zetadet
from .instanton import DoubleWellParams, InstantonConfig
from .oracle import GridSpec
from .specfun import QuadratureSpec

def _result(name, value, paper_ref, method, tolerance):
    if isinstance(value, float) and not math.isfinite(value):
        raise RuntimeError(f"non-finite result for {name}: {value!r}")
    return {"name": name, "value": value, "paper_ref": paper_ref,
            "method": method, "tolerance": tolerance}


def _quad_spec(tol):
    if tol is None:
        return QuadratureSpec()
    return QuadratureSpec(abs_tol=tol, rel_tol=tol)


def _cmd_action(args):
    p = DoubleWellParams(args.omega)
    spec = _quad_spec(args.tol)
    closed = instanton.classical_action(p)
    numeric = instanton.classical_action_quadrature(p, spec=spec)
    return [
        _result("S_e0", closed, "Eq 36", "closed_form", 0.0),
        _result("S_e0_quadrature", numeric, "Eq 7", "integrated", spec.abs_tol),
        _result("S_e0_consistency", abs(closed - numeric), "Eq 36",
                "cross_check", abs(closed - numeric)),
    ]


def _cmd_profile(args):
    p = DoubleWellParams(args.omega)
    cfg = InstantonConfig(p, args.tau_c)
    tau = np.linspace(args.tau_min, args.tau_max, args.samples)
    return [
        _result("tau", [float(t) for t in tau], "Eq 35", "grid", 0.0),
        _result("x_c", [float(v) for v in instanton.profile(cfg, tau)],
                "Eq 35", "closed_form", 0.0),
        _result("zero_mode", [float(v) for v in instanton.zero_mode(cfg, tau)],
                "Eq 40", "closed_form", 0.0),
        _result("stability_potential",
                [float(v) for v in instanton.stability_potential(p, tau - args.tau_c)],
                "Eq 39", "closed_form", 0.0),
    ]


def _cmd_spectrum(args):
    lv = susyqm.SusyLevel(args.ell)
    spec = GridSpec(args.half_width, args.points, kinetic_coefficient=1.0)
    system = oracle.grid_eigensystem(lv.potential, spec, args.count)
    rows = [
        _result(f"grid_eigenvalue_{i}", float(v), "Eq 102", "oracle",
                spec.spacing ** 2)
        for i, v in enumerate(system.eigenvalues)
    ]
    for m in range(args.ell):
        rows.append(_result(f"bound_energy_{m}", susyqm.bound_energy(lv, m),
                            "Eq 109", "closed_form", 0.0))
    rows.append(_result("continuum_edge", float(args.ell ** 2), "Eq 48",
                        "closed_form", 0.0))
    return rows


def _cmd_zeta(args):
    spec = _quad_spec(args.tol)
    rows = []
    k_int = zetadet.zeta_r(args.ell, args.s, "k_integral", spec)
    rows.append(_result("zeta_r", k_int.value, "Eq 56", "k_integral",
                        spec.abs_tol))
    if args.ell == 2:
        closed = zetadet.zeta_r(args.ell, args.s, "closed_form")
        rows.append(_result("zeta_r", closed.value, "Eq 57", "closed_form",
                            1e-11))
    if args.s > 0:
        mellin = zetadet.zeta_r(args.ell, args.s, "heat_kernel_mellin")
        rows.append(_result("zeta_r", mellin.value, "Eq 55", "heat_kernel_mellin",
                            1e-8))
    return rows


def _cmd_det_ratio(args):
    p = DoubleWellParams(args.omega)
    spec = _quad_spec(args.tol)
    ratio = zetadet.reduced_ratio_R(p, spec)
    zeta0 = zetadet.zeta_r(2, 0.0, "k_integral", spec).value
    zp_log = zetadet.zeta_r_prime0(2, "log_integral", spec)
    zp_gamma = zetadet.zeta_r_prime0(2, "gamma_hypergeometric", spec)
    return [
        _result("zeta_r_0", zeta0, "Eq 59", "k_integral", spec.abs_tol),
        _result("zeta_r_prime_0", zp_log, "Eq 73", "k_integral", spec.abs_tol),
        _result("zeta_r_prime_0", zp_gamma, "Eq 60", "closed_form", 1e-8),
        _result("q_value", ratio.q_value, "Eq 46", "k_integral", spec.abs_tol),
        _result("r_value", ratio.r_value, "Eq 75", "k_integral", spec.abs_tol),
    ]


def _cmd_oscillator(args):
    exact = zetadet.harmonic_amplitude(args.nu, args.T)
    asym = zetadet.harmonic_amplitude(args.nu, args.T, asymptote=True)
    product = zetadet.truncated_mode_product(args.nu, args.T, args.modes)
    gy = oracle.gelfand_yaglom_ratio(lambda t: args.nu ** 2, lambda t: 0.0,
                                     args.T)
    from_oracle = gy ** -0.5 / math.sqrt(2.0 * math.pi * args.T)
    return [
        _result("amplitude", exact, "Eq 32", "closed_form", 0.0),
        _result("amplitude_large_T", asym, "Eq 33", "closed_form", 0.0),
        _result("amplitude_mode_product", product, "Eq 25", "mode_product",
                abs(product - exact)),
        _result("amplitude_from_oracle", from_oracle, "Eq 19", "oracle",
                abs(from_oracle - exact)),
    ]


def _splitting_rows(report):
    rows = [
        _result("S_e0", 2.0 * report.omega / 3.0, "Eq 36", "closed_form", 0.0),
        _result("d", report.d, "Eq 84", "closed_form", 0.0),
        _result("E0_inst", report.E0_inst, "Eq 88", "closed_form", 0.0),
        _result("E1_inst", report.E1_inst, "Eq 89", "closed_form", 0.0),
        _result("delta_E_inst", report.splitting, "Eqs 88-89", "closed_form",
                0.0),
    ]
    if report.E0_oracle is not None:
        gap = report.E1_oracle - report.E0_oracle
        rows += [
            _result("E0_oracle", report.E0_oracle, "Eq 88", "oracle", 1e-3 * gap),
            _result("E1_oracle", report.E1_oracle, "Eq 89", "oracle", 1e-3 * gap),
            _result("delta_E_oracle", gap, "Eqs 88-89", "oracle", 1e-3 * gap),
            _result("ratio", report.ratio, "Eqs 88-89", "cross_check",
                    1e-3 * abs(report.ratio)),
        ]
    return rows


def _cmd_splitting(args):
    p = DoubleWellParams(args.omega)
    if args.with_oracle:
        report = dilutegas.compare_with_oracle(p)
    else:
        report = dilutegas.level_energies(p)
    return _splitting_rows(report)


_SWEEP_COLUMNS = ("omega", "S_e0", "d", "delta_E_inst", "delta_E_oracle", "ratio")


def _cmd_sweep(args):
    if args.omega_step <= 0:
        raise ValueError("--omega-step must be positive")
    rows = []
    omega = args.omega_min
    while omega <= args.omega_max + 1e-12 * args.omega_step:
        p = DoubleWellParams(omega)
        if args.with_oracle:
            rep = dilutegas.compare_with_oracle(p)
            oracle_gap = rep.E1_oracle - rep.E0_oracle
            ratio = rep.ratio
        else:
            rep = dilutegas.level_energies(p)
            oracle_gap = None
            ratio = None
        rows.append({"omega": omega, "S_e0": p.action, "d": rep.d,
                     "delta_E_inst": rep.splitting,
                     "delta_E_oracle": oracle_gap, "ratio": ratio})
        omega = round(omega + args.omega_step, 12)
    return [_result("sweep", rows, "Eqs 88-89", "oracle" if args.with_oracle
                    else "closed_form", 0.0)]


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _render_csv(args, results):
    lines = []
    if args.subcommand == "sweep":
        lines.append(",".join(_SWEEP_COLUMNS))
        for row in results[0]["value"]:
            lines.append(",".join(_fmt(row[c]) for c in _SWEEP_COLUMNS))
    elif args.subcommand == "profile":
        names = [r["name"] for r in results]
        lines.append(",".join(names))
        for sample in zip(*(r["value"] for r in results)):
            lines.append(",".join(_fmt(v) for v in sample))
    else:
        lines.append("name,value,paper_ref,method,tolerance")
        for r in results:
            lines.append(",".join(
                [r["name"], _fmt(r["value"]), r["paper_ref"], r["method"],
                 _fmt(r["tolerance"])]))
    return "\n".join(lines) + "\n"


def _render_json(args, results, status):
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "output", "out", "subcommand") and v is not None}
    report = {"subcommand": args.subcommand, "inputs": inputs,
              "results": results, "status": status}
    return json.dumps(report, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dwtunnel",
        description="double-well tunneling quantities with oracle cross-checks")
    parser.add_argument("--output", choices=("json", "csv"), default=None,
                        help="report format (default json; sweep defaults to csv)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")
    parser.add_argument("--tol", type=float, default=None,
                        help="override default quadrature tolerances")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("action", help="kink action, closed form vs quadrature")
    s.add_argument("--omega", type=float, required=True)
    s.set_defaults(func=_cmd_action)

    s = sub.add_parser("profile", help="kink profile, zero mode, fluctuation potential")
    s.add_argument("--omega", type=float, required=True)
    s.add_argument("--tau-c", type=float, default=0.0, dest="tau_c")
    s.add_argument("--tau-min", type=float, default=-5.0, dest="tau_min")
    s.add_argument("--tau-max", type=float, default=5.0, dest="tau_max")
    s.add_argument("--samples", type=int, default=101)
    s.set_defaults(func=_cmd_profile)

    s = sub.add_parser("spectrum", help="grid spectrum of the hyperbolic well")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--half-width", type=float, default=15.0, dest="half_width")
    s.add_argument("--points", type=int, default=4000)
    s.add_argument("--count", type=int, default=4)
    s.set_defaults(func=_cmd_spectrum)

    s = sub.add_parser("zeta", help="subtracted zeta function by every route")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--s", type=float, required=True)
    s.set_defaults(func=_cmd_zeta)

    s = sub.add_parser("det-ratio", help="reduced determinant ratio R and Q")
    s.add_argument("--omega", type=float, required=True)
    s.set_defaults(func=_cmd_det_ratio)

    s = sub.add_parser("oscillator", help="harmonic amplitude and mode product")
    s.add_argument("--nu", type=float, required=True)
    s.add_argument("--T", type=float, required=True)
    s.add_argument("--modes", type=int, default=10_000)
    s.set_defaults(func=_cmd_oscillator)

    s = sub.add_parser("splitting", help="doublet energies from the kink gas")
    s.add_argument("--omega", type=float, required=True)
    s.add_argument("--with-oracle", action="store_true", dest="with_oracle")
    s.set_defaults(func=_cmd_splitting)

    s = sub.add_parser("sweep", help="splitting table over an omega range")
    s.add_argument("--omega-min", type=float, required=True, dest="omega_min")
    s.add_argument("--omega-max", type=float, required=True, dest="omega_max")
    s.add_argument("--omega-step", type=float, required=True, dest="omega_step")
    s.add_argument("--with-oracle", action="store_true", dest="with_oracle")
    s.set_defaults(func=_cmd_sweep)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    output = args.output or ("csv" if args.subcommand == "sweep" else "json")
    try:
        results = args.func(args)
        text = (_render_csv(args, results) if output == "csv"
                else _render_json(args, results, "ok"))
        code = 0
    except (ValueError, RuntimeError) as exc:
        error = {"subcommand": args.subcommand, "status": "error",
                 "error": {"type": type(exc).__name__, "message": str(exc)}}
        text = json.dumps(error, indent=2) + "\n"
        code = 1
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
