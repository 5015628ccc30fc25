"""Command-line front end: evaluate quantities, integrate, verify, tabulate.

Exit codes are stable across commands: 0 success, 1 verification failure,
2 invalid input, 3 runtime domain escape.  Complex values are passed as a
single flag with comma-separated real and imaginary parts ("--z 1.0,0.5");
a JSON config file (flag --config or the JACOBI_CS_CONFIG environment
variable) provides defaults that individual flags override.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import geodesics, geometry, kernels
from .core import (
    BoundaryEscape,
    BoundaryViolation,
    InvalidK,
    JacobiPoint,
    ModelParams,
    NonFinite,
    TangentVector,
    make_jacobi_point,
    eta_of,
)
from .geodesics import GeodesicState
from .verify import SUITE_NAMES, VerifyConfig, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3

_DEFAULTS = {
    "k": 1.0,
    "mu": 1.0,
    "n_max": 40,
    "m_max": 40,
    "fd_step": 1e-4,
    "rk4_step": 1e-3,
    "seed": 0,
    "mc_samples": 1_000_000,
    "tolerances": {},
}


def parse_complex(text: str) -> complex:
    """Parse 're' or 're,im' into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def parse_range(text: str) -> np.ndarray:
    """Parse 'start:stop:count' (or one value) into sample positions."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) == 3:
            count = int(parts[2])
            if count < 0:
                raise ValueError
            return np.linspace(float(parts[0]), float(parts[1]), count)
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(
        f"expected 'value' or 'start:stop:count', got {text!r}")


def load_config(path: str | None) -> dict:
    merged = dict(_DEFAULTS)
    source = path or os.environ.get("JACOBI_CS_CONFIG")
    if source:
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
        for key, value in data.items():
            if key not in merged:
                raise ValueError(f"unknown config key {key!r}")
            merged[key] = value
    return merged


def _settings(args: argparse.Namespace) -> dict:
    cfg = load_config(getattr(args, "config", None))
    for key in ("k", "mu", "fd_step", "rk4_step", "seed", "mc_samples",
                "n_max", "m_max"):
        override = getattr(args, key, None)
        if override is not None:
            cfg[key] = override
    return cfg


def _point(args: argparse.Namespace) -> JacobiPoint:
    return make_jacobi_point(args.z, args.w)


_EVAL_QUANTITIES = ("kernel", "potential", "metric", "ricci",
                    "scalar-curvature", "diastasis", "berezin",
                    "christoffel", "volume", "eta")


def _eval_value(quantity: str, zeta: JacobiPoint, zeta2: JacobiPoint,
                params: ModelParams) -> dict:
    if quantity == "kernel":
        v = kernels.jacobi_kernel(zeta, zeta2, params)
        return {"re": v.real, "im": v.imag}
    if quantity == "potential":
        return {"value": kernels.kahler_potential(zeta, params)}
    if quantity == "metric":
        h = geometry.metric(zeta, params)
        return {"h_zz": h.h_zz, "h_zw_re": h.h_zw.real,
                "h_zw_im": h.h_zw.imag, "h_ww": h.h_ww}
    if quantity == "ricci":
        r = geometry.ricci(zeta, params)
        return {"r_zz": r.r_zz, "r_zw_re": r.r_zw.real,
                "r_zw_im": r.r_zw.imag, "r_ww": r.r_ww}
    if quantity == "scalar-curvature":
        return {"value": geometry.scalar_curvature(zeta, params)}
    if quantity == "diastasis":
        return {"value": kernels.diastasis(zeta, zeta2, params)}
    if quantity == "berezin":
        return {"value": kernels.berezin_kernel(zeta, zeta2, params)}
    if quantity == "christoffel":
        g = geodesics.christoffel(zeta, params)
        return {name: [val.real, val.imag] for name, val in (
            ("g_zzz", g.g_zzz), ("g_wzz", g.g_wzz), ("g_zzw", g.g_zzw),
            ("g_wwz", g.g_wwz), ("g_zww", g.g_zww), ("g_www", g.g_www))}
    if quantity == "volume":
        return {"value": geometry.volume_density(zeta, params)}
    if quantity == "eta":
        v = eta_of(zeta)
        return {"re": v.real, "im": v.imag}
    raise ValueError(f"unknown quantity {quantity!r}")


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    params = ModelParams(cfg["k"], cfg["mu"])
    zeta = _point(args)
    zeta2 = make_jacobi_point(args.z2 if args.z2 is not None else args.z,
                              args.w2 if args.w2 is not None else args.w)
    record = {
        "quantity": args.quantity,
        "inputs": {"k": params.k, "mu": params.mu,
                   "z": [zeta.z.real, zeta.z.imag],
                   "w": [zeta.w.real, zeta.w.imag]},
        "value": _eval_value(args.quantity, zeta, zeta2, params),
    }
    if args.quantity in ("kernel", "diastasis", "berezin"):
        record["inputs"]["z2"] = [zeta2.z.real, zeta2.z.imag]
        record["inputs"]["w2"] = [zeta2.w.real, zeta2.w.imag]
    print(json.dumps(record))
    return EXIT_OK


def _closed_form_residual(path: geodesics.GeodesicPath, s0: GeodesicState,
                          params: ModelParams) -> float | None:
    """Residual against a closed-form solution when one covers the start state."""
    z0, w0 = s0.pos.z, s0.pos.w
    dz0, dw0 = s0.vel.dz, s0.vel.dw
    if abs(w0) > 0:
        return None
    reference = None
    if params.mu == 0.0 and dw0 != 0:
        reference = lambda t: geodesics.mu_zero_solution(dz0, z0, dw0, t)
    elif abs(dz0 + z0.conjugate() * dw0) < 1e-14:
        # constant-eta family: z0 = eta0 at w0 = 0, velocity locked to it
        reference = lambda t: geodesics.fc_particular_solution(z0, dw0, t)
    if reference is None:
        return None
    residual = 0.0
    stride = max(1, len(path.samples) // 50)
    for t, s in path.samples[::stride]:
        ref = reference(t)
        residual = max(residual, abs(s.pos.z - ref.pos.z),
                       abs(s.pos.w - ref.pos.w))
    return residual


def cmd_geodesic(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    params = ModelParams(cfg["k"], cfg["mu"])
    state = GeodesicState(_point(args), TangentVector(args.dz, args.dw))
    n_steps = args.steps or max(1, round(args.t_end / cfg["rk4_step"]))
    try:
        path = geodesics.integrate(state, args.t_end, n_steps, params)
    except BoundaryEscape as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"error": "boundary escape", "t": exc.t}))
        return EXIT_DOMAIN
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        path.write_csv(fh, params)
    end = path.endpoint()
    e0 = geometry.tangent_norm(path.samples[0][1].pos,
                               path.samples[0][1].vel, params)
    drift = max(abs(geometry.tangent_norm(s.pos, s.vel, params) - e0)
                for _, s in path.samples)
    summary = {
        "final": {"t": path.samples[-1][0],
                  "z": [end.pos.z.real, end.pos.z.imag],
                  "w": [end.pos.w.real, end.pos.w.imag]},
        "length": geodesics.curve_length(path, params),
        "energy_drift": drift,
        "closed_form_residual": _closed_form_residual(path, state, params),
        "csv": args.out,
    }
    print(json.dumps(summary))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    vcfg = VerifyConfig(
        k=cfg["k"], mu=cfg["mu"],
        truncation=kernels.TruncationOrder(cfg["n_max"], cfg["m_max"]),
        fd_step=cfg["fd_step"], rk4_step=cfg["rk4_step"],
        seed=cfg["seed"], mc_samples=cfg["mc_samples"],
        tolerances=dict(cfg["tolerances"]),
    )
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    report = run_suites(names, vcfg)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["pass"] else EXIT_VERIFY_FAIL


def cmd_table(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    params = ModelParams(cfg["k"], cfg["mu"])
    header = ["re_z", "im_z", "re_w", "im_w"]
    quantity = args.quantity
    origin = make_jacobi_point(0.0, 0.0)   # reference for two-point quantities
    rows = []
    for x in map(float, args.re_z):
        for y in map(float, args.im_z):
            for u in map(float, args.re_w):
                for v in map(float, args.im_w):
                    zeta = make_jacobi_point(complex(x, y), complex(u, v))
                    values = _eval_value(quantity, zeta, origin, params)
                    rows.append(([x, y, u, v], values))
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        if rows:
            value_keys = sorted(rows[0][1])
            print(",".join(header + value_keys), file=out)
            for coords, values in rows:
                cells = [repr(c) for c in coords]
                for key in value_keys:
                    cell = values[key]
                    cells.append(repr(cell) if not isinstance(cell, list)
                                 else repr(complex(cell[0], cell[1])))
                print(",".join(cells), file=out)
        else:
            print(",".join(header + ["value"]), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi-cs",
        description="Evaluate, integrate, and verify the coherent-state "
                    "geometry of the product of the plane and the disk.")
    parser.add_argument("--config", help="JSON config file "
                        "(also via JACOBI_CS_CONFIG)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=argparse.SUPPRESS)
    common.add_argument("--k", type=float, default=None)
    common.add_argument("--mu", type=float, default=None)
    common.add_argument("--fd-step", dest="fd_step", type=float, default=None)
    common.add_argument("--rk4-step", dest="rk4_step", type=float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--mc-samples", dest="mc_samples", type=int, default=None)
    common.add_argument("--n-max", dest="n_max", type=int, default=None,
                        help="series truncation in the flat index; "
                        "convergence is governed by mu |z|^2")
    common.add_argument("--m-max", dest="m_max", type=int, default=None,
                        help="series truncation in the disk index; "
                        "convergence is governed by |w|")

    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate one quantity at a point")
    p_eval.add_argument("quantity", choices=_EVAL_QUANTITIES)
    p_eval.add_argument("--z", type=parse_complex, default=0j)
    p_eval.add_argument("--w", type=parse_complex, default=0j)
    p_eval.add_argument("--z2", type=parse_complex, default=None)
    p_eval.add_argument("--w2", type=parse_complex, default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_geo = sub.add_parser("geodesic", parents=[common],
                           help="integrate the geodesic system to CSV")
    p_geo.add_argument("--z", type=parse_complex, default=0j)
    p_geo.add_argument("--w", type=parse_complex, default=0j)
    p_geo.add_argument("--dz", type=parse_complex, default=0j)
    p_geo.add_argument("--dw", type=parse_complex, default=0j)
    p_geo.add_argument("--t-end", dest="t_end", type=float, default=1.0)
    p_geo.add_argument("--steps", type=int, default=None)
    p_geo.add_argument("--out", default="geodesic.csv")
    p_geo.set_defaults(func=cmd_geodesic)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="run a verification suite")
    p_ver.add_argument("suite", choices=list(SUITE_NAMES) + ["all"])
    p_ver.set_defaults(func=cmd_verify)

    p_tab = sub.add_parser("table", parents=[common],
                           help="tabulate a quantity over a coordinate grid")
    p_tab.add_argument("quantity", choices=_EVAL_QUANTITIES)
    p_tab.add_argument("--re-z", dest="re_z", type=parse_range,
                       default=np.array([0.0]))
    p_tab.add_argument("--im-z", dest="im_z", type=parse_range,
                       default=np.array([0.0]))
    p_tab.add_argument("--re-w", dest="re_w", type=parse_range,
                       default=np.array([0.0]))
    p_tab.add_argument("--im-w", dest="im_w", type=parse_range,
                       default=np.array([0.0]))
    p_tab.add_argument("--out", default="-")
    p_tab.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BoundaryViolation, NonFinite, InvalidK, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
