"""Command-line front end.

Subcommands: ``report`` (bounds for a JSON state), ``example`` and
``scan-example`` (closed-form two-mode Gaussian), ``frontier`` (purity
frontier table), ``verify`` (randomized inequality sweep).

Exit codes: 0 success, 1 input error, 2 physics-invariant violation.
Numbers print with 12 significant digits so 1e-10 level slack is visible.
"""

import argparse
import json
import math
import sys

import numpy as np

from .bounds import bound_report
from .config import PhysConfig
from .errors import DomainError, IncompatibleRepresentationError, ValidationError
from .frontier import frontier_table, frontier_to_csv
from .twomode import saturation_scan, scan_to_csv
from .states import observable_from_obj, state_from_dict
from .verify import run_sweep, thread_budget

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PHYSICS = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; remap to the input-error code
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _round12(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}") if math.isfinite(obj) else obj
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cfg(args) -> PhysConfig:
    return PhysConfig(hbar=getattr(args, "hbar", 1.0))


def _cmd_report(args) -> int:
    with open(args.state) as fh:
        obj = json.load(fh)
    cfg = _cfg(args)
    state = state_from_dict(obj, cfg)
    if args.obs_json:
        with open(args.obs_json) as fh:
            specs = json.load(fh)
    else:
        specs = [s.strip() for s in args.obs.split(",") if s.strip()]
    if not 2 <= len(specs) <= 3:
        raise ValidationError(f"need 2 or 3 observables, got {len(specs)}")
    observables = [observable_from_obj(s, state, cfg) for s in specs]
    z3 = observables[2] if len(observables) == 3 else None
    report = bound_report(state, observables[0], observables[1], z3, cfg)
    _emit(json.dumps(_round12(report.to_dict()), indent=2) + "\n", args.out)
    if report.violated or report.gram_passed is False:
        return EXIT_PHYSICS
    return EXIT_OK


def _cmd_example(args) -> int:
    cfg = _cfg(args)
    rows = saturation_scan(
        a=args.a, c=args.c, re_grid=[args.b_re], im_grid=[args.b_im], cfg=cfg
    )
    if args.format == "json":
        payload = [_round12(vars(r)) for r in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(scan_to_csv(rows), args.out)
    if not rows[0].valid:
        return EXIT_INPUT
    return EXIT_OK


def _cmd_scan_example(args) -> int:
    cfg = _cfg(args)
    re_grid = np.arange(args.re_min, args.re_max + 0.5 * args.re_step, args.re_step)
    im_grid = np.arange(args.im_min, args.im_max + 0.5 * args.im_step, args.im_step)
    rows = saturation_scan(a=args.a, c=args.c, re_grid=re_grid, im_grid=im_grid, cfg=cfg)
    if args.format == "json":
        payload = [_round12(vars(r)) for r in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(scan_to_csv(rows), args.out)
    return EXIT_OK


def _cmd_frontier(args) -> int:
    points = frontier_table(args.mu_min, args.mu_max, args.steps, args.max_levels)
    if args.format == "json":
        payload = [
            _round12(
                {
                    "mu": p.mu,
                    "phi_exact": p.phi_exact,
                    "phi_tilde": p.phi_tilde,
                    "phi_asym": p.phi_asym,
                    "support": p.support_size,
                    "abs_diff_lead": p.abs_diff_lead,
                    "scaled_diff_lead": p.scaled_diff_lead,
                }
            )
            for p in points
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(frontier_to_csv(points), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    result = run_sweep(
        seed=args.seed,
        trials=args.trials,
        max_dim=args.dim,
        cfg=_cfg(args),
        threads=thread_budget(),
    )
    if args.rows_out:
        from .bounds import BOUND_CSV_HEADER

        _emit(BOUND_CSV_HEADER + "\n" + "\n".join(result.csv_rows) + "\n", args.rows_out)
    _emit("\n".join(result.summary_lines()) + "\n", args.out)
    return EXIT_OK if result.ok else EXIT_PHYSICS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="urbounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="evaluate every bound for a JSON state")
    p.add_argument("--state", required=True, help="path to a JSON state file")
    p.add_argument("--obs", default="x,p", help="comma-separated labels, e.g. x,p,y")
    p.add_argument("--obs-json", help="JSON file with labels or inline Hermitian matrices")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("example", help="closed-form two-mode Gaussian at one b")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--b-re", type=float, required=True)
    p.add_argument("--b-im", type=float, required=True)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("scan-example", help="saturation scan over complex b")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--re-min", type=float, default=-0.9)
    p.add_argument("--re-max", type=float, default=0.9)
    p.add_argument("--re-step", type=float, default=0.05)
    p.add_argument("--im-min", type=float, default=-0.9)
    p.add_argument("--im-max", type=float, default=0.9)
    p.add_argument("--im-step", type=float, default=0.05)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_scan_example)

    p = sub.add_parser("frontier", help="purity-frontier table")
    p.add_argument("--mu-min", type=float, required=True)
    p.add_argument("--mu-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--max-levels", type=int, default=256)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_frontier)

    p = sub.add_parser("verify", help="randomized sweep over every inequality")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--dim", type=int, default=8, help="maximum Hilbert-space dimension")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--rows-out", help="also write per-instance CSV rows here")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        ValidationError,
        DomainError,
        IncompatibleRepresentationError,
        ValueError,
        OSError,
        json.JSONDecodeError,
        KeyError,
    ) as exc:
        print(f"urbounds: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
