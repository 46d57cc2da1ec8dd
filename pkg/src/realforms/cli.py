"""Command-line front end.

Exit codes: 0 on success, 2 on input errors (bad expression, precondition
violated), 3 when a theorem report is inconsistent, which signals a bug.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import circle, roots
from .errors import FormError
from .experiments import ExperimentConfig, default_workers, theorem_fuzz, typical_rank_experiment
from .forms import BinaryForm, evaluate, hessian
from .parser import format_form, parse_form
from .rank import SearchBudget, decompose_from_apolar, real_rank
from .theorem import check_criterion_C, verify_corollary, verify_theorem1

SCHEMA_VERSION = 1
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


class InconsistentReport(Exception):
    def __init__(self, payload):
        super().__init__("inconsistent theorem report")
        self.payload = payload


def form_from_json(obj) -> BinaryForm:
    """``{"degree": 3, "coeffs": ["1", "0", "0", "1"]}`` with rationals as strings."""
    coeffs = obj["coeffs"]
    if any(not isinstance(c, (str, int)) or isinstance(c, bool) for c in coeffs):
        raise FormError("coefficients must be strings (or integers), never floats")
    f = BinaryForm(Fraction(c) for c in coeffs)
    if "degree" in obj and int(obj["degree"]) != f.degree:
        raise FormError(f"degree {obj['degree']} does not match {len(coeffs)} coefficients")
    return f


def read_form(text: str | None, path: str | None) -> BinaryForm:
    if path is not None:
        with open(path) as fh:
            text = fh.read()
    if text is None:
        raise FormError("a form is required (expression argument or --file)")
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return form_from_json(json.loads(stripped))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise FormError(f"bad coefficient JSON: {exc}") from exc
    return parse_form(stripped)


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_candidates=args.max_candidates,
        grid_bound=args.grid_bound,
        grid_mesh=Fraction(args.grid_mesh),
        seed=args.budget_seed,
    )


def _interval(lo, hi):
    return [str(lo), str(hi)]


# -- subcommands: each returns a dict payload (or raw text for CSV streams)


def cmd_roots(args):
    f = read_form(args.form, args.file)
    rc = roots.count_projective_real_roots(f)
    out = {
        "degree": f.degree,
        "realProjectiveRoots": rc.distinct_real_projective,
        "realAffineRoots": rc.distinct_real_affine,
        "rootAtInfinity": rc.has_root_at_infinity,
        "squarefree": rc.is_squarefree_over_c,
        "allRealDistinct": roots.has_n_distinct_real_roots(f),
    }
    if rc.is_squarefree_over_c:
        iso = roots.isolate_real_roots(f)
        if args.width:
            iso = iso.refine(Fraction(args.width))
        out["intervals"] = [_interval(lo, hi) for lo, hi in iso.intervals]
    return out


def cmd_disc(args):
    f = read_form(args.form, args.file)
    out = {"degree": f.degree, "discriminant": str(roots.discriminant_form(f))}
    if f.degree >= 2:
        out["resultantGradient"] = str(roots.resultant_gradient(f))
    return out


def cmd_hessian(args):
    f = read_form(args.form, args.file)
    h = hessian(f)
    out = {
        "degree": f.degree,
        "hessian": format_form(h),
        "hessianAt10": str(evaluate(h, 1, 0)),
        "hessianHasRealRoot": (not h.is_zero()) and h.degree >= 1 and roots.has_real_projective_root(h),
    }
    if f.degree >= 3 and roots.is_squarefree(f):
        out["criterionC"] = check_criterion_C(f)
    return out


def cmd_winding(args):
    f = read_form(args.form, args.file)
    if not roots.is_squarefree(f):
        raise FormError("winding numbers need a square-free form")
    maps = circle.MAPS if args.map == "both" else (args.map,)
    out = {"degree": f.degree}
    for m in maps:
        out[m] = circle.winding_number_numeric(f, m, args.steps).to_dict()
    try:
        out["phiExact"] = circle.degree_phi_exact(f)
    except FormError:
        out["phiExact"] = None
    return out


def cmd_rank(args):
    f = read_form(args.form, args.file)
    return real_rank(f, _budget(args)).to_dict()


def cmd_decompose(args):
    f = read_form(args.form, args.file)
    if args.apolar:
        dec = decompose_from_apolar(f, parse_form(args.apolar))
    else:
        cert = real_rank(f, _budget(args))
        if cert.witness is None:
            raise FormError("no decomposition witness found within the search budget")
        dec = cert.witness
    out = dec.to_dict()
    out["residual"] = dec.residual(f)
    out["rank"] = len(dec.terms)
    return out


def cmd_verify(args):
    f = read_form(args.form, args.file)
    report = verify_theorem1(f, args.steps).to_dict()
    ok = report["consistent"]
    if args.corollary:
        cor = verify_corollary(f, _budget(args)).to_dict()
        report["corollary"] = cor
        ok = ok and cor["consistent"]
    if not ok:
        raise InconsistentReport(report)
    return report


def cmd_experiment(args):
    if args.config:
        with open(args.config) as fh:
            config = ExperimentConfig.from_dict(json.load(fh))
    else:
        if args.degree is None:
            raise FormError("experiment needs --degree or --config")
        config = ExperimentConfig(
            degree=args.degree,
            samples=args.samples,
            seed=args.seed,
            distribution=args.distribution,
            budget=_budget(args),
            workers=args.workers if args.workers is not None else default_workers(),
        )
    run = typical_rank_experiment if args.kind == "rank" else theorem_fuzz
    report = run(config)
    if args.format == "csv":
        return report.to_csv()
    return report.to_dict()


def cmd_plot_data(args):
    f = read_form(args.form, args.file)
    if not roots.is_squarefree(f):
        raise FormError("plot data needs a square-free form")
    return circle.trajectory_csv(f, args.map, args.steps)


# -- output


def _flat_csv(payload: dict) -> str:
    flat = {k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in payload.items()}
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(flat.keys())
    w.writerow(flat.values())
    return buf.getvalue()


def _text(payload: dict) -> str:
    return "".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}\n" for k, v in payload.items())


def emit(payload, fmt, stream):
    if isinstance(payload, str):
        stream.write(payload)
        return
    payload = {"schemaVersion": SCHEMA_VERSION, **payload}
    if fmt == "csv":
        stream.write(_flat_csv(payload))
    elif fmt == "text":
        stream.write(_text(payload))
    else:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- parser


def _add_form(p):
    p.add_argument("form", nargs="?", help="form expression, e.g. 'x^2*y + x*y^2', or coefficient JSON")
    p.add_argument("--file", help="read the form (expression or coefficient JSON) from a file")


def _add_budget(p):
    d = SearchBudget()
    p.add_argument("--max-candidates", type=int, default=d.max_candidates)
    p.add_argument("--grid-bound", type=int, default=d.grid_bound)
    p.add_argument("--grid-mesh", default=str(d.grid_mesh))
    p.add_argument("--budget-seed", type=int, default=d.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realforms", description="Certified computations on real binary forms.")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    # also accepted after the subcommand; SUPPRESS keeps the global value when absent
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[fmt], help="certified real root count and isolating intervals")
    _add_form(p)
    p.add_argument("--width", help="refine intervals below this rational width")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("disc", parents=[fmt], help="discriminant and gradient resultant")
    _add_form(p)
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("hessian", parents=[fmt], help="Hessian form and its sign data")
    _add_form(p)
    p.set_defaults(func=cmd_hessian)

    p = sub.add_parser("winding", parents=[fmt], help="winding numbers of the normalized gradient maps")
    _add_form(p)
    p.add_argument("--map", choices=("phi", "psi", "both"), default="both")
    p.add_argument("--steps", type=int, default=None)
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("rank", parents=[fmt], help="certified real and complex Waring rank")
    _add_form(p)
    _add_budget(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("decompose", parents=[fmt], help="real Waring decomposition witness")
    _add_form(p)
    _add_budget(p)
    p.add_argument("--apolar", help="decompose from this apolar form instead of searching")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[fmt], help="check the all-real-roots criteria on one form")
    _add_form(p)
    _add_budget(p)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--corollary", action="store_true", help="also compare the real rank with the root count")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", parents=[fmt], help="seeded Monte Carlo experiments")
    p.add_argument("--kind", choices=("rank", "fuzz"), default="rank")
    p.add_argument("--config", help="JSON file with an experiment config")
    p.add_argument("--degree", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--distribution", choices=("gaussian_rationalized", "uniform_int"), default="gaussian_rationalized")
    p.add_argument("--workers", type=int, default=None, help="default: $REALFORMS_WORKERS or 1")
    _add_budget(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("plot-data", parents=[fmt], help="CSV samples of a circle map: theta,vx,vy,angular_velocity")
    _add_form(p)
    p.add_argument("--map", choices=("phi", "psi"), default="phi")
    p.add_argument("--steps", type=int, default=256)
    p.set_defaults(func=cmd_plot_data)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except InconsistentReport as exc:
        emit(exc.payload, args.format, stdout)
        stderr.write("error: inconsistent theorem report (this indicates a bug)\n")
        return EXIT_INCONSISTENT
    except (FormError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    emit(payload, args.format, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
