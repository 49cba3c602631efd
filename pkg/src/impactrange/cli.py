"""Command line front end.

Subcommands:
  ira       per-predictor impact table for a fitted or built-in model
  sweep     impact values over a grid of (background, points) settings
  ci-curve  average confidence-interval width versus repeat count
  synth     write one of the benchmark datasets as CSV
  perturb   local percent-perturbation table around a baseline row

Exit codes: 0 success, 1 data/model/protocol errors, 2 usage errors.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .baseline import DEFAULT_STEPS, perturbation_table
from .dataset import RangePolicy, load_csv, save_csv
from .engine import (
    GRID_LINEAR,
    GRID_UNIQUE,
    IraConfig,
    ci_width_curve,
    ira_repeated,
    ira_single,
)
from .errors import ImpactRangeError
from .models import connect_external, fit_ols, make_feed_mill_model
from .models.feedmill import FEED_MILL_PREDICTORS, feed_mill_means
from .models.forest import RandomForestRegression
from .reporting import (
    curve_to_csv,
    perturbation_to_csv,
    render_manifest,
    render_perturbation,
    render_table,
    report_to_csv,
    report_to_json,
    sweep_to_csv,
)
from .synth import gen_linear, gen_nonlinear, make_feed_mill_background

MODEL_CHOICES = ("ols", "rf", "feedmill", "external")


def _add_model_flags(sub):
    sub.add_argument("--data", help="CSV file with the reference dataset")
    sub.add_argument("--response", help="name of the response column")
    sub.add_argument("--model", choices=MODEL_CHOICES, default="ols")
    sub.add_argument("--external-cmd", help="command line of a predict server")
    sub.add_argument("--rf-trees", type=int, default=100)
    sub.add_argument("--rf-depth", type=int, default=None)
    sub.add_argument("--rf-min-split", type=int, default=2)
    sub.add_argument("--rf-max-features", type=int, default=None)
    sub.add_argument("--rf-no-bootstrap", action="store_true")


def _add_engine_flags(sub, repeats=True):
    sub.add_argument("--points", type=int, default=100, help="interpolated grid points")
    sub.add_argument("--background", type=int, default=200, help="background rows per predictor")
    if repeats:
        sub.add_argument("--repeats", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--grid", choices=("linear", "unique"), default="linear")
    sub.add_argument(
        "--range-quantiles",
        metavar="LO,HI",
        help="restrict sweeps to the empirical quantile band, e.g. 0.25,0.75",
    )
    sub.add_argument("--ci-lo", type=float, default=2.5)
    sub.add_argument("--ci-hi", type=float, default=97.5)
    sub.add_argument("--threads", type=int, default=0, help="worker threads (0 = auto)")


def _add_output_flags(sub):
    sub.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sub.add_argument("--output", help="write to this path instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="impactrange",
        description="Impact range analysis for regression models.",
    )
    parser.add_argument("--version", action="version", version=f"impactrange {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    ira = commands.add_parser("ira", help="per-predictor impact table")
    _add_model_flags(ira)
    _add_engine_flags(ira)
    _add_output_flags(ira)

    sweep = commands.add_parser("sweep", help="impact values over a (background, points) grid")
    _add_model_flags(sweep)
    _add_engine_flags(sweep, repeats=False)
    sweep.add_argument("--points-list", required=True, metavar="M1,M2,...")
    sweep.add_argument("--background-list", required=True, metavar="K1,K2,...")
    _add_output_flags(sweep)

    curve = commands.add_parser("ci-curve", help="CI width versus repeat count")
    _add_model_flags(curve)
    _add_engine_flags(curve, repeats=False)
    curve.add_argument("--repeats-list", required=True, metavar="R1,R2,...")
    _add_output_flags(curve)

    synth = commands.add_parser("synth", help="write a benchmark dataset as CSV")
    synth.add_argument("kind", choices=("linear", "nonlinear", "feedmill-bg"))
    synth.add_argument("--n", type=int, default=1000)
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", required=True)

    perturb = commands.add_parser("perturb", help="local percent-perturbation table")
    _add_model_flags(perturb)
    perturb.add_argument("--seed", type=int, default=0)
    perturb.add_argument(
        "--steps",
        default=",".join(str(int(s)) for s in DEFAULT_STEPS),
        metavar="S1,S2,...",
        help="percent steps applied to each predictor",
    )
    _add_output_flags(perturb)
    return parser


def _int_list(parser, text, flag):
    items = [chunk.strip() for chunk in text.split(",") if chunk.strip()]
    if not items:
        parser.error(f"{flag} must list at least one integer")
    try:
        return [int(chunk) for chunk in items]
    except ValueError:
        parser.error(f"{flag} must be a comma-separated list of integers")


def _float_list(parser, text, flag):
    items = [chunk.strip() for chunk in text.split(",") if chunk.strip()]
    if not items:
        parser.error(f"{flag} must list at least one number")
    try:
        return [float(chunk) for chunk in items]
    except ValueError:
        parser.error(f"{flag} must be a comma-separated list of numbers")


def _range_policy(parser, args):
    if getattr(args, "range_quantiles", None) is None:
        return RangePolicy()
    parts = args.range_quantiles.split(",")
    if len(parts) != 2:
        parser.error("--range-quantiles needs exactly LO,HI")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        parser.error("--range-quantiles must be two numbers")
    if not 0.0 <= lo < hi <= 1.0:
        parser.error("--range-quantiles must satisfy 0 <= LO < HI <= 1")
    return RangePolicy.quantile(lo, hi)


def _config(parser, args, repeats=None):
    policy = _range_policy(parser, args)
    grid_mode = GRID_LINEAR if args.grid == "linear" else GRID_UNIQUE
    if repeats is None:
        repeats = getattr(args, "repeats", 1)
    if args.points < 2:
        parser.error("--points must be at least 2")
    if args.background < 1:
        parser.error("--background must be at least 1")
    if repeats < 1:
        parser.error("--repeats must be at least 1")
    if not 0 < args.ci_lo < args.ci_hi < 100:
        parser.error("--ci-lo/--ci-hi must satisfy 0 < lo < hi < 100")
    return IraConfig(
        points=args.points,
        background=args.background,
        repeats=repeats,
        seed=args.seed,
        grid_mode=grid_mode,
        range_policy=policy,
        ci_lo=args.ci_lo,
        ci_hi=args.ci_hi,
    )


def _load_data(parser, args, required=True):
    if args.data is None:
        if required:
            parser.error("--data is required for this command")
        return None
    return load_csv(args.data, args.response)


def _build_model(parser, args, data):
    """(model, spec string, needs_close). Fitted models are seeded by --seed."""
    if args.model == "ols":
        if data is None or data.response is None:
            parser.error("--model ols needs --data and --response")
        return fit_ols(data), "ols", False
    if args.model == "rf":
        if data is None or data.response is None:
            parser.error("--model rf needs --data and --response")
        forest = RandomForestRegression(
            n_trees=args.rf_trees,
            max_depth=args.rf_depth,
            min_samples_split=args.rf_min_split,
            max_features=args.rf_max_features,
            bootstrap=not args.rf_no_bootstrap,
            seed=args.seed,
        ).fit(data.values, data.response)
        spec = f"rf(trees={args.rf_trees},depth={args.rf_depth},seed={args.seed})"
        return forest, spec, False
    if args.model == "feedmill":
        return make_feed_mill_model(), "feedmill", False
    if args.external_cmd is None:
        parser.error("--model external needs --external-cmd")
    expected = data.n_predictors if data is not None else None
    return connect_external(args.external_cmd, expected), "external", True


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _cmd_ira(parser, args):
    data = _load_data(parser, args)
    cfg = _config(parser, args)
    model, spec, needs_close = _build_model(parser, args, data)
    try:
        if cfg.repeats == 1:
            report = ira_single(model, data, cfg, threads=args.threads)
        else:
            report = ira_repeated(model, data, cfg, threads=args.threads)
    finally:
        if needs_close:
            model.close()
    if args.format == "json":
        _emit(report_to_json(report, spec, __version__), args.output)
    elif args.format == "csv":
        _emit(report_to_csv(report), args.output)
    else:
        _emit(render_table(report, spec, __version__), args.output)
    return 0


def _cmd_sweep(parser, args):
    points_list = _int_list(parser, args.points_list, "--points-list")
    background_list = _int_list(parser, args.background_list, "--background-list")
    data = _load_data(parser, args)
    base = _config(parser, args, repeats=1)
    model, spec, needs_close = _build_model(parser, args, data)
    rows = []
    try:
        for background in background_list:
            for points in points_list:
                cfg = IraConfig(
                    points=points,
                    background=background,
                    repeats=1,
                    seed=base.seed,
                    grid_mode=base.grid_mode,
                    range_policy=base.range_policy,
                    ci_lo=base.ci_lo,
                    ci_hi=base.ci_hi,
                )
                report = ira_single(model, data, cfg, threads=args.threads)
                for entry in report.predictors:
                    rows.append((background, points, entry.name, entry.ira))
    finally:
        if needs_close:
            model.close()
    text = sweep_to_csv(rows)
    if args.format == "table":
        text = render_manifest(base, spec, __version__) + "\n" + text
    _emit(text, args.output)
    return 0


def _cmd_ci_curve(parser, args):
    counts = _int_list(parser, args.repeats_list, "--repeats-list")
    for c in counts:
        if c < 2:
            parser.error("--repeats-list entries must be at least 2")
    data = _load_data(parser, args)
    cfg = _config(parser, args, repeats=1)
    model, spec, needs_close = _build_model(parser, args, data)
    try:
        curve = ci_width_curve(model, data, cfg, counts, threads=args.threads)
    finally:
        if needs_close:
            model.close()
    text = curve_to_csv(curve)
    if args.format == "table":
        text = render_manifest(cfg, spec, __version__) + "\n" + text
    _emit(text, args.output)
    return 0


def _cmd_synth(parser, args):
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.kind == "linear":
        ds = gen_linear(args.n, args.seed)
    elif args.kind == "nonlinear":
        ds = gen_nonlinear(args.n, args.seed)
    else:
        ds = make_feed_mill_background(args.n, args.seed)
    try:
        save_csv(ds, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_perturb(parser, args):
    steps = _float_list(parser, args.steps, "--steps")
    data = _load_data(parser, args, required=args.model != "feedmill")
    model, spec, needs_close = _build_model(parser, args, data)
    try:
        if data is not None:
            baseline = data.values.mean(axis=0)
            names = data.predictor_names
        else:  # feedmill without data: published mean vector
            baseline = np.asarray(feed_mill_means())
            names = tuple(row[0] for row in FEED_MILL_PREDICTORS)
        table = perturbation_table(model, baseline, steps=steps, predictor_names=names)
    finally:
        if needs_close:
            model.close()
    if args.format in ("csv", "json"):
        _emit(perturbation_to_csv(table), args.output)
    else:
        _emit(render_perturbation(table), args.output)
    return 0


_HANDLERS = {
    "ira": _cmd_ira,
    "sweep": _cmd_sweep,
    "ci-curve": _cmd_ci_curve,
    "synth": _cmd_synth,
    "perturb": _cmd_perturb,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](parser, args)
    except ImpactRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
