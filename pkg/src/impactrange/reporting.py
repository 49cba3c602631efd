"""Report rendering and machine-readable serialization.

Terminal tables round to two decimals; CSV and JSON carry full precision
(shortest round-trip decimals) so re-parsing reproduces the in-memory
report exactly.
"""

import json

from .dataset import RangePolicy
from .engine import IraConfig, IraReport, PredictorImpact


def _fmt(value):
    return repr(float(value))


def config_manifest(config: IraConfig, model_spec, version):
    """Reproducibility manifest: everything that determines the numbers."""
    policy = {"mode": config.range_policy.mode}
    if config.range_policy.mode == "quantile":
        policy["lo"] = config.range_policy.lo
        policy["hi"] = config.range_policy.hi
    return {
        "version": version,
        "model": model_spec,
        "seed": config.seed,
        "points": config.points,
        "background": config.background,
        "repeats": config.repeats,
        "grid_mode": config.grid_mode,
        "range_policy": policy,
        "ci_lo": config.ci_lo,
        "ci_hi": config.ci_hi,
    }


def report_to_json(report: IraReport, model_spec, version) -> str:
    predictors = []
    for entry in report.predictors:
        item = {"name": entry.name, "ira": entry.ira}
        if entry.samples is not None:
            item["mean"] = entry.mean_ira
            item["ci_lower"] = entry.ci_lower
            item["ci_upper"] = entry.ci_upper
            item["samples"] = list(entry.samples)
        predictors.append(item)
    payload = {
        "config": config_manifest(report.config, model_spec, version),
        "predictors": predictors,
    }
    return json.dumps(payload, indent=2) + "\n"


def predictors_from_json(text):
    """Parse a JSON report back into PredictorImpact entries."""
    payload = json.loads(text)
    entries = []
    for item in payload["predictors"]:
        if "samples" in item:
            entries.append(
                PredictorImpact(
                    name=item["name"],
                    ira=item["ira"],
                    mean_ira=item["mean"],
                    ci_lower=item["ci_lower"],
                    ci_upper=item["ci_upper"],
                    samples=tuple(item["samples"]),
                )
            )
        else:
            entries.append(PredictorImpact(name=item["name"], ira=item["ira"]))
    return tuple(entries)


def report_to_csv(report: IraReport) -> str:
    lines = ["name,ira,mean,ci_lower,ci_upper,samples"]
    for entry in report.predictors:
        if entry.samples is None:
            lines.append(f"{entry.name},{_fmt(entry.ira)},,,,")
        else:
            samples = ";".join(_fmt(v) for v in entry.samples)
            lines.append(
                f"{entry.name},{_fmt(entry.ira)},{_fmt(entry.mean_ira)},"
                f"{_fmt(entry.ci_lower)},{_fmt(entry.ci_upper)},{samples}"
            )
    return "\n".join(lines) + "\n"


def predictors_from_csv(text):
    lines = [line for line in text.splitlines() if line]
    entries = []
    for line in lines[1:]:
        name, ira, mean, lo, hi, samples = line.split(",")
        if samples:
            entries.append(
                PredictorImpact(
                    name=name,
                    ira=float(ira),
                    mean_ira=float(mean),
                    ci_lower=float(lo),
                    ci_upper=float(hi),
                    samples=tuple(float(v) for v in samples.split(";")),
                )
            )
        else:
            entries.append(PredictorImpact(name=name, ira=float(ira)))
    return tuple(entries)


def render_manifest(config: IraConfig, model_spec, version) -> str:
    policy = config.range_policy
    policy_text = (
        "full" if policy.mode == "full" else f"quantile({policy.lo},{policy.hi})"
    )
    return (
        f"impactrange {version}  model={model_spec}  seed={config.seed}  "
        f"points={config.points}  background={config.background}  "
        f"repeats={config.repeats}  grid={config.grid_mode}  range={policy_text}  "
        f"ci=({config.ci_lo},{config.ci_hi})"
    )


def render_table(report: IraReport, model_spec, version) -> str:
    """Two-decimal table sorted by descending impact."""
    entries = report.order_by_impact()
    width = max(9, max(len(e.name) for e in entries))
    lines = [render_manifest(report.config, model_spec, version)]
    if report.config.repeats > 1:
        lines.append(
            f"{'predictor':<{width}}  {'mean_ira':>9}  {'ci_lower':>9}  {'ci_upper':>9}"
        )
        for e in entries:
            lines.append(
                f"{e.name:<{width}}  {e.mean_ira:>9.2f}  {e.ci_lower:>9.2f}  {e.ci_upper:>9.2f}"
            )
    else:
        lines.append(f"{'predictor':<{width}}  {'ira':>9}")
        for e in entries:
            lines.append(f"{e.name:<{width}}  {e.ira:>9.2f}")
    return "\n".join(lines) + "\n"


def sweep_to_csv(rows) -> str:
    """Long-format sweep output: one row per (background, points, predictor)."""
    lines = ["background,points,predictor,ira"]
    for background, points, name, ira in rows:
        lines.append(f"{background},{points},{name},{_fmt(ira)}")
    return "\n".join(lines) + "\n"


def curve_to_csv(pairs) -> str:
    lines = ["repeats,avg_ci_width"]
    for repeats, width in pairs:
        lines.append(f"{repeats},{_fmt(width)}")
    return "\n".join(lines) + "\n"


def perturbation_to_csv(table) -> str:
    header = "predictor," + ",".join(_fmt(s) for s in table.steps)
    lines = [header]
    for i, name in enumerate(table.predictor_names):
        lines.append(name + "," + ",".join(_fmt(v) for v in table.entries[i]))
    return "\n".join(lines) + "\n"


def render_perturbation(table) -> str:
    """Three-decimal percent-change table, one row per predictor."""
    width = max(9, max(len(n) for n in table.predictor_names))
    header = f"{'predictor':<{width}}" + "".join(f"{s:>9.0f}%" for s in table.steps)
    lines = [header]
    for i, name in enumerate(table.predictor_names):
        lines.append(
            f"{name:<{width}}" + "".join(f"{v:>10.3f}" for v in table.entries[i])
        )
    return "\n".join(lines) + "\n"
