"""Impact range analysis.

For each predictor: sweep it over its observed range on a grid, hold every
other column at values taken from background rows resampled from the data,
predict the whole sweep, and average the per-row prediction spread
(max - min). The average is that predictor's impact range; repeating the
procedure with fresh background draws yields a sample of impact values and
percentile confidence intervals.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
from sklearn.base import BaseEstimator

from .dataset import Dataset, RangePolicy, effective_range
from .errors import ConfigError, ModelEvaluationError
from .rng import ENGINE_STREAM, substream
from .validation import check_predictions, model_n_features

GRID_LINEAR = "linear"
GRID_UNIQUE = "unique_values"


@dataclass(frozen=True)
class IraConfig:
    """Parameters of one impact-range analysis.

    points: grid resolution per predictor (linear grid mode).
    background: background rows resampled per predictor and repeat.
    repeats: 1 = single execution; more adds percentile confidence
        intervals (50 is a good default when intervals are wanted).
    grid_mode: "linear" sweeps an evenly spaced grid; "unique_values"
        sweeps the distinct observed values instead (for discrete-ish
        predictors).
    range_policy: which part of the observed range to sweep.
    ci_lo/ci_hi: interval percentiles for repeated runs.
    """

    points: int = 100
    background: int = 200
    repeats: int = 1
    seed: int = 0
    grid_mode: str = GRID_LINEAR
    range_policy: RangePolicy = field(default_factory=RangePolicy)
    ci_lo: float = 2.5
    ci_hi: float = 97.5

    def __post_init__(self):
        if self.points < 2:
            raise ConfigError("points must be at least 2")
        if self.background < 1:
            raise ConfigError("background must be at least 1")
        if self.repeats < 1:
            raise ConfigError("repeats must be at least 1")
        if self.grid_mode not in (GRID_LINEAR, GRID_UNIQUE):
            raise ConfigError(f"unknown grid mode: {self.grid_mode!r}")
        if not (0 < self.ci_lo < self.ci_hi < 100):
            raise ConfigError(
                f"need 0 < ci_lo < ci_hi < 100, got ({self.ci_lo}, {self.ci_hi})"
            )


@dataclass(frozen=True)
class PredictorImpact:
    """Impact range of one predictor; CI fields only for repeated runs."""

    name: str
    ira: float
    mean_ira: float | None = None
    ci_lower: float | None = None
    ci_upper: float | None = None
    samples: tuple | None = None


@dataclass(frozen=True)
class IraReport:
    """Per-predictor impact values, in dataset column order."""

    predictors: tuple
    config: IraConfig

    def __iter__(self):
        return iter(self.predictors)

    def names(self):
        return tuple(entry.name for entry in self.predictors)

    def get(self, name) -> PredictorImpact:
        for entry in self.predictors:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def order_by_impact(self):
        """Entries sorted by descending impact (name breaks exact ties)."""
        return tuple(
            sorted(self.predictors, key=lambda e: (-e.ira, e.name))
        )


def interpolate_grid(low, high, points):
    """`points` evenly spaced values from low to high, endpoints exact.

    A degenerate range (low == high) yields `points` copies of the single
    value.
    """
    if points < 2:
        raise ConfigError("a grid needs at least 2 points")
    if low > high:
        raise ConfigError(f"grid bounds out of order: ({low}, {high})")
    if low == high:
        return np.full(points, float(low))
    step = (high - low) / (points - 1)
    grid = low + step * np.arange(points)
    grid[-1] = high
    return grid


def unique_grid(ds: Dataset, index):
    """Sorted distinct observed values of predictor `index`."""
    if not 0 <= index < ds.n_predictors:
        raise IndexError(
            f"predictor index {index} out of range for {ds.n_predictors} columns"
        )
    return np.unique(ds.column(index))


def background_indices(seed, repeat, predictor, k, n_rows):
    """Row indices of k background draws for one (repeat, predictor) stream.

    Uniform over the n rows, with replacement; a pure function of the
    arguments, which is what makes the whole analysis schedule-independent.
    """
    gen = substream(seed, ENGINE_STREAM, repeat, predictor)
    return gen.integers(0, n_rows, size=k)


def sample_background(ds: Dataset, k, stream):
    """k full rows drawn from `stream` uniformly with replacement."""
    if k < 1:
        raise ConfigError("background sample size must be at least 1")
    idx = stream.integers(0, ds.n_rows, size=k)
    return ds.values[idx]


def percentile(samples, q):
    """Empirical percentile, linearly interpolated between order statistics."""
    arr = np.asarray(samples, dtype=np.float64)
    if arr.size == 0:
        raise ConfigError("percentile of an empty sample")
    if not 0 <= q <= 100:
        raise ConfigError(f"percentile must be in [0, 100], got {q}")
    return float(np.percentile(arr, q))


def _grid_for(ds, index, cfg):
    low, high = effective_range(ds, index, cfg.range_policy)
    if cfg.grid_mode == GRID_LINEAR:
        return interpolate_grid(low, high, cfg.points)
    grid = unique_grid(ds, index)
    return grid[(grid >= low) & (grid <= high)]


def _predictor_sample(model, ds, index, cfg, repeat):
    """One impact draw for one predictor: mean over background rows of the
    prediction spread along the sweep grid."""
    grid = _grid_for(ds, index, cfg)
    m = grid.size
    if m == 0:  # restricted grid kept no observed value
        return 0.0
    idx = background_indices(cfg.seed, repeat, index, cfg.background, ds.n_rows)
    block = np.repeat(ds.values[idx], m, axis=0)
    block[:, index] = np.tile(grid, cfg.background)
    try:
        yhat = check_predictions(model.predict(block), block.shape[0], "model")
    except ModelEvaluationError as exc:
        raise ModelEvaluationError(
            f"predictor {ds.predictor_names[index]!r}: {exc}"
        ) from None
    spans = yhat.reshape(cfg.background, m)
    ranges = spans.max(axis=1) - spans.min(axis=1)
    return float(ranges.mean())


def _collect(model, ds, cfg, repeats, threads):
    """Impact samples for every (repeat, predictor), shape (len(repeats), p)."""
    if model_n_features(model) != ds.n_predictors:
        raise ConfigError(
            f"model expects {model_n_features(model)} features, "
            f"dataset has {ds.n_predictors}"
        )
    p = ds.n_predictors
    tasks = [(r, i) for r in repeats for i in range(p)]
    workers = threads if threads >= 1 else (os.cpu_count() or 1)
    if getattr(model, "serial_predict", False) or workers == 1 or len(tasks) == 1:
        results = [_predictor_sample(model, ds, i, cfg, r) for r, i in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda task: _predictor_sample(model, ds, task[1], cfg, task[0]), tasks)
            )
    return np.asarray(results).reshape(len(repeats), p)


def ira_single(model, dataset: Dataset, config: IraConfig | None = None, *, threads=1) -> IraReport:
    """Single-execution impact range: one point estimate per predictor."""
    cfg = config if config is not None else IraConfig()
    if cfg.repeats != 1:
        raise ConfigError("ira_single requires repeats=1; use ira_repeated")
    values = _collect(model, dataset, cfg, [0], threads)[0]
    entries = tuple(
        PredictorImpact(name=name, ira=float(values[i]))
        for i, name in enumerate(dataset.predictor_names)
    )
    return IraReport(entries, cfg)


def ira_repeated(model, dataset: Dataset, config: IraConfig, *, threads=1) -> IraReport:
    """Repeated impact range: per-predictor mean and percentile interval.

    Each repeat is an independent single execution on its own background
    substream; repeat r of seed s is identical whether it runs alone or as
    part of a longer schedule.
    """
    cfg = config
    if cfg.repeats < 2:
        raise ConfigError("ira_repeated requires repeats >= 2")
    samples = _collect(model, dataset, cfg, range(cfg.repeats), threads)
    entries = []
    for i, name in enumerate(dataset.predictor_names):
        s = samples[:, i]
        mean = float(s.mean())
        entries.append(
            PredictorImpact(
                name=name,
                ira=mean,
                mean_ira=mean,
                ci_lower=percentile(s, cfg.ci_lo),
                ci_upper=percentile(s, cfg.ci_hi),
                samples=tuple(float(v) for v in s),
            )
        )
    return IraReport(tuple(entries), cfg)


def ci_width_curve(model, dataset: Dataset, config: IraConfig, repeat_counts, *, threads=1):
    """(repeats, average CI width) pairs for a list of repeat counts.

    Because repeats are keyed substreams, the counts share their common
    prefix of repeat draws: each returned row equals a standalone
    `ira_repeated` run with that many repeats.
    """
    counts = [int(c) for c in repeat_counts]
    if not counts:
        raise ConfigError("at least one repeat count is required")
    for c in counts:
        if c < 2:
            raise ConfigError(f"confidence intervals need at least 2 repeats, got {c}")
    samples = _collect(model, dataset, config, range(max(counts)), threads)
    curve = []
    for c in counts:
        prefix = samples[:c]
        widths = [
            percentile(prefix[:, i], config.ci_hi) - percentile(prefix[:, i], config.ci_lo)
            for i in range(dataset.n_predictors)
        ]
        curve.append((c, float(np.mean(widths))))
    return curve


class ImpactRangeAssessment(BaseEstimator):
    """Impact-range analyzer with scikit-learn style parameter handling.

    Works with any fitted regressor exposing `predict(X)` over 2-D float
    batches plus `n_features_in_` — the in-package models, scikit-learn
    estimators, or an `ExternalModel` proxy.

    >>> report = ImpactRangeAssessment(repeats=50, seed=7).analyze(model, data)
    """

    def __init__(
        self,
        points=100,
        background=200,
        repeats=1,
        seed=0,
        grid_mode=GRID_LINEAR,
        range_policy=None,
        ci_lo=2.5,
        ci_hi=97.5,
        threads=1,
    ):
        self.points = points
        self.background = background
        self.repeats = repeats
        self.seed = seed
        self.grid_mode = grid_mode
        self.range_policy = range_policy
        self.ci_lo = ci_lo
        self.ci_hi = ci_hi
        self.threads = threads

    def config(self) -> IraConfig:
        return IraConfig(
            points=self.points,
            background=self.background,
            repeats=self.repeats,
            seed=self.seed,
            grid_mode=self.grid_mode,
            range_policy=self.range_policy if self.range_policy is not None else RangePolicy(),
            ci_lo=self.ci_lo,
            ci_hi=self.ci_hi,
        )

    def analyze(self, model, dataset: Dataset) -> IraReport:
        cfg = self.config()
        if cfg.repeats == 1:
            return ira_single(model, dataset, cfg, threads=self.threads)
        return ira_repeated(model, dataset, cfg, threads=self.threads)

    def curve(self, model, dataset: Dataset, repeat_counts):
        return ci_width_curve(model, dataset, self.config(), repeat_counts, threads=self.threads)
