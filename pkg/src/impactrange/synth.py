"""Seeded benchmark data generators.

Two synthetic regression benchmarks (one linear, one strongly nonlinear)
plus a surrogate background sample matching the feed-mill case study's
published summary statistics. All generators are pure functions of
(n, seed): predictors are drawn column by column from one Philox substream
using inverse-CDF normal sampling, then the response is assembled from the
generating formula plus uniform noise.
"""

import numpy as np

from .dataset import Dataset
from .models.feedmill import FEED_MILL_PREDICTORS, feed_mill_names
from .rng import SYNTH_STREAM, normal, substream, uniform

# (name, mean, sd) per predictor; relevant ones feed the response formula.
LINEAR_PREDICTORS = (
    ("X1", 0.0, 1.0),
    ("X2", -12.0, 6.0),
    ("X3", 5.0, 2.5),
    ("X4", 1.0, 5.0),
    ("X5", -8.0, 0.5),
    ("X6", 10.0, 5.0),
    ("X7", 3.0, 5.0),
    ("X8", -2.0, 4.0),
)
LINEAR_NOISE = (-5.0, 5.0)

NONLINEAR_PREDICTORS = (
    ("X1", 1.0, 0.5),
    ("X2", 5.0, 2.0),
    ("X3", -6.0, 1.2),
    ("X4", 0.0, 0.7),
    ("X5", 0.15, 2.1),
    ("X6", -5.0, 2.2),
    ("X7", 2.8, 0.7),
    ("X8", -4.5, 1.8),
)
NONLINEAR_NOISE = (-3.0, 3.0)

_LINEAR_TAG = 0
_NONLINEAR_TAG = 1
_FEED_MILL_TAG = 2


def linear_response(X):
    """Noise-free linear target: 2*X1 - 0.5*X3 + 0.05*X4 + 0.1*X6 - 1.2*X7."""
    return 2.0 * X[:, 0] - 0.5 * X[:, 2] + 0.05 * X[:, 3] + 0.1 * X[:, 5] - 1.2 * X[:, 6]


def nonlinear_response(X):
    """Noise-free nonlinear target:
    -X1*X2 - 0.1*X3**2 + 0.08*exp(X5) + 6.1*cos(X6)."""
    return (
        -X[:, 0] * X[:, 1]
        - 0.1 * X[:, 2] ** 2
        + 0.08 * np.exp(X[:, 4])
        + 6.1 * np.cos(X[:, 5])
    )


def _draw_predictors(gen, spec, n):
    X = np.empty((n, len(spec)))
    for j, (_, mean, sd) in enumerate(spec):
        X[:, j] = normal(gen, mean, sd, size=n)
    return X


def _generate(n, seed, tag, spec, response_fn, noise):
    if n < 1:
        raise ValueError("n must be at least 1")
    lo, hi = noise
    if lo > hi:
        raise ValueError(f"noise bounds out of order: {noise}")
    gen = substream(seed, SYNTH_STREAM, tag)
    X = _draw_predictors(gen, spec, n)
    eps = np.zeros(n) if lo == hi else uniform(gen, lo, hi, size=n)
    y = response_fn(X) + eps
    return Dataset(
        predictor_names=tuple(name for name, _, _ in spec),
        values=X,
        response=y,
        response_name="Y",
    )


def gen_linear(n, seed, noise=LINEAR_NOISE) -> Dataset:
    """Linear benchmark: 8 independent normal predictors, response Y from
    `linear_response` plus U(noise) error. X2, X5, X8 never enter Y."""
    return _generate(n, seed, _LINEAR_TAG, LINEAR_PREDICTORS, linear_response, noise)


def gen_nonlinear(n, seed, noise=NONLINEAR_NOISE) -> Dataset:
    """Nonlinear benchmark: interaction, square, exponential and cosine
    terms via `nonlinear_response` plus U(noise) error. X4, X7, X8 never
    enter Y."""
    return _generate(n, seed, _NONLINEAR_TAG, NONLINEAR_PREDICTORS, nonlinear_response, noise)


def make_feed_mill_background(n, seed) -> Dataset:
    """Surrogate background rows for the feed-mill model.

    Each column is drawn normal with the published mean and sd, then clipped
    to the published minimum and maximum. For n >= 2 the first two rows are
    anchored at the per-column minima and maxima so the observed range of
    every predictor equals the published range exactly (the real training
    data attains those bounds by construction; random clipped draws need not
    reach bounds that sit several sd out).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    gen = substream(seed, SYNTH_STREAM, _FEED_MILL_TAG)
    X = np.empty((n, len(FEED_MILL_PREDICTORS)))
    for j, (_, mean, sd, lower, upper, _) in enumerate(FEED_MILL_PREDICTORS):
        X[:, j] = np.clip(normal(gen, mean, sd, size=n), lower, upper)
    if n >= 2:
        X[0] = [row[3] for row in FEED_MILL_PREDICTORS]
        X[1] = [row[4] for row in FEED_MILL_PREDICTORS]
    return Dataset(predictor_names=feed_mill_names(), values=X)
