"""Input validation helpers shared by the estimators and the engine."""

import numpy as np

from .errors import DataError, ModelEvaluationError


def as_float_matrix(X, name="X"):
    """Coerce to a 2-D float64 array, rejecting anything else."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim != 2:
        raise DataError(f"{name} must be a 2-D array, got {arr.ndim} dimension(s)")
    return arr


def as_float_vector(y, name="y"):
    arr = np.asarray(y, dtype=np.float64)
    if arr.ndim != 1:
        raise DataError(f"{name} must be a 1-D array, got {arr.ndim} dimension(s)")
    return arr


def check_finite(arr, name):
    if not np.isfinite(arr).all():
        raise DataError(f"{name} contains NaN or infinite values")


def check_n_features(X, expected, name="X"):
    if X.shape[1] != expected:
        raise DataError(
            f"{name} has {X.shape[1]} columns but the model expects {expected}"
        )


def model_n_features(model):
    """Feature count a fitted model expects (scikit-learn convention)."""
    width = getattr(model, "n_features_in_", None)
    if width is None:
        raise DataError(
            "model does not expose n_features_in_; fit it first or wrap it"
        )
    return int(width)


def check_predictions(values, n_rows, context="model"):
    """Validate a prediction vector: right shape, all finite."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.shape != (n_rows,):
        raise ModelEvaluationError(
            f"{context} returned shape {arr.shape}, expected ({n_rows},)"
        )
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise ModelEvaluationError(
            f"{context} produced a non-finite prediction at row {int(bad[0])}"
        )
    return arr
