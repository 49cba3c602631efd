"""Local perturbation analysis around a baseline row.

The classical quick check this package's global analysis is meant to
improve on: nudge one predictor by a percentage of its baseline value,
hold the rest fixed, and report the percent change of the prediction.
Only probes a narrow neighbourhood of the baseline, so it can rank
predictors very differently from a full-range sweep.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .validation import as_float_vector, check_predictions, model_n_features

DEFAULT_STEPS = (-20.0, -15.0, -10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0)


@dataclass(frozen=True)
class PerturbationTable:
    """Percent output change per predictor at each percent input step."""

    predictor_names: tuple
    steps: tuple
    entries: np.ndarray  # shape (p, len(steps))
    baseline_prediction: float

    def row(self, name):
        return self.entries[self.predictor_names.index(name)]


def perturbation_table(model, baseline_row, steps=DEFAULT_STEPS, predictor_names=None):
    """Perturb each predictor by each percent step around `baseline_row`.

    Entry (i, s) is 100 * (yhat(x_i scaled by 1 + s/100) - yhat_base) /
    yhat_base. The baseline prediction must be nonzero for the relative
    change to make sense.
    """
    base = as_float_vector(baseline_row, "baseline_row")
    p = model_n_features(model)
    if base.size != p:
        raise DomainError(f"baseline row has {base.size} values, model expects {p}")
    steps = tuple(float(s) for s in steps)
    if predictor_names is None:
        predictor_names = tuple(f"X{i + 1}" for i in range(p))
    else:
        predictor_names = tuple(predictor_names)

    yhat_base = float(check_predictions(model.predict(base.reshape(1, -1)), 1, "model")[0])
    if yhat_base == 0.0:
        raise DomainError("baseline prediction is zero; relative change is undefined")

    block = np.tile(base, (p * len(steps), 1))
    for i in range(p):
        for j, s in enumerate(steps):
            block[i * len(steps) + j, i] = base[i] * (1.0 + s / 100.0)
    yhat = check_predictions(model.predict(block), block.shape[0], "model")
    entries = 100.0 * (yhat.reshape(p, len(steps)) - yhat_base) / yhat_base
    return PerturbationTable(
        predictor_names=predictor_names,
        steps=steps,
        entries=entries,
        baseline_prediction=yhat_base,
    )
