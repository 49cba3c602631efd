"""Impact range analysis for regression models.

Quantifies how far each predictor can move a model's prediction when swept
across its observed data range, with other predictors held at resampled
background rows. Ships three reference model families (least squares,
Box-Cox linear, random forest), a proxy for out-of-process models, seeded
benchmark generators, and a local-perturbation baseline for comparison.
"""

from .baseline import DEFAULT_STEPS, PerturbationTable, perturbation_table
from .dataset import (
    ColumnStats,
    Dataset,
    RangePolicy,
    column_stats,
    describe,
    effective_range,
    load_csv,
    save_csv,
)
from .engine import (
    GRID_LINEAR,
    GRID_UNIQUE,
    ImpactRangeAssessment,
    IraConfig,
    IraReport,
    PredictorImpact,
    background_indices,
    ci_width_curve,
    interpolate_grid,
    ira_repeated,
    ira_single,
    percentile,
    sample_background,
    unique_grid,
)
from .errors import (
    ConfigError,
    DataError,
    DomainError,
    ImpactRangeError,
    ModelEvaluationError,
    ProtocolError,
    SingularFitError,
)
from .models import (
    BoxCoxLinearModel,
    ExternalModel,
    LinearModel,
    LinearRegression,
    RandomForestRegression,
    box_cox_back_transform,
    connect_external,
    fit_ols,
    fit_random_forest,
    make_feed_mill_model,
)
from .synth import (
    gen_linear,
    gen_nonlinear,
    linear_response,
    make_feed_mill_background,
    nonlinear_response,
)

__version__ = "0.1.0"

__all__ = [
    "ColumnStats",
    "ConfigError",
    "DataError",
    "Dataset",
    "DomainError",
    "DEFAULT_STEPS",
    "GRID_LINEAR",
    "GRID_UNIQUE",
    "ImpactRangeAssessment",
    "ImpactRangeError",
    "IraConfig",
    "IraReport",
    "LinearModel",
    "LinearRegression",
    "ModelEvaluationError",
    "PerturbationTable",
    "PredictorImpact",
    "ProtocolError",
    "RandomForestRegression",
    "RangePolicy",
    "SingularFitError",
    "BoxCoxLinearModel",
    "ExternalModel",
    "background_indices",
    "box_cox_back_transform",
    "ci_width_curve",
    "column_stats",
    "connect_external",
    "describe",
    "effective_range",
    "fit_ols",
    "fit_random_forest",
    "gen_linear",
    "gen_nonlinear",
    "interpolate_grid",
    "ira_repeated",
    "ira_single",
    "linear_response",
    "load_csv",
    "make_feed_mill_background",
    "make_feed_mill_model",
    "nonlinear_response",
    "percentile",
    "sample_background",
    "save_csv",
    "unique_grid",
]
