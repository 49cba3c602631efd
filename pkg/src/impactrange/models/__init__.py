from .boxcox import BoxCoxLinearModel, box_cox_back_transform
from .external import ExternalModel, connect_external
from .feedmill import (
    FEED_MILL_INTERCEPT,
    FEED_MILL_LAMBDA,
    FEED_MILL_PREDICTORS,
    make_feed_mill_model,
)
from .forest import RandomForestRegression, fit_random_forest
from .linear import LinearModel, LinearRegression, fit_ols

__all__ = [
    "BoxCoxLinearModel",
    "ExternalModel",
    "FEED_MILL_INTERCEPT",
    "FEED_MILL_LAMBDA",
    "FEED_MILL_PREDICTORS",
    "LinearModel",
    "LinearRegression",
    "RandomForestRegression",
    "box_cox_back_transform",
    "connect_external",
    "fit_ols",
    "fit_random_forest",
    "make_feed_mill_model",
]
