"""Pellet durability model from a commercial feed-mill case study.

The model predicts the Pellet Durability Index (PDI) of manufactured feed
pellets from nine process and recipe variables. It is a multiple linear
regression on the Box-Cox transformed response, so predictions are
back-transformed with lambda = 5.18. Coefficients and the training-data
summary statistics are reproduced from the published study; the raw mill
data itself is not distributed.
"""

from .boxcox import BoxCoxLinearModel

# name, mean, sd, minimum, maximum, coefficient (transformed-response units)
FEED_MILL_PREDICTORS = (
    ("Amino Acids (%)", 0.4, 0.2, 0.0, 1.0, 4.42e8),
    ("ADF Content (%)", 3.4, 1.2, 1.7, 7.2, 1.41e8),
    ("Dehydrated Bakery Meal (%)", 6.1, 5.5, 0.0, 16.5, 3.06e7),
    ("Indoor Humidity (Pelletizer) (%)", 28.1, 9.8, 10.5, 53.8, 1.20e7),
    ("Expanding Temperature (°C)", 92.1, 6.9, 62.5, 111.7, 7.50e6),
    ("Cumulative Production (Tonnes)", 20687.7, 13415.3, 55.4, 47953.9, -5.29e3),
    ("Ambient Humidity (%)", 65.3, 13.1, 22.5, 91.8, -3.88e6),
    ("Fat Content (%)", 3.7, 0.8, 2.1, 7.5, -1.55e8),
    ("Processing Aid Water (%)", 0.9, 0.2, 0.0, 1.5, -2.17e8),
)

FEED_MILL_INTERCEPT = 2.14e9
FEED_MILL_LAMBDA = 5.18


def feed_mill_names():
    return tuple(row[0] for row in FEED_MILL_PREDICTORS)


def feed_mill_means():
    return [row[1] for row in FEED_MILL_PREDICTORS]


def make_feed_mill_model() -> BoxCoxLinearModel:
    """The nine-predictor PDI model with its published coefficients."""
    return BoxCoxLinearModel(
        coef=[row[5] for row in FEED_MILL_PREDICTORS],
        intercept=FEED_MILL_INTERCEPT,
        lmbda=FEED_MILL_LAMBDA,
        feature_names=feed_mill_names(),
    )
