"""Box-Cox back-transformed linear predictors."""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin

from ..errors import DomainError
from ..validation import as_float_matrix, check_n_features
from .linear import LinearModel


def box_cox_back_transform(t, lmbda):
    """Invert a Box-Cox transform: (lmbda*t + 1) ** (1/lmbda).

    Evaluated in log space so transformed values around 1e9 do not overflow.
    Strictly increasing in `t` for positive `lmbda`; requires lmbda != 0 and
    lmbda*t + 1 > 0.
    """
    if lmbda == 0.0:
        raise DomainError("box_cox_back_transform requires lambda != 0")
    arg = lmbda * np.asarray(t, dtype=np.float64) + 1.0
    if np.any(arg <= 0.0):
        bad = np.asarray(t, dtype=np.float64).reshape(-1)[
            int(np.flatnonzero(np.atleast_1d(arg) <= 0.0)[0])
        ]
        raise DomainError(
            f"lambda*T + 1 must be positive; T={bad!r} with lambda={lmbda} is outside the domain"
        )
    result = np.exp(np.log(arg) / lmbda)
    if np.ndim(t) == 0:
        return float(result)
    return result


class BoxCoxLinearModel(BaseEstimator, RegressorMixin):
    """Linear model in transformed space, back-transformed on prediction.

    The inner linear part produces the transformed response T; predictions
    return (lmbda*T + 1) ** (1/lmbda). The domain condition lmbda*T + 1 > 0
    is checked on every batch.
    """

    def __init__(self, coef=None, intercept=0.0, lmbda=1.0, feature_names=None):
        self.coef = coef
        self.intercept = intercept
        self.lmbda = lmbda
        self.feature_names = feature_names

    def _inner(self):
        return LinearModel(
            coef=self.coef, intercept=self.intercept, feature_names=self.feature_names
        )

    @property
    def n_features_in_(self):
        return self._inner().n_features_in_

    def coefficient(self, name):
        return self._inner().coefficient(name)

    def transformed(self, X):
        """The linear part T before back-transformation."""
        return self._inner().predict(X)

    def predict(self, X):
        X = as_float_matrix(X)
        check_n_features(X, self.n_features_in_)
        t = self.transformed(X)
        arg = self.lmbda * t + 1.0
        bad = np.flatnonzero(arg <= 0.0)
        if bad.size:
            i = int(bad[0])
            raise DomainError(
                f"lambda*T + 1 <= 0 at row {i}: T={t[i]!r}, lambda={self.lmbda}"
            )
        return np.exp(np.log(arg) / self.lmbda)
