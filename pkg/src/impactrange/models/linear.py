"""Linear predictors and ordinary least squares fitting."""

import numpy as np
from scipy.linalg import solve_triangular
from sklearn.base import BaseEstimator, RegressorMixin

from ..errors import DataError, SingularFitError
from ..validation import as_float_matrix, as_float_vector, check_finite, check_n_features


def _qr_least_squares(X, y):
    """Solve min ||[X 1] beta - y|| via a thin QR decomposition.

    Returns (coef, intercept). Raises SingularFitError when the design
    matrix (including the intercept column) is rank deficient.
    """
    n, p = X.shape
    if n <= p + 1:
        raise SingularFitError(
            f"need more rows ({n}) than fitted parameters ({p + 1})"
        )
    design = np.hstack([X, np.ones((n, 1))])
    q, r = np.linalg.qr(design, mode="reduced")
    diag = np.abs(np.diag(r))
    tol = np.finfo(np.float64).eps * max(n, p + 1) * (diag.max() if diag.size else 0.0)
    if diag.min() <= tol:
        raise SingularFitError(
            "design matrix is rank deficient (collinear or constant columns)"
        )
    beta = solve_triangular(r, q.T @ y)
    return beta[:p], float(beta[p])


class LinearModel(BaseEstimator, RegressorMixin):
    """Linear predictor with explicit coefficients.

    Use this to wrap known coefficients; `fit_ols` or `LinearRegression`
    estimate them from data.
    """

    def __init__(self, coef=None, intercept=0.0, feature_names=None):
        self.coef = coef
        self.intercept = intercept
        self.feature_names = feature_names

    def _coef_array(self):
        if self.coef is None:
            raise DataError("LinearModel has no coefficients")
        arr = as_float_vector(self.coef, "coef")
        check_finite(arr, "coef")
        if not np.isfinite(self.intercept):
            raise DataError("intercept must be finite")
        return arr

    @property
    def n_features_in_(self):
        return len(self._coef_array())

    def coefficient(self, name):
        """Coefficient looked up by feature name."""
        if not self.feature_names:
            raise DataError("model has no feature names")
        names = list(self.feature_names)
        if name not in names:
            raise DataError(f"unknown feature name: {name!r}")
        return float(self._coef_array()[names.index(name)])

    def predict(self, X):
        coef = self._coef_array()
        X = as_float_matrix(X)
        check_n_features(X, coef.size)
        return X @ coef + self.intercept


class LinearRegression(BaseEstimator, RegressorMixin):
    """Ordinary least squares fitted by QR decomposition."""

    def fit(self, X, y):
        X = as_float_matrix(X)
        y = as_float_vector(y)
        if X.shape[0] != y.shape[0]:
            raise DataError("X and y have different numbers of rows")
        check_finite(X, "X")
        check_finite(y, "y")
        coef, intercept = _qr_least_squares(X, y)
        self.coef_ = coef
        self.intercept_ = intercept
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        X = as_float_matrix(X)
        check_n_features(X, self.coef_.size)
        return X @ self.coef_ + self.intercept_


def fit_ols(dataset) -> LinearModel:
    """Least-squares LinearModel for a dataset's response.

    The dataset must carry a response column; predictors keep their names so
    coefficients can be looked up by name afterwards.
    """
    if dataset.response is None:
        raise DataError("dataset has no response column to fit against")
    est = LinearRegression().fit(dataset.values, dataset.response)
    return LinearModel(
        coef=est.coef_,
        intercept=est.intercept_,
        feature_names=dataset.predictor_names,
    )
