"""Random forest regression built on variance-minimizing CART trees.

Trees are grown on bootstrap resamples and stored as flat arrays so batch
prediction is a handful of vectorized descents per tree. Split search,
tie-breaking, and resampling are fully pinned, so a fitted forest is a pure
function of (data, hyperparameters, seed).
"""

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin

from ..errors import ConfigError, DataError
from ..rng import FOREST_STREAM, substream
from ..validation import as_float_matrix, as_float_vector, check_finite, check_n_features


class _Tree:
    """Array-backed binary regression tree; feature < 0 marks a leaf."""

    __slots__ = ("feature", "threshold", "left", "right", "value")

    def __init__(self, feature, threshold, left, right, value):
        self.feature = feature
        self.threshold = threshold
        self.left = left
        self.right = right
        self.value = value

    def predict(self, X):
        nodes = np.zeros(X.shape[0], dtype=np.int32)
        while True:
            feat = self.feature[nodes]
            active = np.flatnonzero(feat >= 0)
            if active.size == 0:
                break
            cur = nodes[active]
            go_left = X[active, feat[active]] <= self.threshold[cur]
            nodes[active] = np.where(go_left, self.left[cur], self.right[cur])
        return self.value[nodes]


def _best_split(X, y, columns):
    """(feature, threshold) minimizing summed child squared error, or None.

    Candidate thresholds are midpoints between consecutive distinct sorted
    feature values. Ties break toward the lowest feature index, then the
    lowest threshold, so refits are bit-for-bit reproducible.
    """
    n = y.size
    best_cost = np.inf
    best = None
    for f in columns:
        v = X[:, f]
        order = np.argsort(v, kind="stable")
        vs = v[order]
        ys = y[order]
        cut = np.flatnonzero(vs[1:] != vs[:-1])
        if cut.size == 0:
            continue
        s1 = np.cumsum(ys)
        s2 = np.cumsum(ys * ys)
        total1 = s1[-1]
        total2 = s2[-1]
        nl = cut + 1.0
        nr = n - nl
        l1 = s1[cut]
        l2 = s2[cut]
        cost = (l2 - l1 * l1 / nl) + ((total2 - l2) - (total1 - l1) ** 2 / nr)
        k = int(np.argmin(cost))
        if cost[k] < best_cost:
            thr = 0.5 * (vs[cut[k]] + vs[cut[k] + 1])
            if thr >= vs[cut[k] + 1]:  # midpoint rounded up between adjacent floats
                thr = vs[cut[k]]
            best_cost = float(cost[k])
            best = (int(f), float(thr))
    return best


def _grow_tree(X, y, max_depth, min_samples_split, max_features, gen):
    n_features = X.shape[1]
    feature, threshold, left, right, value = [], [], [], [], []

    def new_node():
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(0.0)
        return len(feature) - 1

    stack = [(new_node(), np.arange(y.size), 0)]
    while stack:
        node, idx, depth = stack.pop()
        y_node = y[idx]
        value[node] = float(np.mean(y_node))
        if idx.size < min_samples_split:
            continue
        if max_depth is not None and depth >= max_depth:
            continue
        if np.min(y_node) == np.max(y_node):  # pure node
            continue
        if max_features is not None and max_features < n_features:
            columns = np.sort(gen.choice(n_features, size=max_features, replace=False))
        else:
            columns = range(n_features)
        split = _best_split(X[idx], y_node, columns)
        if split is None:
            continue
        f, thr = split
        feature[node] = f
        threshold[node] = thr
        go_left = X[idx, f] <= thr
        left_child, right_child = new_node(), new_node()
        left[node] = left_child
        right[node] = right_child
        stack.append((right_child, idx[~go_left], depth + 1))
        stack.append((left_child, idx[go_left], depth + 1))
    return _Tree(
        np.asarray(feature, dtype=np.int32),
        np.asarray(threshold, dtype=np.float64),
        np.asarray(left, dtype=np.int32),
        np.asarray(right, dtype=np.int32),
        np.asarray(value, dtype=np.float64),
    )


class RandomForestRegression(BaseEstimator, RegressorMixin):
    """Seeded random forest regressor.

    Each tree is fitted on a bootstrap resample of size n (with replacement,
    unless `bootstrap=False`) by greedy CART: every node takes the split
    minimizing the size-weighted child variance, stopping on purity, the
    depth limit, or nodes smaller than `min_samples_split`. Leaves store the
    mean training target, and the forest prediction is the plain average of
    the per-tree leaf values.

    `max_features=None` considers every feature at every split; an integer
    draws that many features per node from the tree's own substream.
    """

    def __init__(
        self,
        n_trees=100,
        max_depth=None,
        min_samples_split=2,
        max_features=None,
        bootstrap=True,
        seed=0,
    ):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.seed = seed

    def _check_params(self, n_features):
        if self.n_trees < 1:
            raise ConfigError("n_trees must be at least 1")
        if self.max_depth is not None and self.max_depth < 1:
            raise ConfigError("max_depth must be None or at least 1")
        if self.min_samples_split < 2:
            raise ConfigError("min_samples_split must be at least 2")
        if self.max_features is not None and not 1 <= self.max_features <= n_features:
            raise ConfigError(
                f"max_features must be in [1, {n_features}], got {self.max_features}"
            )

    def fit(self, X, y):
        X = as_float_matrix(X)
        y = as_float_vector(y)
        if X.shape[0] != y.shape[0]:
            raise DataError("X and y have different numbers of rows")
        if X.shape[0] == 0:
            raise DataError("cannot fit a forest on an empty dataset")
        check_finite(X, "X")
        check_finite(y, "y")
        self._check_params(X.shape[1])
        n = X.shape[0]
        trees = []
        for t in range(self.n_trees):
            gen = substream(self.seed, FOREST_STREAM, t)
            if self.bootstrap:
                idx = gen.integers(0, n, size=n)
                sample_X, sample_y = X[idx], y[idx]
            else:
                sample_X, sample_y = X, y
            trees.append(
                _grow_tree(
                    sample_X,
                    sample_y,
                    self.max_depth,
                    self.min_samples_split,
                    self.max_features,
                    gen,
                )
            )
        self.trees_ = trees
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        X = as_float_matrix(X)
        check_n_features(X, self.n_features_in_)
        total = np.zeros(X.shape[0])
        for tree in self.trees_:
            total += tree.predict(X)
        return total / len(self.trees_)


def fit_random_forest(dataset, seed=0, **hyperparameters) -> RandomForestRegression:
    """Fit a forest on a dataset's predictors against its response."""
    if dataset.response is None:
        raise DataError("dataset has no response column to fit against")
    model = RandomForestRegression(seed=seed, **hyperparameters)
    return model.fit(dataset.values, dataset.response)
