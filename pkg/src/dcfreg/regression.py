"""Ordinary least squares and ridge fits of strictly linear models.

Models have the form ``y_hat = x @ weights + bias``. The bias is never
penalised by ridge. Both fits solve the normal equations of the
mean-centred design with :func:`dcfreg.linalg.solve_spd`; for an
unpenalised intercept this is an exact reformulation of the system with a
ones column, and it keeps the Gram matrix well conditioned when features
carry large offsets (square footage, currency amounts).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import DimensionError, UnderdeterminedError, UndefinedRSquaredError


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Dataset:
    """``p`` observations (rows of ``features``) of ``n`` predictors plus targets."""

    features: np.ndarray
    targets: np.ndarray
    feature_names: tuple[str, ...] | None = None
    target_name: str = "y"

    def __post_init__(self):
        X = linalg.as_matrix(self.features)
        y = linalg.as_vector(self.targets)
        if X.shape[0] != y.size:
            raise DimensionError(f"{X.shape[0]} feature rows but {y.size} targets")
        if y.size < 2:
            raise UnderdeterminedError(f"need at least 2 observations, got {y.size}")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
            raise ValueError("dataset contains non-finite values")
        names = self.feature_names
        if names is None:
            names = tuple(f"x{j + 1}" for j in range(X.shape[1]))
        elif len(names) != X.shape[1]:
            raise DimensionError(f"{len(names)} feature names for {X.shape[1]} columns")
        object.__setattr__(self, "features", _frozen(X))
        object.__setattr__(self, "targets", _frozen(y))
        object.__setattr__(self, "feature_names", tuple(names))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[float]], targets: Sequence[float], **kw) -> "Dataset":
        return cls(np.column_stack([np.asarray(c, dtype=float) for c in columns]), targets, **kw)

    @property
    def n_observations(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]


@dataclass(frozen=True, eq=False)
class LinearModel:
    weights: np.ndarray
    bias: float

    def __post_init__(self):
        object.__setattr__(self, "weights", _frozen(linalg.as_vector(self.weights)))
        object.__setattr__(self, "bias", float(self.bias))

    def to_json(self) -> str:
        """Flat JSON object with 17 significant digits per number."""
        ws = ", ".join(_num17(w) for w in self.weights)
        return f'{{"weights": [{ws}], "bias": {_num17(self.bias)}}}\n'

    @classmethod
    def from_json(cls, text: str) -> "LinearModel":
        obj = json.loads(text)
        try:
            return cls(obj["weights"], obj["bias"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"model JSON needs 'weights' and 'bias': {exc}") from exc


def _num17(v: float) -> str:
    if not math.isfinite(v):
        raise ValueError(f"cannot serialise non-finite value {v!r}")
    return format(float(v), ".17g")


@dataclass(frozen=True)
class RidgeConfig:
    """Ridge penalty strength ``lam`` (the Lagrange multiplier lambda)."""

    lam: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam >= 0):
            raise ValueError(f"ridge lambda must be finite and >= 0, got {self.lam!r}")


@dataclass(frozen=True, eq=False)
class FitReport:
    r_squared: float
    rmse: float
    residuals: np.ndarray

    @property
    def sse(self) -> float:
        return float(np.dot(self.residuals, self.residuals))


def _solve(data: Dataset, lam: float) -> LinearModel:
    X, y = data.features, data.targets
    x_mean = X.mean(axis=0)
    y_mean = y.mean()
    G, b = linalg.gram_products(X - x_mean, y - y_mean)
    if lam:
        G = G + lam * np.eye(G.shape[0])
    w = linalg.solve_spd(G, b)
    return LinearModel(w, y_mean - float(np.dot(x_mean, w)))


def fit_ols(data: Dataset) -> LinearModel:
    """Least-squares fit minimising the sum of squared residuals.

    Raises
    ------
    UnderdeterminedError
        With ``p <= n`` there are fewer observations than parameters
        (``n`` weights plus the bias).
    SingularSystemError
        On collinear or constant predictors.
    """
    p, n = data.features.shape
    if p <= n:
        raise UnderdeterminedError(
            f"{p} observations cannot determine {n} weights plus a bias; need at least {n + 1}"
        )
    return _solve(data, 0.0)


def fit_ridge(data: Dataset, config: RidgeConfig | float) -> LinearModel:
    """Minimise ``SSE + lam * ||weights||^2`` with the bias unpenalised.

    ``lam == 0`` is exactly :func:`fit_ols`.
    """
    if not isinstance(config, RidgeConfig):
        config = RidgeConfig(float(config))
    if config.lam == 0:
        return fit_ols(data)
    return _solve(data, config.lam)


def predict(model: LinearModel, x) -> float:
    x = linalg.as_vector(x)
    if x.size != model.weights.size:
        raise DimensionError(f"model has {model.weights.size} weights but x has length {x.size}")
    return float(np.dot(x, model.weights)) + model.bias


def predict_many(model: LinearModel, X) -> np.ndarray:
    X = linalg.as_matrix(X)
    if X.shape[1] != model.weights.size:
        raise DimensionError(f"model has {model.weights.size} weights but X has {X.shape[1]} columns")
    return X @ model.weights + model.bias


def fit_report(model: LinearModel, data: Dataset) -> FitReport:
    """Residuals, R-squared about the target mean, and RMSE over ``p``."""
    y = data.targets
    sst = float(np.sum((y - y.mean()) ** 2))
    if sst == 0:
        raise UndefinedRSquaredError("targets are all identical; R-squared is undefined")
    residuals = y - predict_many(model, data.features)
    sse = float(np.dot(residuals, residuals))
    residuals.setflags(write=False)
    return FitReport(1.0 - sse / sst, math.sqrt(sse / y.size), residuals)
