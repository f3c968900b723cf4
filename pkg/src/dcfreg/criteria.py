"""Regressions over expert criteria weights.

Two models are fitted with OLS:

* overall weight on secondary- and main-criteria weights,
  ``aws1 = b0 + b1 * aws2 + b2 * aws3``, plus a ranked
  actual-vs-predicted report;
* discounted economic effect on the four aggregated criteria weights,
  ``r_bar = b0 + b1 * csr + b2 * lr + b3 * ir + b4 * cfr``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import UnderdeterminedError
from .regression import Dataset, LinearModel, fit_ols, fit_report, FitReport

HEAVY_THRESHOLD = 0.05
SIGNIFICANT_THRESHOLD = 0.02
#: Differences this small (float noise of an exact fit) are labelled "exact".
EXACT_TOLERANCE = 1e-12

AWS_MIN_RECORDS = 3
CRITERIA_COLUMNS = ("csr", "lr", "ir", "cfr")
CRITERIA_MIN_OBSERVATIONS = 6


@dataclass(frozen=True)
class AWSRecord:
    aws1: float
    aws2: float
    aws3: float
    label: str = ""

    def __post_init__(self):
        for name in ("aws1", "aws2", "aws3"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.aws1 < 0:
            raise ValueError(f"aws1 must be >= 0, got {self.aws1!r}")


@dataclass(frozen=True)
class AWSModel:
    beta0: float
    beta1: float
    beta2: float

    def predict(self, aws2: float, aws3: float) -> float:
        return self.beta1 * aws2 + self.beta2 * aws3 + self.beta0

    def as_linear_model(self) -> LinearModel:
        return LinearModel([self.beta1, self.beta2], self.beta0)


@dataclass(frozen=True)
class RankRow:
    rank: int
    actual: float
    predicted: float
    difference: float
    comment: str
    label: str = ""


@dataclass(frozen=True)
class CriteriaObservation:
    r_bar: float
    csr: float
    lr: float
    ir: float
    cfr: float

    def __post_init__(self):
        for name in ("r_bar",) + CRITERIA_COLUMNS:
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")


@dataclass(frozen=True)
class CriteriaModel:
    beta: tuple[float, float, float, float, float]

    def __post_init__(self):
        beta = tuple(float(b) for b in self.beta)
        if len(beta) != 5 or not all(math.isfinite(b) for b in beta):
            raise ValueError(f"expected 5 finite coefficients, got {self.beta!r}")
        object.__setattr__(self, "beta", beta)

    def as_linear_model(self) -> LinearModel:
        return LinearModel(self.beta[1:], self.beta[0])


def build_design_matrix(records: Sequence[AWSRecord]) -> Dataset:
    """Features ``(aws2, aws3)`` and targets ``aws1`` in record order.

    The intercept column is implicit (the regression bias).
    """
    if len(records) < AWS_MIN_RECORDS:
        raise UnderdeterminedError(
            f"need at least {AWS_MIN_RECORDS} AWS records for 3 coefficients, got {len(records)}"
        )
    X = np.array([[r.aws2, r.aws3] for r in records], dtype=float)
    y = np.array([r.aws1 for r in records], dtype=float)
    return Dataset(X, y, feature_names=("aws2", "aws3"), target_name="aws1")


def fit_aws(records: Sequence[AWSRecord]) -> AWSModel:
    model = fit_ols(build_design_matrix(records))
    w1, w2 = model.weights
    return AWSModel(model.bias, float(w1), float(w2))


def comment_for(difference: float) -> str:
    """Qualitative label for ``actual - predicted``."""
    mag = abs(difference)
    if mag <= EXACT_TOLERANCE:
        return "exact"
    if mag >= HEAVY_THRESHOLD:
        degree = "heavily"
    elif mag >= SIGNIFICANT_THRESHOLD:
        degree = "significantly"
    else:
        degree = "slightly"
    return f"{degree} {'underpredicted' if difference > 0 else 'overpredicted'}"


def rank_report(records: Sequence[AWSRecord], model: AWSModel) -> list[RankRow]:
    """Rows ordered by actual weight, largest first; ties keep input order."""
    if not records:
        raise ValueError("rank report needs at least one record")
    ordered = sorted(records, key=lambda r: r.aws1, reverse=True)
    rows = []
    for rank, rec in enumerate(ordered, start=1):
        predicted = model.predict(rec.aws2, rec.aws3)
        diff = rec.aws1 - predicted
        rows.append(RankRow(rank, rec.aws1, predicted, diff, comment_for(diff), rec.label))
    return rows


def criteria_dataset(observations: Sequence[CriteriaObservation]) -> Dataset:
    X = np.array([[getattr(o, c) for c in CRITERIA_COLUMNS] for o in observations], dtype=float)
    y = np.array([o.r_bar for o in observations], dtype=float)
    return Dataset(X, y, feature_names=CRITERIA_COLUMNS, target_name="r_bar")


def fit_criteria(observations: Sequence[CriteriaObservation]) -> CriteriaModel:
    """OLS fit of the discounted effect on the four criteria weights."""
    if len(observations) < CRITERIA_MIN_OBSERVATIONS:
        raise UnderdeterminedError(
            f"need at least {CRITERIA_MIN_OBSERVATIONS} observations for the criteria "
            f"regression, got {len(observations)}"
        )
    model = fit_ols(criteria_dataset(observations))
    return CriteriaModel((model.bias, *map(float, model.weights)))


def criteria_report(model: CriteriaModel, observations: Sequence[CriteriaObservation]) -> FitReport:
    return fit_report(model.as_linear_model(), criteria_dataset(observations))
