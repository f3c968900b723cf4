"""Discounted cash-flow evaluation and least-squares criteria regressions."""

from .criteria import (
    AWSModel,
    AWSRecord,
    CriteriaModel,
    CriteriaObservation,
    RankRow,
    build_design_matrix,
    fit_aws,
    fit_criteria,
    rank_report,
)
from .discounting import (
    CashFlowSchedule,
    ContinuousFlow,
    CostProfile,
    DiscountParams,
    OneTimeEvent,
    commissioning_cost,
    discount_factor,
    discounted_average_benefit,
    pv_continuous,
    pv_events,
    pv_profile,
    tau,
    tau_approx,
)
from .errors import (
    DcfregError,
    DimensionError,
    InputError,
    SingularSystemError,
    UnderdeterminedError,
    UndefinedRSquaredError,
)
from .linalg import gram_products, solve_spd
from .regression import Dataset, FitReport, LinearModel, RidgeConfig, fit_ols, fit_report, fit_ridge, predict

__version__ = "0.1.0"
