"""Present-value arithmetic for one-time, continuous and profiled cash flows.

All discounting uses the compound-interest benefit function
``theta(t) = (1 + alpha) ** -t``. Amounts are unit-agnostic reals with
benefits positive and costs negative. ``alpha == 0`` is allowed and every
operation then takes its analytic limit (no discounting).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

#: Upper end of the rate range over which ``1.02 / alpha`` is advertised.
TAU_APPROX_MAX_ALPHA = 0.15
#: Advertised relative accuracy of ``1.02 / alpha``.
TAU_APPROX_BOUND = 0.03
#: Trapezoid subintervals per gap between cost-profile samples.
PROFILE_REFINEMENT = 1000


@dataclass(frozen=True)
class DiscountParams:
    """Annual discount rate and its time constant ``tau = 1/ln(1+alpha)``.

    ``tau`` is ``inf`` when ``alpha == 0``.
    """

    alpha: float
    tau: float = field(init=False)

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha < 0:
            raise ValueError(f"discount rate must be finite and >= 0, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "tau", math.inf if alpha == 0 else 1.0 / math.log1p(alpha))

    @property
    def log_rate(self) -> float:
        """Continuous-compounding equivalent ``ln(1 + alpha)``."""
        return math.log1p(self.alpha)


@dataclass(frozen=True)
class OneTimeEvent:
    amount: float
    time: float

    def __post_init__(self):
        if not self.time >= 0:
            raise ValueError(f"event time must be >= 0, got {self.time!r}")


@dataclass(frozen=True)
class ContinuousFlow:
    """Constant flow of ``rate`` currency units per year on ``[start, end]``."""

    rate: float
    start: float
    end: float

    def __post_init__(self):
        if not self.start >= 0:
            raise ValueError(f"flow start must be >= 0, got {self.start!r}")
        if not self.end > self.start:
            raise ValueError(f"flow end must exceed start, got start={self.start!r} end={self.end!r}")


@dataclass(frozen=True)
class CostProfile:
    """Sampled rate curve ``(time, rate)`` spanning ``duration`` years.

    The rate is linearly interpolated between samples and taken as zero
    outside the sampled span.
    """

    samples: tuple[tuple[float, float], ...]
    duration: float

    def __post_init__(self):
        samples = tuple((float(t), float(r)) for t, r in self.samples)
        object.__setattr__(self, "samples", samples)
        if len(samples) < 2:
            raise ValueError(f"cost profile needs at least 2 samples, got {len(samples)}")
        times = [t for t, _ in samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("cost profile sample times must be strictly increasing")
        if times[0] < 0 or times[-1] > self.duration:
            raise ValueError(
                f"cost profile sample times must lie within [0, {self.duration}]"
            )

    @classmethod
    def from_arrays(cls, times: Sequence[float], rates: Sequence[float], duration: float | None = None):
        if len(times) != len(rates):
            raise ValueError("times and rates must have equal length")
        if duration is None:
            duration = float(times[-1]) if len(times) else 0.0
        return cls(tuple(zip(times, rates)), duration)


@dataclass(frozen=True)
class CashFlowSchedule:
    """Everything contributing to the discounted average benefit over ``horizon``."""

    events: tuple[OneTimeEvent, ...] = ()
    flows: tuple[ContinuousFlow, ...] = ()
    horizon: float = 1.0
    profiles: tuple[CostProfile, ...] = ()

    def __post_init__(self):
        for name in ("events", "flows", "profiles"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.horizon > 0:
            raise ValueError(f"horizon must be > 0, got {self.horizon!r}")
        for ev in self.events:
            if ev.time > self.horizon:
                raise ValueError(f"event at t={ev.time} lies beyond horizon {self.horizon}")
        for fl in self.flows:
            if fl.end > self.horizon:
                raise ValueError(f"flow ending at t={fl.end} extends beyond horizon {self.horizon}")
        for pr in self.profiles:
            if pr.duration > self.horizon:
                raise ValueError(f"profile duration {pr.duration} exceeds horizon {self.horizon}")


def discount_factor(params: DiscountParams, time: float) -> float:
    """Present value of one unit received ``time`` years from now."""
    if not time >= 0:
        raise ValueError(f"time must be >= 0, got {time!r}")
    return (1.0 + params.alpha) ** -time


def tau(params: DiscountParams) -> float:
    """Exact time constant ``1 / ln(1 + alpha)`` in years."""
    if not params.alpha > 0:
        raise ValueError(f"tau is undefined for alpha <= 0 (got {params.alpha!r})")
    return params.tau


def tau_approx_error(alpha: float) -> float:
    """Relative error of ``1.02 / alpha`` against the exact time constant."""
    exact = tau(DiscountParams(alpha))
    return abs(1.02 / alpha - exact) / exact


def tau_approx(alpha: float) -> tuple[float, bool]:
    """Rule-of-thumb time constant ``1.02 / alpha``.

    Returns the approximation together with a flag telling whether it is
    actually within 3 % of the exact value. The flag holds only up to
    alpha ~ 0.105; at alpha = 0.15 the error is about 5 %.
    """
    if not 0 < alpha <= TAU_APPROX_MAX_ALPHA:
        raise ValueError(f"alpha must lie in (0, {TAU_APPROX_MAX_ALPHA}], got {alpha!r}")
    return 1.02 / alpha, tau_approx_error(alpha) <= TAU_APPROX_BOUND


def pv_events(events: Iterable[OneTimeEvent], params: DiscountParams) -> float:
    """Sum of each one-time amount discounted from its own time to t = 0."""
    return math.fsum(ev.amount * discount_factor(params, ev.time) for ev in events)


def pv_continuous(flow: ContinuousFlow, params: DiscountParams) -> float:
    """Closed-form present value of a constant-rate flow.

    For a flow on ``[0, t]`` this is ``I * tau * (1 - exp(-t / tau))``; a
    delayed flow on ``[a, b]`` is the difference of that antiderivative at
    ``b`` and ``a``.
    """
    if params.alpha == 0:
        return flow.rate * (flow.end - flow.start)
    k = params.log_rate
    # theta(a) * (1 - theta(b - a)), written with expm1 for short intervals
    return flow.rate * params.tau * math.exp(-k * flow.start) * -math.expm1(-k * (flow.end - flow.start))


def _trapezoid(y: np.ndarray, x: np.ndarray) -> float:
    dx = np.diff(x)
    return float(np.sum(dx * (y[1:] + y[:-1])) / 2.0)


def pv_profile(profile: CostProfile, params: DiscountParams, refinement: int = PROFILE_REFINEMENT) -> float:
    """Present value of a sampled rate curve by composite trapezoid quadrature.

    Each gap between consecutive samples is split into ``refinement``
    equal subintervals; the rate is linearly interpolated in between.
    """
    if len(profile.samples) < 2:
        raise ValueError("cost profile needs at least 2 samples")
    if refinement < 1:
        raise ValueError(f"refinement must be >= 1, got {refinement}")
    times = np.array([t for t, _ in profile.samples])
    rates = np.array([r for _, r in profile.samples])
    total = 0.0
    for i in range(times.size - 1):
        t = np.linspace(times[i], times[i + 1], refinement + 1)
        r = np.interp(t, times[i : i + 2], rates[i : i + 2])
        total += _trapezoid(r * np.power(1.0 + params.alpha, -t), t)
    return total


def commissioning_cost(total_cost: float, params: DiscountParams, build_years: float) -> float:
    """Creation cost compounded forward to startup.

    The whole cost is attributed to the middle of the build period, so it
    accrues interest for ``0.5 * build_years``.
    """
    if not build_years >= 0:
        raise ValueError(f"build duration must be >= 0, got {build_years!r}")
    if not total_cost >= 0:
        raise ValueError(f"total cost must be >= 0, got {total_cost!r}")
    return total_cost * (1.0 + params.alpha) ** (0.5 * build_years)


def discounted_average_benefit(schedule: CashFlowSchedule, params: DiscountParams) -> float:
    """Per-year average of all present-valued cash flows over the horizon."""
    if not schedule.horizon > 0:
        raise ValueError(f"horizon must be > 0, got {schedule.horizon!r}")
    pv = pv_events(schedule.events, params)
    pv += math.fsum(pv_continuous(fl, params) for fl in schedule.flows)
    pv += math.fsum(pv_profile(pr, params) for pr in schedule.profiles)
    return pv / schedule.horizon
