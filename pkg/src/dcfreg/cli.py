"""Command-line front end: ``dcfreg discount|fit|aws|criteria``.

Scalar reports are ``name = value`` lines; tables are CSV. ``--format
json`` emits a single JSON document with full-precision numbers instead.
Results go to stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Sequence

from . import __version__
from .criteria import build_design_matrix, criteria_report, fit_aws, fit_criteria, rank_report
from .discounting import (
    CashFlowSchedule,
    DiscountParams,
    discounted_average_benefit,
    pv_continuous,
    pv_events,
    pv_profile,
)
from .errors import DcfregError, InputError
from .io import read_aws, read_criteria, read_dataset, read_events, read_flows, read_profile
from .regression import LinearModel, RidgeConfig, fit_report, fit_ridge, predict_many

# JSON config key -> RunConfig attribute ("lambda" is reserved in Python)
_CONFIG_KEYS = {
    "alpha": "alpha",
    "lambda": "lam",
    "horizon": "horizon",
    "currency_label": "currency_label",
    "output_format": "output_format",
    "precision": "precision",
}


@dataclass(frozen=True)
class RunConfig:
    alpha: float | None = None
    lam: float = 0.0
    horizon: float | None = None
    currency_label: str = ""
    output_format: str = "csv"
    precision: int = 6

    def __post_init__(self):
        if self.alpha is not None and not self.alpha >= 0:
            raise InputError(f"alpha must be >= 0, got {self.alpha!r}")
        if not self.lam >= 0:
            raise InputError(f"lambda must be >= 0, got {self.lam!r}")
        if self.horizon is not None and not self.horizon > 0:
            raise InputError(f"horizon must be > 0, got {self.horizon!r}")
        if self.output_format not in ("csv", "json"):
            raise InputError(f"output format must be csv or json, got {self.output_format!r}")
        if isinstance(self.precision, bool) or not isinstance(self.precision, int) or not 1 <= self.precision <= 15:
            raise InputError(f"precision must be an integer in [1, 15], got {self.precision!r}")

    def requires(self, *names: str) -> None:
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise InputError("missing required parameter(s): " + ", ".join(f"--{n}" for n in missing))


def load_config(path: str | None, overrides: dict) -> RunConfig:
    """Defaults, then the JSON config file, then command-line flags."""
    values: dict = {}
    if path is not None:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"{Path(path).name}: invalid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise InputError(f"{Path(path).name}: config must be a JSON object")
        unknown = sorted(set(raw) - set(_CONFIG_KEYS))
        if unknown:
            raise InputError(f"{Path(path).name}: unknown config key(s): {', '.join(unknown)}")
        values.update({_CONFIG_KEYS[k]: v for k, v in raw.items()})
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return RunConfig(**values)
    except TypeError as exc:
        raise InputError(f"invalid config value: {exc}") from None


def fmt(value: float, precision: int) -> str:
    text = f"{value:.{precision}f}"
    if text.lstrip("-").strip("0.") == "":
        text = text.lstrip("-")  # no "-0.000000"
    return text


class Report:
    """Accumulates output lines, or a JSON payload, for one command."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.lines: list[str] = []

    def value(self, name: str, v: float, unit: str = "") -> None:
        line = f"{name} = {fmt(v, self.config.precision)}"
        self.lines.append(f"{line} {unit}" if unit else line)

    def text(self, name: str, v: str) -> None:
        self.lines.append(f"{name} = {v}")

    def render(self, payload: dict) -> str:
        if self.config.output_format == "json":
            return json.dumps(payload, indent=2) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def run_discount(config: RunConfig, events_path, flows_path, profile_path=None) -> str:
    config.requires("alpha", "horizon")
    params = DiscountParams(config.alpha)
    events = read_events(events_path)
    flows = read_flows(flows_path)
    profiles = [read_profile(profile_path)] if profile_path is not None else []
    try:
        schedule = CashFlowSchedule(events, flows, config.horizon, profiles)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    unit = config.currency_label
    rep = Report(config)
    rep.value("alpha", params.alpha)
    rep.value("horizon", schedule.horizon)
    ev_pv = pv_events(schedule.events, params)
    rep.value("PV_events", ev_pv, unit)
    flow_pvs = [pv_continuous(fl, params) for fl in schedule.flows]
    for i, v in enumerate(flow_pvs, start=1):
        rep.value(f"PV_flow_{i}", v, unit)
    prof_pv = pv_profile(profiles[0], params) if profiles else None
    if prof_pv is not None:
        rep.value("PV_profile", prof_pv, unit)
    r_bar = discounted_average_benefit(schedule, params)
    rep.value("R_bar", r_bar, f"{unit}/year" if unit else "")
    return rep.render(
        {
            "command": "discount",
            "alpha": params.alpha,
            "horizon": schedule.horizon,
            "currency_label": unit,
            "pv_events": ev_pv,
            "pv_flows": flow_pvs,
            "pv_profile": prof_pv,
            "r_bar": r_bar,
        }
    )


def _plot_rows(model: LinearModel, data) -> str:
    y_hat = predict_many(model, data.features)
    header = [*data.feature_names, data.target_name, "y_hat", "residual"]
    out = [",".join(header)]
    for x, y, yh in zip(data.features, data.targets, y_hat):
        out.append(",".join(format(float(v), ".17g") for v in (*x, y, yh, y - yh)))
    return "\n".join(out) + "\n"


def run_fit(config: RunConfig, data_path, emit_plot=None, save_model=None, load_model=None) -> str:
    data = read_dataset(data_path)
    if load_model is not None:
        model = LinearModel.from_json(Path(load_model).read_text(encoding="utf-8"))
        method = "loaded"
    else:
        model = fit_ridge(data, RidgeConfig(config.lam))
        method = "ols" if config.lam == 0 else "ridge"
    fr = fit_report(model, data)

    rep = Report(config)
    rep.text("method", method)
    rep.value("lambda", config.lam)
    for j, w in enumerate(model.weights, start=1):
        rep.value(f"w{j}", w)
    rep.value("w0", model.bias)
    rep.value("R2", fr.r_squared)
    rep.value("rmse", fr.rmse)

    if save_model is not None:
        Path(save_model).write_text(model.to_json(), encoding="utf-8")
    if emit_plot is not None:
        Path(emit_plot).write_text(_plot_rows(model, data), encoding="utf-8")
    return rep.render(
        {
            "command": "fit",
            "method": method,
            "lambda": config.lam,
            "feature_names": list(data.feature_names),
            "weights": [float(w) for w in model.weights],
            "bias": model.bias,
            "r_squared": fr.r_squared,
            "rmse": fr.rmse,
        }
    )


def run_aws(config: RunConfig, aws_path) -> str:
    records = read_aws(aws_path)
    model = fit_aws(records)
    rows = rank_report(records, model)
    if config.output_format == "json":
        r2 = fit_report(model.as_linear_model(), build_design_matrix(records)).r_squared
        payload = {
            "command": "aws",
            "beta": [model.beta0, model.beta1, model.beta2],
            "r_squared": r2,
            "rows": [
                {
                    "rank": r.rank,
                    "actual": r.actual,
                    "predicted": r.predicted,
                    "difference": r.difference,
                    "comment": r.comment,
                    "label": r.label,
                }
                for r in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    p = config.precision
    lines = ["rank,actual,predicted,difference,comment,label"]
    for r in rows:
        lines.append(
            f"{r.rank},{fmt(r.actual, p)},{fmt(r.predicted, p)},{fmt(r.difference, p)},{r.comment},{r.label}"
        )
    return "\n".join(lines) + "\n"


def run_criteria(config: RunConfig, criteria_path) -> str:
    observations = read_criteria(criteria_path)
    model = fit_criteria(observations)
    fr = criteria_report(model, observations)
    rep = Report(config)
    for j, b in enumerate(model.beta):
        rep.value(f"beta{j}", b)
    rep.value("R2", fr.r_squared)
    rep.value("rmse", fr.rmse)
    return rep.render(
        {"command": "criteria", "beta": list(model.beta), "r_squared": fr.r_squared, "rmse": fr.rmse}
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, help="annual discount rate, e.g. 0.1")
    common.add_argument("--lambda", dest="lam", type=float, help="ridge penalty (default 0 = OLS)")
    common.add_argument("--horizon", type=float, help="averaging period T in years")
    common.add_argument("--currency-label", dest="currency_label", help="unit label for amounts")
    common.add_argument("--config", help="JSON file with RunConfig keys; flags take precedence")
    common.add_argument("--format", dest="output_format", choices=("csv", "json"))
    common.add_argument("--precision", type=int, help="decimal places for display (default 6)")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="dcfreg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discount", parents=[common], help="present values and discounted average benefit")
    p.add_argument("events", help="CSV with header amount,time")
    p.add_argument("flows", help="CSV with header rate,start,end")
    p.add_argument("--profile", help="CSV with header time,rate")

    p = sub.add_parser("fit", parents=[common], help="OLS / ridge fit of a dataset CSV (target = last column)")
    p.add_argument("data")
    p.add_argument("--emit-plot", dest="emit_plot", help="write x..., y, y_hat, residual rows here")
    p.add_argument("--save-model", dest="save_model", help="write the fitted model as JSON")
    p.add_argument("--load-model", dest="load_model", help="evaluate a saved model instead of fitting")

    p = sub.add_parser("aws", parents=[common], help="AWS weight regression and rank report")
    p.add_argument("aws", help="CSV with header label,aws1,aws2,aws3")

    p = sub.add_parser("criteria", parents=[common], help="discounted effect vs criteria weights")
    p.add_argument("criteria", help="CSV with header r_bar,csr,lr,ir,cfr")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config, {f.name: getattr(args, f.name, None) for f in fields(RunConfig)})
        if args.command == "discount":
            text = run_discount(config, args.events, args.flows, args.profile)
        elif args.command == "fit":
            text = run_fit(config, args.data, args.emit_plot, args.save_model, args.load_model)
        elif args.command == "aws":
            text = run_aws(config, args.aws)
        else:
            text = run_criteria(config, args.criteria)
        _emit(text, args.out)
    except (DcfregError, ValueError, OSError) as exc:
        print(f"dcfreg {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
