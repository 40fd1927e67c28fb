"""Command-line workbench: ingest, interpolate, unitroot, estimate, diagnose,
validate.

Configuration is a JSON document (see README for the schema); the bundled
``eu15-replication`` profile pins a ready-made model specification for a
15-country annual panel.  Estimation artifacts persist as JSON/CSV in the
output directory so ``diagnose`` can run post hoc without re-estimating.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from importlib import resources
from pathlib import Path

import numpy as np

from . import report
from .diagnostics import gauss_markov_report, residual_plot_data
from .ecm import EcmResult, EcmSpec, estimate_ecm
from .errors import ConfigError, GateError, PanelEcmError
from .panel import PanelDataset, SampleInfo, interpolate_missing, load_panel, read_long_csv
from .simulate import default_validation_suite, run_validation
from .sur import estimate_sigma, sur_one_step_fit
from .unitroot import LagRule, UnitRootConfig, summary_window

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_GATE = 2

KNOWN_KEYS = {
    "data",
    "model",
    "significance",
    "interpolate",
    "unit_root",
    "output",
    "force_gate",
    "gate_rule",
    "lag",
}


def load_profile(name: str) -> dict:
    path = resources.files("panelecm").joinpath("profiles", f"{name}.json")
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigError(f"unknown profile {name!r}") from None


def load_config(path: str | None, profile: str | None) -> dict:
    config: dict = {}
    if profile:
        config.update(load_profile(profile))
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            overrides = json.load(fh)
        unknown = set(overrides) - KNOWN_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        config.update(overrides)
    return config


def model_spec_from(config: dict) -> EcmSpec:
    model = config.get("model")
    if not model:
        raise ConfigError("config lacks a 'model' section")
    try:
        return EcmSpec(
            dependent=model["dependent"],
            long_run_terms=tuple(model["long_run_terms"]),
            lagged_difference_terms=tuple(model["lagged_difference_terms"]),
            contemporaneous_difference_terms=tuple(
                model["contemporaneous_difference_terms"]
            ),
            include_constant=bool(model.get("include_constant", True)),
            lag_search_range=tuple(model.get("lag_search_range", (1, 4))),
        )
    except KeyError as exc:
        raise ConfigError(f"model section lacks required key {exc}") from None
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def unit_root_config_from(config: dict) -> UnitRootConfig:
    section = config.get("unit_root", {})
    method = section.get("lag_method", "ic")
    rule = LagRule(
        method=method,
        lags=int(section.get("lags", 0)),
        max_lags=section.get("max_lags"),
    )
    return UnitRootConfig(
        deterministic=section.get("deterministic", "intercept"),
        lag_rule=rule,
        significance=float(
            section.get("significance", config.get("significance", 0.05))
        ),
        pp_bandwidth=section.get("pp_bandwidth"),
    )


def load_dataset(config: dict, data_override: str | None = None) -> PanelDataset:
    path = data_override or config.get("data")
    if not path:
        raise ConfigError("no data file given (config 'data' key or --data flag)")
    if not Path(path).exists():
        raise ConfigError(f"data file not found: {path}")
    ds = load_panel(read_long_csv(path))
    for var in config.get("interpolate", []):
        if var in ds.values and ds.n_missing(var):
            ds, _ = interpolate_missing(ds, var)
    return ds


def _require_variables(ds: PanelDataset, spec: EcmSpec):
    missing = [v for v in spec.variables() if v not in ds.values]
    if missing:
        raise ConfigError(
            f"dataset lacks variables required by the model: {', '.join(missing)}"
        )


def cmd_ingest(args) -> int:
    config = load_config(args.config, args.profile)
    path = args.data or config.get("data")
    if not path:
        raise ConfigError("no data file given")
    ds = load_panel(read_long_csv(path))
    print(f"entities: {ds.n_entities} ({', '.join(ds.entities)})")
    print(f"periods:  {ds.periods[0]}..{ds.periods[-1]} ({ds.n_periods})")
    print(f"variables: {len(ds.variables)}")
    for var in ds.variables:
        missing = ds.n_missing(var)
        cells = ds.n_entities * ds.n_periods
        print(f"  {var:<12} {cells - missing:>5} observed, {missing:>3} missing")
    return EXIT_OK


def cmd_interpolate(args) -> int:
    config = load_config(args.config, args.profile)
    path = args.data or config.get("data")
    if not path:
        raise ConfigError("no data file given")
    ds = load_panel(read_long_csv(path))
    variables = args.variables.split(",") if args.variables else config.get("interpolate", [])
    if not variables:
        variables = [v for v in ds.variables if ds.n_missing(v)]
    for var in variables:
        if var not in ds.values:
            raise ConfigError(f"unknown variable {var!r}")
        ds, log = interpolate_missing(ds, var)
        print(f"Interpolated values for {var}:")
        entities = sorted({e.entity for e in log.entries})
        if not entities:
            print("  (no data missing)")
        for ent in entities:
            rows = sorted(log.for_entity(ent), key=lambda e: e.period)
            periods = ", ".join(str(e.period) for e in rows)
            values = ", ".join(f"{e.filled_value:.2f}" for e in rows)
            print(f"  {ent:<16} {periods:<28} {values}")
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"interpolation_{var}.csv").write_text(log.to_delimited())
    return EXIT_OK


def cmd_unitroot(args) -> int:
    config = load_config(args.config, args.profile)
    ds = load_dataset(config, args.data)
    ur_config = unit_root_config_from(config)
    variables = args.variables.split(",") if args.variables else list(ds.variables)
    summaries = summary_window(ds, variables, ur_config)
    text = report.render_summary_grid(summaries)
    print(text, end="")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "unitroot_summary.txt").write_text(text)
        payload = {
            var: {
                "cells": [asdict(c) for c in s.cells],
                "significance": s.significance,
            }
            for var, s in summaries.items()
        }
        (out / "unitroot_summary.json").write_text(json.dumps(payload, indent=2))
    return EXIT_OK


def _persist_run(out_dir: Path, result: EcmResult, text: str):
    out_dir.mkdir(parents=True, exist_ok=True)
    sample = result.sample
    artifacts = {
        "model": {
            "dependent": result.spec.dependent,
            "long_run_terms": list(result.spec.long_run_terms),
            "lagged_difference_terms": list(result.spec.lagged_difference_terms),
            "contemporaneous_difference_terms": list(
                result.spec.contemporaneous_difference_terms
            ),
            "include_constant": result.spec.include_constant,
            "lag_search_range": list(result.spec.lag_search_range),
        },
        "selected_lag": result.selected_lag,
        "sic_table": [[lag, sic] for lag, sic in result.sic_table],
        "gate": {
            "passed": result.cointegration.passed,
            "forced": result.gate_forced,
            "rejections": result.cointegration.rejections,
            "applicable": result.cointegration.applicable,
            "rule": result.cointegration.rule,
        },
        "speed_of_adjustment": result.speed_of_adjustment,
        "long_run_fit": result.long_run_fit.to_dict(),
        "ecm_fit": result.ecm_fit.to_dict(),
        "design_names": list(result.design_names),
        "design": [[float(v) for v in row] for row in result.design],
        "response": [float(v) for v in result.response],
        "sample": {"entities": list(sample.entities), "periods": list(sample.periods)},
        "equilibrium_errors": [[float(v) for v in row] for row in result.equilibrium_errors],
    }
    (out_dir / "artifacts.json").write_text(json.dumps(artifacts, indent=2))
    (out_dir / "estimation.txt").write_text(text)
    resid = sample.reshape(result.ecm_fit.residuals)
    sigma = estimate_sigma(resid, sample.entities)
    (out_dir / "sigma.csv").write_text(sigma.to_delimited())
    plot = residual_plot_data(result.ecm_fit, sample)
    (out_dir / "residual_plot.csv").write_text(plot.to_delimited())


def cmd_estimate(args) -> int:
    config = load_config(args.config, args.profile)
    spec = model_spec_from(config)
    ds = load_dataset(config, args.data)
    _require_variables(ds, spec)
    ur_config = unit_root_config_from(config)
    force = bool(args.force_gate or config.get("force_gate", False))
    try:
        result = estimate_ecm(
            ds,
            spec,
            lag=args.lag if args.lag is not None else config.get("lag"),
            gate_config=ur_config,
            gate_rule=config.get("gate_rule", "majority"),
            force_gate=force,
        )
    except GateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GATE
    text = report.render_ecm(result)
    print(text, end="")
    if args.out:
        _persist_run(Path(args.out), result, text)
    return EXIT_OK


def cmd_diagnose(args) -> int:
    if args.run:
        # re-solve from the persisted design: the fit is deterministic, so
        # the recovered numbers match the original run at full precision
        payload = json.loads((Path(args.run) / "artifacts.json").read_text())
        sample = SampleInfo(
            tuple(payload["sample"]["entities"]),
            tuple(int(p) for p in payload["sample"]["periods"]),
        )
        config = load_config(args.config, args.profile) if (args.config or args.profile) else {}
        significance = float(config.get("significance", 0.05))
        x = np.asarray(payload["design"], dtype=float)
        names = list(payload["design_names"])
        y = np.asarray(payload["response"], dtype=float)
        fit = sur_one_step_fit(
            x,
            y,
            sample,
            has_intercept=bool(payload["model"]["include_constant"]),
            names=names,
        )
    else:
        config = load_config(args.config, args.profile)
        spec = model_spec_from(config)
        ds = load_dataset(config, args.data)
        _require_variables(ds, spec)
        significance = float(config.get("significance", 0.05))
        try:
            result = estimate_ecm(
                ds,
                spec,
                lag=config.get("lag"),
                gate_config=unit_root_config_from(config),
                gate_rule=config.get("gate_rule", "majority"),
                force_gate=bool(config.get("force_gate", False)),
            )
        except GateError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_GATE
        fit, x, names, sample = (
            result.ecm_fit,
            result.design,
            list(result.design_names),
            result.sample,
        )
    diag = gauss_markov_report(fit, x, names, sample, significance=significance)
    text = report.render_diagnostics(diag)
    print(text, end="")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "diagnostics.txt").write_text(text)
        payload = {
            "verdicts": dict(diag.verdicts),
            "overall_pass": diag.overall_pass,
            "jarque_bera": asdict(diag.jarque_bera),
            "white": {
                "statistic": diag.white.statistic,
                "df": diag.white.df,
                "critical_value": diag.white.critical_value,
                "p_value": diag.white.p_value,
                "dropped": list(diag.white.dropped),
            },
            "bp_lm": asdict(diag.bp_lm),
            "pesaran_cd": asdict(diag.pesaran_cd),
            "residual_mean": diag.residual_mean,
            "klein": {
                "max_abs_off_diagonal": diag.klein.max_abs_off_diagonal,
                "max_pair": list(diag.klein.max_pair),
                "r_squared": diag.klein.r_squared,
                "passed": diag.klein.passed,
                "names": list(diag.klein.names),
                "correlations": [
                    [float(v) for v in row] for row in diag.klein.correlations
                ],
            },
            "regressor_residual": {
                "names": list(diag.regressor_residual.names),
                "correlations": list(diag.regressor_residual.correlations),
                "threshold": diag.regressor_residual.threshold,
                "passed": diag.regressor_residual.passed,
            },
        }
        (out / "diagnostics.json").write_text(json.dumps(payload, indent=2))
        plot = residual_plot_data(fit, sample)
        (out / "residual_plot.csv").write_text(plot.to_delimited())
    return EXIT_OK


def cmd_validate(args) -> int:
    checks = default_validation_suite(seed=args.seed, scale=args.scale)
    if args.suite != "default":
        checks = [c for c in checks if args.suite in c.name]
        if not checks:
            raise ConfigError(f"no validation checks match {args.suite!r}")
    outcomes = run_validation(checks)
    text = report.render_validation(outcomes)
    print(text, end="")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="panelecm",
        description="Panel error-correction workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON run configuration")
        p.add_argument("--profile", help="bundled profile name (e.g. eu15-replication)")
        p.add_argument("--data", help="long-format CSV data file")
        p.add_argument("--out", help="output directory")

    p = sub.add_parser("ingest", help="summarize a dataset")
    common(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("interpolate", help="fill interior gaps and print the log")
    common(p)
    p.add_argument("--variables", help="comma-separated variable list")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("unitroot", help="stationarity summary grid")
    common(p)
    p.add_argument("--variables", help="comma-separated variable list")
    p.set_defaults(func=cmd_unitroot)

    p = sub.add_parser("estimate", help="run the full error-correction pipeline")
    common(p)
    p.add_argument("--force-gate", action="store_true", help="estimate even if the gate fails")
    p.add_argument("--lag", type=int, help="pin the dynamic lag (skip selection)")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("diagnose", help="Gauss-Markov battery on a run or config")
    common(p)
    p.add_argument("--run", help="output directory of a previous estimate run")
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("validate", help="Monte Carlo oracle suite")
    p.add_argument("--suite", default="default", help="check-name filter")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="replication multiplier (0.1 for a quick pass)",
    )
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PanelEcmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
