"""Two-stage error-correction pipeline for balanced panels.

Stage one fits the long-run levels relationship by pooled OLS and extracts
the equilibrium errors; estimation of the differenced model is gated on
those errors being stationary.  Stage two selects the dynamic lag by the
Schwarz criterion over a common sample and estimates the error-correction
equation by one-step Cross-Section SUR feasible GLS.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import EstimationError, GateError
from .panel import (
    FIRST_DIFFERENCE,
    LEVEL,
    PanelDataset,
    SampleInfo,
    TransformSpec,
    align_balanced,
)
from .regression import FitResult, ols_fit, schwarz_from
from .sur import sur_one_step_fit
from .unitroot import (
    APPLICABLE_TESTS,
    DET_INTERCEPT,
    REJECT,
    UnitRootConfig,
    UnitRootSummary,
    summary_window,
)

ECT_NAME = "ECT"  # equilibrium (error-correction) term injected into the dataset


@dataclass(frozen=True)
class EcmSpec:
    """Declarative right-hand side of the error-correction equation.

    ``lagged_difference_terms`` enter as first differences at the selected
    lag (the dependent variable must appear here exactly once, providing the
    autoregressive term); ``contemporaneous_difference_terms`` enter as first
    differences with no lag; the equilibrium error always enters at lag one.
    """

    dependent: str
    long_run_terms: tuple[str, ...]
    lagged_difference_terms: tuple[str, ...]
    contemporaneous_difference_terms: tuple[str, ...]
    include_constant: bool = True
    lag_search_range: tuple[int, int] = (1, 4)

    def __post_init__(self):
        object.__setattr__(self, "long_run_terms", tuple(self.long_run_terms))
        object.__setattr__(
            self, "lagged_difference_terms", tuple(self.lagged_difference_terms)
        )
        object.__setattr__(
            self,
            "contemporaneous_difference_terms",
            tuple(self.contemporaneous_difference_terms),
        )
        if self.lagged_difference_terms.count(self.dependent) != 1:
            raise ValueError(
                "the dependent variable must appear exactly once among the "
                "lagged difference terms (the autoregressive term)"
            )
        overlap = set(self.lagged_difference_terms) & set(
            self.contemporaneous_difference_terms
        )
        if overlap:
            raise ValueError(
                f"variables {sorted(overlap)} appear in both difference-term lists"
            )
        lo, hi = self.lag_search_range
        if not 1 <= lo <= hi <= 4:
            raise ValueError("lag search range must lie within 1..4")

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for name in (
            self.dependent,
            *self.long_run_terms,
            *self.lagged_difference_terms,
            *self.contemporaneous_difference_terms,
        ):
            if name not in seen:
                seen.append(name)
        return tuple(seen)

    def regression_terms(self, lag: int) -> list[TransformSpec]:
        terms = [
            TransformSpec(v, FIRST_DIFFERENCE, lag) for v in self.lagged_difference_terms
        ]
        terms += [
            TransformSpec(v, FIRST_DIFFERENCE, 0)
            for v in self.contemporaneous_difference_terms
        ]
        terms.append(TransformSpec(ECT_NAME, LEVEL, 1))
        return terms


@dataclass(frozen=True)
class GateResult:
    passed: bool
    summary: UnitRootSummary
    rejections: int
    applicable: int
    rule: str


@dataclass(frozen=True)
class EcmResult:
    """Everything the pipeline produced, stage by stage."""

    spec: EcmSpec
    long_run_fit: FitResult
    equilibrium_errors: np.ndarray  # (N, T) aligned with the dataset grid
    cointegration: GateResult
    gate_forced: bool
    sic_table: tuple[tuple[int, float], ...]
    selected_lag: int
    ecm_fit: FitResult
    sample: SampleInfo
    design: np.ndarray = field(repr=False)
    design_names: tuple[str, ...] = ()
    response: np.ndarray = field(default=None, repr=False)

    @property
    def speed_of_adjustment(self) -> float:
        return self.ecm_fit.coefficient(f"{ECT_NAME}(-1)")

    @property
    def speed_of_adjustment_pvalue(self) -> float:
        return self.ecm_fit.p_value(f"{ECT_NAME}(-1)")


def long_run_fit(ds: PanelDataset, spec: EcmSpec) -> tuple[FitResult, np.ndarray]:
    """Pooled OLS of dependent levels on the long-run terms plus a constant.

    Returns the fit and the equilibrium errors reshaped to the full
    (entities, periods) grid.
    """
    dependent = TransformSpec(spec.dependent, LEVEL, 0)
    terms = [TransformSpec(v, LEVEL, 0) for v in spec.long_run_terms]
    y, x, labels, sample = align_balanced(ds, terms, dependent)
    fit = ols_fit(x, y, has_intercept=True, names=labels, sample=sample)
    return fit, sample.reshape(fit.residuals)


def cointegration_gate(
    equilibrium_errors: np.ndarray,
    config: UnitRootConfig | None = None,
    rule: str = "majority",
) -> GateResult:
    """Stationarity gate on the equilibrium errors (level, intercept spec).

    Default rule: a strict majority of the applicable unit-root tests must
    reject the unit root.  ``rule`` may instead name a single test.
    """
    config = config or UnitRootConfig(deterministic=DET_INTERCEPT)
    summary = summary_window(np.asarray(equilibrium_errors), config=config)["series"]
    det = config.deterministic
    rejections, applicable = summary.counts(det, "level")
    if rule == "majority":
        passed = rejections * 2 > applicable
    else:
        if rule not in APPLICABLE_TESTS[det]:
            raise ValueError(f"unknown gate rule {rule!r}")
        passed = summary.cell(rule, det, "level").decision == REJECT
    return GateResult(passed, summary, rejections, applicable, rule)


def _common_sample_design(
    ds: PanelDataset, spec: EcmSpec, lag: int, max_lag: int
) -> tuple[np.ndarray, np.ndarray, list[str], SampleInfo]:
    """Design for candidate ``lag`` trimmed to the lag ``max_lag`` sample."""
    dependent = TransformSpec(spec.dependent, FIRST_DIFFERENCE, 0)
    y, x, labels, sample = align_balanced(ds, spec.regression_terms(lag), dependent)
    t_common = ds.n_periods - 1 - max_lag
    t_have = sample.n_periods
    if t_common > t_have:
        raise EstimationError("candidate lag sample shorter than the common sample")
    if t_common < t_have:
        keep = np.zeros((sample.n_entities, t_have), dtype=bool)
        keep[:, t_have - t_common :] = True
        y = y[keep.reshape(-1)]
        x = x[keep.reshape(-1)]
        sample = SampleInfo(sample.entities, sample.periods[t_have - t_common :])
    return y, x, labels, sample


def select_lag(
    ds: PanelDataset,
    spec: EcmSpec,
    equilibrium_errors: np.ndarray | None = None,
) -> tuple[int, tuple[tuple[int, float], ...]]:
    """Schwarz-criterion choice of the dynamic lag over the search range.

    All candidates are estimated by pooled OLS (the first-stage estimator) on
    the sample of the largest candidate lag so the criteria are comparable;
    ties break toward the smaller lag.
    """
    if equilibrium_errors is None:
        _, equilibrium_errors = long_run_fit(ds, spec)
    work = ds.with_variable(ECT_NAME, equilibrium_errors)
    lo, hi = spec.lag_search_range
    table: list[tuple[int, float]] = []
    best_lag, best_sic = lo, np.inf
    for lag in range(lo, hi + 1):
        y, x, labels, sample = _common_sample_design(work, spec, lag, hi)
        fit = ols_fit(x, y, has_intercept=spec.include_constant, names=labels, sample=sample)
        sic = schwarz_from(fit.ssr, fit.n_observations, fit.n_parameters)
        table.append((lag, sic))
        if sic < best_sic - 1e-12:
            best_sic, best_lag = sic, lag
    return best_lag, tuple(table)


def estimate_ecm(
    ds: PanelDataset,
    spec: EcmSpec,
    lag: int | None = None,
    gate_config: UnitRootConfig | None = None,
    gate_rule: str = "majority",
    force_gate: bool = False,
    shrink_sigma: bool = False,
) -> EcmResult:
    """Run the full pipeline and estimate the error-correction equation.

    Stages: long-run levels fit, stationarity gate on the equilibrium errors
    (hard failure unless ``force_gate``), Schwarz lag selection when ``lag``
    is not pinned, then a one-step Cross-Section SUR EGLS fit of the
    differenced equation including the lagged equilibrium error.
    """
    missing = [v for v in spec.variables() if v not in ds.values]
    if missing:
        raise EstimationError(f"dataset lacks required variables: {', '.join(missing)}")
    lr_fit, errors = long_run_fit(ds, spec)
    gate = cointegration_gate(errors, gate_config, gate_rule)
    if not gate.passed and not force_gate:
        raise GateError(
            "equilibrium errors are not stationary "
            f"({gate.rejections} of {gate.applicable} tests reject the unit root); "
            "the error-correction model requires a stationary error term "
            "(use the gate override to estimate anyway)"
        )
    work = ds.with_variable(ECT_NAME, errors)
    if lag is None:
        selected, sic_table = select_lag(ds, spec, errors)
    else:
        lo, hi = spec.lag_search_range
        if not lo <= lag <= hi:
            raise EstimationError(f"lag {lag} outside the search range {lo}..{hi}")
        selected, sic_table = lag, ()
    dependent = TransformSpec(spec.dependent, FIRST_DIFFERENCE, 0)
    y, x, labels, sample = align_balanced(
        work, spec.regression_terms(selected), dependent
    )
    fit = sur_one_step_fit(
        x,
        y,
        sample,
        has_intercept=spec.include_constant,
        names=labels,
        shrink=shrink_sigma,
    )
    return EcmResult(
        spec=spec,
        long_run_fit=lr_fit,
        equilibrium_errors=errors,
        cointegration=gate,
        gate_forced=not gate.passed,
        sic_table=sic_table,
        selected_lag=selected,
        ecm_fit=fit,
        sample=sample,
        design=x,
        design_names=tuple(labels),
        response=y,
    )


def validate_adjustment(result: EcmResult, significance: float = 0.05) -> bool:
    """True when the adjustment coefficient is negative and significant."""
    return (
        result.speed_of_adjustment < 0.0
        and result.speed_of_adjustment_pvalue < significance
    )
