"""Fixed-layout text rendering of estimation and diagnostic output.

Coefficient tables print 6 decimal places; correlation matrices print 2
(the structured JSON artifacts keep full precision).
"""

from __future__ import annotations

import numpy as np

from .diagnostics import DiagnosticsReport
from .ecm import EcmResult
from .regression import CROSS_SECTION_SUR, FitResult
from .unitroot import (
    DET_INTERCEPT,
    DET_NONE,
    DET_TREND,
    DIFFERENCE,
    LEVEL,
    UnitRootSummary,
)

_DET_HEADERS = (
    (DET_INTERCEPT, "Intercept"),
    (DET_TREND, "Intercept+trend"),
    (DET_NONE, "None"),
)


def render_fit(
    fit: FitResult,
    dependent_label: str,
    method: str | None = None,
    extra_header: tuple[str, ...] = (),
) -> str:
    """EViews-style estimation block: header, coefficient table, summary."""
    if method is None:
        method = (
            "Panel EGLS (Cross-section SUR)"
            if fit.weighting == CROSS_SECTION_SUR
            else "Panel Least Squares"
        )
    lines = [f"Dependent Variable: {dependent_label}", f"Method: {method}"]
    if fit.sample is not None:
        s = fit.sample
        lines += [
            f"Sample (adjusted): {s.periods[0]} {s.periods[-1]}",
            f"Periods included: {s.n_periods}",
            f"Cross-sections included: {s.n_entities}",
            f"Total panel (balanced) observations: {fit.n_observations}",
        ]
    else:
        lines.append(f"Included observations: {fit.n_observations}")
    if fit.weighting == CROSS_SECTION_SUR:
        lines.append("Linear estimation after one-step weighting matrix")
    lines.extend(extra_header)
    lines.append("")
    lines.append(
        f"{'Variable':<16}{'Coefficient':>14}{'Std. Error':>14}{'t-Statistic':>14}{'Prob.':>12}"
    )
    for name, c, s, t, p in zip(
        fit.param_names,
        fit.coefficients,
        fit.standard_errors,
        fit.t_statistics,
        fit.p_values,
    ):
        lines.append(f"{name:<16}{c:>14.6f}{s:>14.6f}{t:>14.6f}{p:>12.6f}")
    lines.append("")
    lines.append(
        "Weighted Statistics" if fit.weighting == CROSS_SECTION_SUR else "Statistics"
    )

    def stat(v):
        return f"{v:.6f}" if v is not None else "n/a"

    pairs = [
        ("R-squared", stat(fit.r_squared), "Mean dependent var", stat(fit.mean_dependent)),
        (
            "Adjusted R-squared",
            stat(fit.adjusted_r_squared),
            "S.D. dependent var",
            stat(fit.sd_dependent),
        ),
        (
            "S.E. of regression",
            stat(fit.se_of_regression),
            "Sum squared resid",
            stat(fit.ssr),
        ),
        (
            "F-statistic",
            stat(fit.f_statistic),
            "Durbin-Watson stat",
            stat(fit.durbin_watson),
        ),
        ("Prob(F-statistic)", stat(fit.f_probability), "", ""),
    ]
    for left, lv, right, rv in pairs:
        line = f"{left:<20}{lv:>14}"
        if right:
            line += f"    {right:<20}{rv:>14}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_ecm(result: EcmResult) -> str:
    """Full pipeline report: long-run fit, gate, lag table, final estimation."""
    parts = []
    if result.gate_forced:
        parts.append(
            "*** GATE-OVERRIDDEN: equilibrium errors failed the stationarity gate "
            f"({result.cointegration.rejections} of {result.cointegration.applicable} "
            "tests reject the unit root); estimates may be spurious ***\n"
        )
    parts.append("=== Long-run levels regression ===")
    parts.append(render_fit(result.long_run_fit, result.spec.dependent.upper()))
    gate = result.cointegration
    parts.append(
        "=== Equilibrium-error stationarity gate ===\n"
        f"rule: {gate.rule}; {gate.rejections} of {gate.applicable} applicable tests "
        f"reject the unit root -> {'PASS' if gate.passed else 'FAIL'}\n"
    )
    if result.sic_table:
        parts.append("=== Schwarz criterion by dynamic lag (common sample) ===")
        for lag, sic in result.sic_table:
            marker = "  <- selected" if lag == result.selected_lag else ""
            parts.append(f"lag {lag}: {sic:.6f}{marker}")
        parts.append("")
    parts.append("=== Error-correction estimation ===")
    parts.append(render_fit(result.ecm_fit, f"D({result.spec.dependent.upper()})"))
    parts.append(
        f"Speed of adjustment (per period): {result.speed_of_adjustment:.6f} "
        f"(p = {result.speed_of_adjustment_pvalue:.6f})"
    )
    return "\n".join(parts) + "\n"


def render_summary_grid(summaries: dict[str, UnitRootSummary]) -> str:
    """One row per variable: rejection counts per spec, level and difference."""
    lines = [
        "Stationarity tests - summary grid",
        "(number of tests rejecting the unit root, level | first difference)",
        "",
    ]
    header = f"{'Variable':<14}"
    for _, name in _DET_HEADERS:
        header += f"{name:>18}"
    header += " | "
    for _, name in _DET_HEADERS:
        header += f"{name:>18}"
    lines.append(header)
    flagged = []
    for var, summary in summaries.items():
        row = f"{var:<14}"
        for det, _ in _DET_HEADERS:
            r, a = summary.counts(det, LEVEL)
            row += f"{f'{r} of {a}':>18}"
        row += " | "
        for det, _ in _DET_HEADERS:
            r, a = summary.counts(det, DIFFERENCE)
            row += f"{f'{r} of {a}':>18}"
        if summary.hadri_flag():
            row += " *"
            flagged.append(var)
        lines.append(row)
    if flagged:
        lines.append("")
        lines.append(
            "* Hadri rejects the stationarity hypothesis at level and accepts it "
            "after first differencing."
        )
    return "\n".join(lines) + "\n"


def render_correlation_matrix(col_names, matrix, row_names=None) -> str:
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    if row_names is None:
        row_names = col_names
    width = max(8, max(len(str(n)) for n in [*col_names, *row_names]) + 2)
    lines = [" " * width + "".join(f"{str(n):>{width}}" for n in col_names)]
    for name, row in zip(row_names, matrix):
        lines.append(f"{str(name):<{width}}" + "".join(f"{v:>{width}.2f}" for v in row))
    return "\n".join(lines) + "\n"


def render_diagnostics(report: DiagnosticsReport) -> str:
    """Two-column hypothesis table plus the correlation matrices."""
    sig = report.significance
    lines = [f"Gauss-Markov residual checks (significance {sig:g})", ""]
    lines.append(f"{'Hypothesis':<38}{'Method':<20}{'Result':>12}{'Verdict':>10}")

    def verdict(ok: bool) -> str:
        return "pass" if ok else "FAIL"

    jb = report.jarque_bera
    lines.append(
        f"{'Normal distribution of residuals':<38}{'Jarque-Bera':<20}"
        f"{jb.p_value:>12.3f}{verdict(report.verdicts['residuals_normal']):>10}"
    )
    w = report.white
    lines.append(
        f"{'Homoskedasticity':<38}{'White test':<20}"
        f"{w.statistic:>12.3f}{verdict(report.verdicts['homoskedastic']):>10}"
    )
    lines.append(
        f"{'':<38}{f'  (df {w.df}, critical {w.critical_value:.3f})':<32}"
    )
    bp = report.bp_lm
    lines.append(
        f"{'Cross-section dependence absence':<38}{'Breusch-Pagan LM':<20}"
        f"{bp.p_value:>12.3f}{verdict(report.verdicts['no_cross_section_dependence_lm']):>10}"
    )
    cd = report.pesaran_cd
    lines.append(
        f"{'Cross-section dependence absence':<38}{'Pesaran CD':<20}"
        f"{cd.p_value:>12.3f}{verdict(report.verdicts['no_cross_section_dependence_cd']):>10}"
    )
    lines.append(
        f"{'Zero mean of residuals':<38}{'residual mean':<20}"
        f"{report.residual_mean:>12.6f}{verdict(report.verdicts['zero_mean_errors']):>10}"
    )
    lines.append("")
    klein = report.klein
    lines.append(
        f"Multicollinearity screen: max |corr| = {klein.max_abs_off_diagonal:.2f} "
        f"({klein.max_pair[0]} vs {klein.max_pair[1]}) "
        f"{'<' if klein.passed else '>='} R-squared = {klein.r_squared:.4f} "
        f"-> {verdict(klein.passed)}"
    )
    lines.append("")
    lines.append("Regressor correlation matrix:")
    lines.append(render_correlation_matrix(klein.names, klein.correlations))
    rr = report.regressor_residual
    lines.append("Residual-regressor correlations (threshold %.2f):" % rr.threshold)
    lines.append(
        render_correlation_matrix(
            rr.names, np.array([rr.correlations]), row_names=["Residuals"]
        )
    )
    lines.append(f"Overall verdict: {verdict(report.overall_pass)}")
    failed = [k for k, ok in report.verdicts.items() if not ok]
    if failed:
        lines.append("Failed hypotheses: " + ", ".join(failed))
    return "\n".join(lines) + "\n"


def render_validation(outcomes) -> str:
    lines = [
        f"{'Check':<22}{'Rate':>8}{'95% interval':>20}{'Band':>18}{'Reps':>7}{'Verdict':>9}"
    ]
    for item in outcomes:
        r = item.result
        lines.append(
            f"{item.check.name:<22}{r.rate:>8.4f}"
            f"{f'[{r.ci_low:.4f}, {r.ci_high:.4f}]':>20}"
            f"{f'[{item.check.band[0]:g}, {item.check.band[1]:g}]':>18}"
            f"{r.replications:>7}{'pass' if item.passed else 'FAIL':>9}"
        )
    n_pass = sum(1 for o in outcomes if o.passed)
    lines.append(f"{n_pass} of {len(outcomes)} checks passed")
    return "\n".join(lines) + "\n"
