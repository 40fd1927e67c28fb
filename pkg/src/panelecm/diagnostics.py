"""Gauss-Markov verification battery for a fitted panel regression.

Multicollinearity screen (pairwise regressor correlations against the model
R-squared, Klein's rule), regressor-residual correlation, Jarque-Bera
normality, White heteroskedasticity, Breusch-Pagan LM and Pesaran CD
cross-section dependence, and actual/fitted/residual plot data.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
from scipy import linalg as sla

from .distributions import chi_square_pvalue, chi_square_quantile, normal_pvalue, t_pvalue
from .errors import EstimationError
from .panel import SampleInfo
from .regression import RANK_RTOL, FitResult, ols_fit

DEFAULT_RESIDUAL_CORRELATION_THRESHOLD = 0.10


@dataclass(frozen=True)
class KleinBlock:
    names: tuple[str, ...]
    correlations: np.ndarray  # (k, k) pairwise regressor correlations
    max_abs_off_diagonal: float
    max_pair: tuple[str, str]
    r_squared: float
    passed: bool


@dataclass(frozen=True)
class CorrelationBlock:
    names: tuple[str, ...]
    correlations: tuple[float, ...]
    threshold: float
    passed: bool


@dataclass(frozen=True)
class JarqueBeraBlock:
    statistic: float
    p_value: float
    skewness: float
    kurtosis: float
    n: int


@dataclass(frozen=True)
class WhiteBlock:
    statistic: float  # n * R-squared of the auxiliary regression
    df: int
    critical_value: float
    p_value: float
    homoskedastic: bool
    terms: tuple[str, ...]
    dropped: tuple[str, ...]


@dataclass(frozen=True)
class DependenceBlock:
    statistic: float
    df: int | None
    p_value: float


@dataclass(frozen=True)
class DiagnosticsReport:
    klein: KleinBlock
    regressor_residual: CorrelationBlock
    jarque_bera: JarqueBeraBlock
    white: WhiteBlock
    bp_lm: DependenceBlock
    pesaran_cd: DependenceBlock
    residual_mean: float
    significance: float
    verdicts: Mapping[str, bool] = field(default_factory=dict)

    @property
    def overall_pass(self) -> bool:
        return all(self.verdicts.values())


def klein_criterion(
    x: np.ndarray, names: Sequence[str], r_squared: float
) -> KleinBlock:
    """Pairwise regressor correlations against the model R-squared.

    No multicollinearity is flagged when every off-diagonal correlation is
    smaller in magnitude than the coefficient of determination.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[1] < 2:
        raise EstimationError("the multicollinearity screen needs at least two regressors")
    corr = np.corrcoef(x, rowvar=False)
    k = corr.shape[0]
    off = np.abs(corr - np.eye(k))
    idx = np.unravel_index(np.argmax(off), off.shape)
    max_abs = float(off[idx])
    return KleinBlock(
        names=tuple(names),
        correlations=corr,
        max_abs_off_diagonal=max_abs,
        max_pair=(names[idx[0]], names[idx[1]]),
        r_squared=float(r_squared),
        passed=bool(max_abs < r_squared),
    )


def regressor_residual_correlation(
    x: np.ndarray,
    residuals: np.ndarray,
    names: Sequence[str],
    threshold: float = DEFAULT_RESIDUAL_CORRELATION_THRESHOLD,
) -> CorrelationBlock:
    """Pearson correlation of the residuals with each regressor."""
    x = np.asarray(x, dtype=float)
    residuals = np.asarray(residuals, dtype=float)
    corrs = []
    for j in range(x.shape[1]):
        col = x[:, j]
        sd = col.std() * residuals.std()
        if sd == 0.0:
            corrs.append(0.0)
            continue
        corrs.append(float(np.mean((col - col.mean()) * (residuals - residuals.mean())) / sd))
    passed = all(abs(c) < threshold for c in corrs)
    return CorrelationBlock(tuple(names), tuple(corrs), threshold, passed)


def jarque_bera(residuals: np.ndarray) -> JarqueBeraBlock:
    """Jarque-Bera normality statistic n/6 * (S^2 + (K-3)^2 / 4).

    Uses the raw fourth standardized moment for kurtosis (normal = 3);
    p-value from chi-square with 2 degrees of freedom.
    """
    e = np.asarray(residuals, dtype=float).reshape(-1)
    n = e.size
    if n < 4:
        raise EstimationError("Jarque-Bera needs at least 4 observations")
    centered = e - e.mean()
    m2 = float(np.mean(centered**2))
    if m2 == 0.0:
        raise EstimationError("Jarque-Bera undefined for constant residuals")
    s = float(np.mean(centered**3) / m2**1.5)
    k = float(np.mean(centered**4) / m2**2)
    stat = n / 6.0 * (s**2 + (k - 3.0) ** 2 / 4.0)
    return JarqueBeraBlock(stat, chi_square_pvalue(stat, 2), s, k, n)


def _white_terms(
    x: np.ndarray, names: Sequence[str], cross_products: bool
) -> tuple[np.ndarray, list[str]]:
    cols: list[np.ndarray] = []
    labels: list[str] = []
    k = x.shape[1]
    for j in range(k):
        cols.append(x[:, j])
        labels.append(str(names[j]))
    for j in range(k):
        cols.append(x[:, j] ** 2)
        labels.append(f"{names[j]}^2")
    if cross_products:
        for i in range(k):
            for j in range(i + 1, k):
                cols.append(x[:, i] * x[:, j])
                labels.append(f"{names[i]}*{names[j]}")
    return np.column_stack(cols), labels


def white_test(
    fit: FitResult,
    x: np.ndarray,
    names: Sequence[str],
    significance: float = 0.05,
    cross_products: bool = True,
) -> WhiteBlock:
    """White heteroskedasticity test: squared residuals on levels, squares,
    and (by default) cross products.

    Collinear auxiliary terms are dropped and reported; the statistic is
    n * R-squared of the auxiliary regression against chi-square(df) where df
    counts the retained auxiliary regressors.
    """
    x = np.asarray(x, dtype=float)
    aux, labels = _white_terms(x, names, cross_products)
    # rank-filter the auxiliary terms after removing the constant direction,
    # so anything collinear with the intercept or with earlier terms drops
    centered = aux - aux.mean(axis=0)
    _, r, piv = sla.qr(centered, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag.size == 0 or diag[0] == 0.0:
        raise EstimationError("all White auxiliary terms are collinear")
    kept_aux = sorted(piv[np.flatnonzero(diag >= RANK_RTOL * diag[0])])
    dropped = tuple(labels[j] for j in range(aux.shape[1]) if j not in kept_aux)
    aux_kept = aux[:, kept_aux]
    kept_labels = tuple(labels[j] for j in kept_aux)
    e2 = np.asarray(fit.residuals, dtype=float) ** 2
    aux_fit = ols_fit(aux_kept, e2, has_intercept=True, names=list(kept_labels))
    df = aux_kept.shape[1]
    stat = aux_fit.n_observations * aux_fit.r_squared
    critical = chi_square_quantile(1.0 - significance, df)
    return WhiteBlock(
        statistic=float(stat),
        df=df,
        critical_value=critical,
        p_value=chi_square_pvalue(stat, df),
        homoskedastic=bool(stat < critical),
        terms=kept_labels,
        dropped=dropped,
    )


def _pairwise_correlations(residuals: np.ndarray) -> np.ndarray:
    """Upper-triangle pairwise correlations of (N, T) residual rows."""
    e = np.asarray(residuals, dtype=float)
    if e.ndim != 2 or e.shape[0] < 2:
        raise EstimationError("cross-section dependence tests need at least 2 entities")
    corr = np.corrcoef(e)
    iu = np.triu_indices(e.shape[0], k=1)
    return corr[iu]


def breusch_pagan_lm(residuals: np.ndarray) -> DependenceBlock:
    """Breusch-Pagan LM statistic T * sum of squared pairwise correlations,
    chi-square with N(N-1)/2 degrees of freedom."""
    e = np.asarray(residuals, dtype=float)
    n, t = e.shape
    rho = _pairwise_correlations(e)
    stat = float(t * np.sum(rho**2))
    df = n * (n - 1) // 2
    return DependenceBlock(stat, df, chi_square_pvalue(stat, df))


def pesaran_cd(residuals: np.ndarray) -> DependenceBlock:
    """Pesaran CD statistic sqrt(2T / (N(N-1))) * sum of pairwise
    correlations, two-sided standard normal reference."""
    e = np.asarray(residuals, dtype=float)
    n, t = e.shape
    rho = _pairwise_correlations(e)
    stat = float(math.sqrt(2.0 * t / (n * (n - 1))) * np.sum(rho))
    return DependenceBlock(stat, None, normal_pvalue(stat))


@dataclass(frozen=True)
class ResidualPlotData:
    rows: tuple[tuple[str, int, float, float, float], ...]  # entity, period, actual, fitted, residual
    residual_mean: float

    def to_delimited(self, delimiter: str = ",") -> str:
        out = io.StringIO()
        writer = csv.writer(out, delimiter=delimiter)
        writer.writerow(["entity", "period", "actual", "fitted", "residual"])
        for row in self.rows:
            writer.writerow([row[0], row[1], f"{row[2]!r}", f"{row[3]!r}", f"{row[4]!r}"])
        return out.getvalue()


def residual_plot_data(fit: FitResult, sample: SampleInfo) -> ResidualPlotData:
    """Aligned actual/fitted/residual triples per entity-period."""
    labels = sample.row_labels()
    if len(labels) != fit.n_observations:
        raise EstimationError("sample descriptor does not match the fit")
    rows = tuple(
        (entity, period, float(a), float(f), float(r))
        for (entity, period), a, f, r in zip(labels, fit.response, fit.fitted, fit.residuals)
    )
    return ResidualPlotData(rows, float(np.mean(fit.residuals)))


def residual_trend_significant(
    fit: FitResult, sample: SampleInfo, significance: float = 0.05
) -> bool:
    """True when residuals regressed on time show a significant slope."""
    resid = sample.reshape(fit.residuals)
    n, t = resid.shape
    time = np.tile(np.arange(1.0, t + 1.0), n)
    trend_fit = ols_fit(time.reshape(-1, 1), resid.reshape(-1), names=["trend"])
    return trend_fit.p_value("trend") < significance


def gauss_markov_report(
    fit: FitResult,
    x: np.ndarray,
    names: Sequence[str],
    sample: SampleInfo,
    significance: float = 0.05,
    residual_corr_threshold: float = DEFAULT_RESIDUAL_CORRELATION_THRESHOLD,
    white_cross_products: bool = True,
) -> DiagnosticsReport:
    """Run the full battery on a fitted equation and aggregate verdicts.

    ``x`` and ``names`` describe the stochastic regressors (constant
    excluded).  Structural checks (all parameters significant, more
    observations than parameters) are included in the verdict map; the
    overall verdict passes only when every hypothesis does.
    """
    klein = klein_criterion(x, names, fit.r_squared)
    reg_resid = regressor_residual_correlation(
        x, fit.residuals, names, residual_corr_threshold
    )
    jb = jarque_bera(fit.residuals)
    white = white_test(fit, x, names, significance, white_cross_products)
    resid_matrix = sample.reshape(fit.residuals)
    bp = breusch_pagan_lm(resid_matrix)
    cd = pesaran_cd(resid_matrix)
    residual_mean = float(np.mean(fit.residuals))
    sd = float(np.std(fit.residuals))
    mean_tstat = residual_mean / (sd / math.sqrt(fit.n_observations)) if sd > 0 else 0.0
    mean_pvalue = normal_pvalue(mean_tstat)

    verdicts = {
        "parameters_significant": bool(np.all(fit.p_values < significance)),
        "n_exceeds_k": fit.n_observations > fit.n_parameters,
        "no_multicollinearity": klein.passed,
        "regressors_uncorrelated_with_residuals": reg_resid.passed,
        "residuals_normal": jb.p_value >= significance,
        "homoskedastic": white.homoskedastic,
        "no_cross_section_dependence_lm": bp.p_value >= significance,
        "no_cross_section_dependence_cd": cd.p_value >= significance,
        "zero_mean_errors": mean_pvalue >= significance,
    }
    return DiagnosticsReport(
        klein=klein,
        regressor_residual=reg_resid,
        jarque_bera=jb,
        white=white,
        bp_lm=bp,
        pesaran_cd=cd,
        residual_mean=residual_mean,
        significance=significance,
        verdicts=verdicts,
    )
