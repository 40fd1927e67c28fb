"""Least-squares machinery: pooled OLS, weighted GLS, and summary statistics.

Solves run through an orthogonal decomposition (LAPACK lstsq); singular
values below 1e-10 of the largest flag rank deficiency.  All statistics on a
weighted fit refer to the whitened (transformed) data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import linalg as sla

from .distributions import f_pvalue, t_pvalue
from .errors import EstimationError, RankDeficientError
from .panel import SampleInfo

RANK_RTOL = 1e-10

IDENTITY = "identity"
CROSS_SECTION_SUR = "cross_section_sur"


@dataclass(frozen=True)
class WeightMatrix:
    """GLS weighting: identity (OLS) or an N x N cross-section covariance."""

    kind: str = IDENTITY
    sigma: "object | None" = None  # CrossSectionCovariance when kind is SUR

    def __post_init__(self):
        if self.kind not in (IDENTITY, CROSS_SECTION_SUR):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if (self.kind == CROSS_SECTION_SUR) != (self.sigma is not None):
            raise ValueError("sigma must be present exactly when kind is cross_section_sur")


@dataclass(frozen=True)
class FitResult:
    """Coefficients, inference columns, and summary block of one fit.

    For weighted fits every summary statistic (R-squared, F, DW, SIC, ...)
    is computed on the whitened data, and ``residuals`` are the whitened
    residuals row-aligned with the design.
    """

    param_names: tuple[str, ...]
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    response: np.ndarray
    n_observations: int
    n_parameters: int
    has_intercept: bool
    ssr: float
    r_squared: float
    adjusted_r_squared: float
    se_of_regression: float
    f_statistic: float | None
    f_probability: float | None
    durbin_watson: float | None
    schwarz_criterion: float | None
    mean_dependent: float
    sd_dependent: float
    weighting: str = IDENTITY
    sample: SampleInfo | None = field(default=None, compare=False)

    def coefficient(self, name: str) -> float:
        return float(self.coefficients[self.param_names.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.param_names.index(name)])

    def to_dict(self) -> dict:
        """JSON-ready tree with full-precision numbers."""
        out = {
            "parameters": [
                {
                    "name": n,
                    "coefficient": float(c),
                    "std_error": float(s),
                    "t_statistic": float(t),
                    "p_value": float(p),
                }
                for n, c, s, t, p in zip(
                    self.param_names,
                    self.coefficients,
                    self.standard_errors,
                    self.t_statistics,
                    self.p_values,
                )
            ],
            "n_observations": self.n_observations,
            "n_parameters": self.n_parameters,
            "has_intercept": self.has_intercept,
            "ssr": self.ssr,
            "r_squared": self.r_squared,
            "adjusted_r_squared": self.adjusted_r_squared,
            "se_of_regression": self.se_of_regression,
            "f_statistic": self.f_statistic,
            "f_probability": self.f_probability,
            "durbin_watson": self.durbin_watson,
            "schwarz_criterion": self.schwarz_criterion,
            "mean_dependent": self.mean_dependent,
            "sd_dependent": self.sd_dependent,
            "weighting": self.weighting,
            "residuals": [float(r) for r in self.residuals],
        }
        if self.sample is not None:
            out["sample"] = {
                "entities": list(self.sample.entities),
                "periods": list(self.sample.periods),
            }
        return out


def _collinear_columns(x: np.ndarray, names: Sequence[str]) -> list[str]:
    """Name the columns a pivoted QR attributes the rank loss to."""
    _, r, piv = sla.qr(x, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag.size == 0 or diag[0] == 0.0:
        return list(names)
    bad = diag < RANK_RTOL * diag[0]
    return [names[piv[j]] for j in np.flatnonzero(bad)]


def _design(x: np.ndarray, names: Sequence[str] | None, has_intercept: bool):
    x = np.atleast_2d(np.asarray(x, dtype=float))
    if x.ndim != 2:
        raise EstimationError("design matrix must be two-dimensional")
    if names is None:
        names = [f"X{i + 1}" for i in range(x.shape[1])]
    names = list(names)
    if has_intercept:
        x = np.column_stack([np.ones(x.shape[0]), x])
        names = ["C", *names]
    return x, names


def ols_fit(
    x: np.ndarray,
    y: np.ndarray,
    has_intercept: bool = True,
    names: Sequence[str] | None = None,
    sample: SampleInfo | None = None,
) -> FitResult:
    """Ordinary least squares of ``y`` on ``x`` (constant prepended on request).

    Raises
    ------
    RankDeficientError
        If the design has collinear columns (named in the error).
    EstimationError
        If there are no more observations than parameters.
    """
    y = np.asarray(y, dtype=float).reshape(-1)
    x_full, names_full = _design(x, names, has_intercept)
    n, k = x_full.shape
    if n <= k:
        raise EstimationError(
            f"{n} observations cannot identify {k} parameters; need n > k"
        )
    beta, _, rank, sv = np.linalg.lstsq(x_full, y, rcond=RANK_RTOL)
    if rank < k:
        cols = _collinear_columns(x_full, names_full)
        raise RankDeficientError(
            f"design matrix is rank deficient (rank {rank} < {k}); "
            f"collinear columns: {', '.join(cols)}",
            columns=cols,
        )
    return _finish_fit(
        x_full, y, beta, names_full, has_intercept, sample, weighting=IDENTITY
    )


def _finish_fit(
    x: np.ndarray,
    y: np.ndarray,
    beta: np.ndarray,
    names: Sequence[str],
    has_intercept: bool,
    sample: SampleInfo | None,
    weighting: str,
) -> FitResult:
    n, k = x.shape
    fitted = x @ beta
    resid = y - fitted
    ssr = float(resid @ resid)
    df = n - k
    s2 = ssr / df
    xtx_inv = np.linalg.inv(x.T @ x)
    se = np.sqrt(np.maximum(np.diag(xtx_inv), 0.0) * s2)
    with np.errstate(divide="ignore", invalid="ignore"):
        tstats = np.where(se > 0, beta / se, np.inf)
    pvals = np.array([t_pvalue(t, df) for t in tstats])

    mean_y = float(y.mean())
    sd_y = float(y.std(ddof=1)) if n > 1 else 0.0
    if has_intercept:
        tss = float(((y - mean_y) ** 2).sum())
    else:
        tss = float((y**2).sum())
    r2 = 1.0 - ssr / tss if tss > 0 else 1.0
    adj = 1.0 - (1.0 - r2) * (n - 1) / df if df > 0 else r2

    f_stat = f_prob = None
    n_slopes = k - 1 if has_intercept else k
    # whitened (weighted) fits can show r2 < 0; F is undefined there
    if has_intercept and n_slopes > 0 and 0.0 <= r2 < 1.0:
        f_stat = (r2 / n_slopes) / ((1.0 - r2) / df)
        f_prob = f_pvalue(f_stat, n_slopes, df)

    dw = None
    if sample is not None:
        dw = durbin_watson(sample.reshape(resid))
    elif n >= 2 and ssr > 0:
        dw = durbin_watson(resid)

    sic = None
    if ssr > 0:
        sic = math.log(ssr / n) + k * math.log(n) / n

    return FitResult(
        param_names=tuple(names),
        coefficients=beta,
        standard_errors=se,
        t_statistics=np.asarray(tstats, dtype=float),
        p_values=pvals,
        residuals=resid,
        fitted=fitted,
        response=y,
        n_observations=n,
        n_parameters=k,
        has_intercept=has_intercept,
        ssr=ssr,
        r_squared=r2,
        adjusted_r_squared=adj,
        se_of_regression=math.sqrt(s2),
        f_statistic=f_stat,
        f_probability=f_prob,
        durbin_watson=dw,
        schwarz_criterion=sic,
        mean_dependent=mean_y,
        sd_dependent=sd_y,
        weighting=weighting,
        sample=sample,
    )


def whiten_cross_section(
    values: np.ndarray, sigma: np.ndarray, sample: SampleInfo
) -> np.ndarray:
    """Apply the inverse Cholesky factor of sigma across entities, per period.

    ``values`` is a stacked vector or a stacked-by-row matrix whose rows
    follow the entity-major layout of ``sample``.
    """
    n, t = sample.n_entities, sample.n_periods
    chol = np.linalg.cholesky(sigma)
    arr = np.asarray(values, dtype=float)
    one_dim = arr.ndim == 1
    cols = arr.reshape(sample.n_obs, -1)
    out = np.empty_like(cols)
    for j in range(cols.shape[1]):
        block = cols[:, j].reshape(n, t)
        out[:, j] = sla.solve_triangular(chol, block, lower=True).reshape(-1)
    return out.reshape(-1) if one_dim else out


def gls_fit(
    x: np.ndarray,
    y: np.ndarray,
    weight: WeightMatrix,
    has_intercept: bool = True,
    names: Sequence[str] | None = None,
    sample: SampleInfo | None = None,
) -> FitResult:
    """Generalized least squares under the given weighting.

    With an identity weight this is exactly :func:`ols_fit`.  With a
    cross-section covariance the stacked system is whitened per period by the
    inverse Cholesky factor and refit; the summary block describes the
    whitened data.
    """
    if weight.kind == IDENTITY:
        return ols_fit(x, y, has_intercept=has_intercept, names=names, sample=sample)
    if sample is None:
        raise EstimationError("cross-section weighting requires a sample descriptor")
    sigma_obj = weight.sigma
    sigma = np.asarray(sigma_obj.sigma, dtype=float)
    if tuple(sigma_obj.entities) != tuple(sample.entities):
        raise EstimationError("sigma entity order does not match the sample")
    y = np.asarray(y, dtype=float).reshape(-1)
    x_full, names_full = _design(x, names, has_intercept)
    if x_full.shape[0] != sample.n_obs:
        raise EstimationError(
            f"design has {x_full.shape[0]} rows but sample expects {sample.n_obs}"
        )
    try:
        xw = whiten_cross_section(x_full, sigma, sample)
        yw = whiten_cross_section(y, sigma, sample)
    except np.linalg.LinAlgError:
        raise EstimationError("weight covariance is not positive definite") from None
    n, k = xw.shape
    if n <= k:
        raise EstimationError(f"{n} observations cannot identify {k} parameters")
    beta, _, rank, _ = np.linalg.lstsq(xw, yw, rcond=RANK_RTOL)
    if rank < k:
        cols = _collinear_columns(xw, names_full)
        raise RankDeficientError(
            f"whitened design is rank deficient; collinear columns: {', '.join(cols)}",
            columns=cols,
        )
    # has_intercept describes the original design; the whitened constant
    # column is no longer all ones, but the summary conventions follow the
    # original specification (weighted-statistics block).
    return _finish_fit(
        xw, yw, beta, names_full, has_intercept, sample, weighting=CROSS_SECTION_SUR
    )


def durbin_watson(residuals) -> float:
    """Durbin-Watson statistic with differences taken within entities only.

    Accepts a single series (1-D), an (N, T) matrix of per-entity rows, or a
    sequence of per-entity series.
    """
    if isinstance(residuals, np.ndarray) and residuals.ndim == 1:
        groups = [residuals]
    elif isinstance(residuals, np.ndarray):
        groups = list(residuals)
    else:
        groups = [np.asarray(g, dtype=float) for g in residuals]
    num = 0.0
    den = 0.0
    for g in groups:
        g = np.asarray(g, dtype=float)
        if g.size < 2:
            raise EstimationError("each entity needs at least 2 consecutive residuals")
        num += float(np.sum(np.diff(g) ** 2))
        den += float(np.sum(g**2))
    if den == 0.0:
        raise EstimationError("Durbin-Watson undefined for all-zero residuals")
    return num / den


def schwarz_criterion(fit: FitResult) -> float:
    """Schwarz information criterion ln(SSR/n) + k ln(n)/n; lower is better."""
    return schwarz_from(fit.ssr, fit.n_observations, fit.n_parameters)


def schwarz_from(ssr: float, n: int, k: int) -> float:
    if n <= k:
        raise EstimationError("SIC needs more observations than parameters")
    if ssr <= 0.0:
        raise EstimationError("SIC undefined for zero residual sum of squares")
    return math.log(ssr / n) + k * math.log(n) / n
