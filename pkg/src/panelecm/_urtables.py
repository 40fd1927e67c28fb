"""Embedded data for unit-root inference.

Response-surface coefficients for Dickey-Fuller-type p-values follow
MacKinnon (1994), "Approximate asymptotic distribution functions for
unit-root and cointegration tests", JBES 12, single-series case.  Small-T
moment tables for the pooled and group-mean panel statistics live in
``_urmoments`` (regenerable via tools/calibrate_unitroot_tables.py).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.stats import norm

from ._urmoments import (
    BREITUNG_ADJUSTMENTS,
    HADRI_MOMENTS,
    IPS_MOMENTS,
    LLC_ADJUSTMENTS,
)

# Regression keys: "nc" no deterministics, "c" intercept, "ct" intercept+trend.
# tau_max/tau_star/tau_min bound the approximation regions; beyond tau_min the
# statistic is clamped so the returned p-value stays strictly positive (the
# Fisher combination needs log p finite).
TAU_MAX = {"nc": math.inf, "c": 2.74, "ct": 0.70}
TAU_STAR = {"nc": -1.04, "c": -1.61, "ct": -2.89}
TAU_MIN = {"nc": -19.04, "c": -18.83, "ct": -16.18}

# p = Phi(g0 + g1*tau + g2*tau^2 [+ g3*tau^3]); small-p polynomial left of
# tau_star, large-p polynomial right of it.
TAU_SMALLP = {
    "nc": (0.6344, 1.2378, 0.032496),
    "c": (2.1659, 1.4412, 0.038269),
    "ct": (3.2512, 1.6047, 0.049588),
}
TAU_LARGEP = {
    "nc": (0.4797, 0.93557, -0.06999, 0.033066),
    "c": (1.7339, 0.93202, -0.12745, -0.010368),
    "ct": (2.5261, 0.61654, -0.37956, -0.060285),
}


def mackinnon_pvalue(stat: float, regression: str) -> float:
    """Unit-root p-value from the MacKinnon (1994) response surface."""
    if regression not in TAU_STAR:
        raise ValueError(f"unknown regression key {regression!r}")
    stat = float(stat)
    if stat > TAU_MAX[regression]:
        return 1.0
    stat = max(stat, TAU_MIN[regression])
    coefs = TAU_SMALLP[regression] if stat <= TAU_STAR[regression] else TAU_LARGEP[regression]
    poly = sum(c * stat**i for i, c in enumerate(coefs))
    return float(min(max(norm.cdf(poly), 0.0), 1.0))


def _interp_inverse_n(grid: np.ndarray, values: np.ndarray, n: float) -> float:
    """Interpolate linearly in 1/n; clamp outside the tabulated range."""
    x = 1.0 / np.asarray(grid, dtype=float)
    order = np.argsort(x)
    return float(np.interp(1.0 / float(n), x[order], np.asarray(values, dtype=float)[order]))


def ips_tbar_moments(regression: str, lags: int, n_eff: int) -> tuple[float, float]:
    """Mean and variance of the entity Dickey-Fuller t-statistic.

    Tabulated by (deterministic spec, augmentation lag, regression sample
    size); lags beyond the table are clamped to the largest tabulated value.
    """
    table = IPS_MOMENTS[regression]
    lag_keys = sorted(table.keys())
    lag = min(max(int(lags), lag_keys[0]), lag_keys[-1])
    grid, means, variances = table[lag]
    grid = np.asarray(grid, dtype=float)
    mean = _interp_inverse_n(grid, np.asarray(means), n_eff)
    var = _interp_inverse_n(grid, np.asarray(variances), n_eff)
    return mean, var


def llc_adjustment(regression: str, t_tilde: float) -> tuple[float, float]:
    """Mean (mu*) and standard deviation (sigma*) adjustments for the pooled
    bias-corrected t-statistic, interpolated at the average effective length."""
    grid, mus, sigmas = LLC_ADJUSTMENTS[regression]
    grid = np.asarray(grid, dtype=float)
    mu = _interp_inverse_n(grid, np.asarray(mus), t_tilde)
    sigma = _interp_inverse_n(grid, np.asarray(sigmas), t_tilde)
    return mu, sigma


def breitung_adjustment(t_tilde: float) -> tuple[float, float, float]:
    """Per-entity centering, ratio-covariance, and scale constants for the
    transformed pooled statistic, interpolated at the effective length."""
    grid, means, ratios, scales = BREITUNG_ADJUSTMENTS
    grid = np.asarray(grid, dtype=float)
    return (
        _interp_inverse_n(grid, np.asarray(means), t_tilde),
        _interp_inverse_n(grid, np.asarray(ratios), t_tilde),
        _interp_inverse_n(grid, np.asarray(scales), t_tilde),
    )


def hadri_moments(regression: str, n_obs: int) -> tuple[float, float, float]:
    """Finite-sample mean, variance, and skewness of the entity stationarity
    statistic under iid normal errors."""
    grid, means, variances, skews = HADRI_MOMENTS[regression]
    grid = np.asarray(grid, dtype=float)
    mean = _interp_inverse_n(grid, np.asarray(means), n_obs)
    var = _interp_inverse_n(grid, np.asarray(variances), n_obs)
    skew = _interp_inverse_n(grid, np.asarray(skews), n_obs)
    return mean, var, skew
