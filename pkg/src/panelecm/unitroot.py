"""Panel unit-root and stationarity test battery with a summary grid.

Implements the pooled bias-adjusted test of Levin, Lin and Chu (2002), the
unbiased pooled test of Breitung (2000), the group-mean test of Im, Pesaran
and Shin (2003), Fisher combinations of augmented Dickey-Fuller and
Phillips-Perron tests (Maddala and Wu 1999), and the stationarity test of
Hadri (2000), across three deterministic specifications.  The summary grid
counts, per specification, how many applicable tests reject the unit root at
level and at first difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import norm

from ._urtables import (
    breitung_adjustment,
    hadri_moments,
    ips_tbar_moments,
    llc_adjustment,
    mackinnon_pvalue,
)
from .distributions import chi_square_pvalue
from .errors import EstimationError
from .panel import PanelDataset

DET_NONE = "none"
DET_INTERCEPT = "intercept"
DET_TREND = "intercept_and_trend"
DETERMINISTICS = (DET_NONE, DET_INTERCEPT, DET_TREND)

_REGRESSION_KEY = {DET_NONE: "nc", DET_INTERCEPT: "c", DET_TREND: "ct"}

LLC = "llc"
BREITUNG = "breitung"
IPS = "ips"
ADF_FISHER = "adf_fisher"
PP_FISHER = "pp_fisher"
HADRI = "hadri"

# Which unit-root tests enter the rejection counts under each deterministic
# spec (Hadri is reported separately; its null is stationarity).
APPLICABLE_TESTS: Mapping[str, tuple[str, ...]] = {
    DET_NONE: (LLC, ADF_FISHER, PP_FISHER),
    DET_INTERCEPT: (LLC, IPS, ADF_FISHER, PP_FISHER),
    DET_TREND: (LLC, BREITUNG, IPS, ADF_FISHER, PP_FISHER),
}

REJECT = "reject"
FAIL_TO_REJECT = "fail_to_reject"
NOT_APPLICABLE = "not_applicable"

LEVEL = "level"
DIFFERENCE = "first_difference"


@dataclass(frozen=True)
class LagRule:
    """Entity-level augmentation-lag rule: fixed(k) or SIC search."""

    method: str = "ic"  # "ic" | "fixed"
    lags: int = 0
    max_lags: int | None = None  # IC cap; None -> floor(12 * (T/100)**0.25)

    def __post_init__(self):
        if self.method not in ("ic", "fixed"):
            raise ValueError(f"unknown lag rule {self.method!r}")
        if self.lags < 0:
            raise ValueError("fixed lag must be nonnegative")

    def resolve(self, series: np.ndarray, deterministic: str) -> int:
        t = len(series)
        if self.method == "fixed":
            if self.lags > t // 3:
                raise EstimationError(
                    f"fixed lag {self.lags} exceeds T/3 = {t // 3} for T = {t}"
                )
            return self.lags
        return select_adf_lags(series, deterministic, self.max_lags)


@dataclass(frozen=True)
class UnitRootConfig:
    deterministic: str = DET_INTERCEPT
    lag_rule: LagRule = field(default_factory=LagRule)
    significance: float = 0.05
    pp_bandwidth: int | None = None  # None -> Newey-West automatic
    llc_bandwidth: int | None = None  # None -> 3.21 * T**(1/3)

    def __post_init__(self):
        if self.deterministic not in DETERMINISTICS:
            raise ValueError(f"unknown deterministic spec {self.deterministic!r}")
        if not 0.0 < self.significance <= 0.5:
            raise ValueError("significance must lie in (0, 0.5]")


@dataclass(frozen=True)
class UnivariateResult:
    statistic: float
    p_value: float
    lags: int
    n_obs: int


@dataclass(frozen=True)
class PanelTestResult:
    test: str
    deterministic: str
    statistic: float
    p_value: float
    details: Mapping[str, object] = field(default_factory=dict)


def _det_matrix(n: int, deterministic: str) -> np.ndarray | None:
    if deterministic == DET_NONE:
        return None
    if deterministic == DET_INTERCEPT:
        return np.ones((n, 1))
    return np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])


def _ols_tstat_first(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float, np.ndarray]:
    """OLS of y on x; returns (coef, se, t) for the first column plus residuals."""
    n, k = x.shape
    if n <= k:
        raise EstimationError(f"insufficient observations ({n}) for {k} parameters")
    beta, _, rank, _ = np.linalg.lstsq(x, y, rcond=None)
    if rank < k:
        raise EstimationError("collinear unit-root regression design")
    resid = y - x @ beta
    s2 = float(resid @ resid) / (n - k)
    xtx_inv = np.linalg.inv(x.T @ x)
    se = math.sqrt(max(s2 * xtx_inv[0, 0], 0.0))
    if se == 0.0:
        raise EstimationError("degenerate unit-root regression (zero standard error)")
    return float(beta[0]), se, float(beta[0] / se), resid


def _adf_arrays(y: np.ndarray, lags: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Dependent Delta-y, lagged level, and lagged-difference block."""
    y = np.asarray(y, dtype=float)
    dy = np.diff(y)
    t = len(y)
    n_eff = t - 1 - lags
    if n_eff < 3:
        raise EstimationError(f"series too short (T={t}) for {lags} lags")
    dep = dy[lags:]
    ylag = y[lags : t - 1]
    lag_block = (
        np.column_stack([dy[lags - j : t - 1 - j] for j in range(1, lags + 1)])
        if lags
        else np.empty((n_eff, 0))
    )
    return dep, ylag, lag_block


def adf_regression(series: np.ndarray, lags: int, deterministic: str) -> UnivariateResult:
    """Augmented Dickey-Fuller regression with a fixed augmentation lag.

    Regresses Delta-y on the lagged level, ``lags`` lagged differences, and
    the deterministic terms; returns the t-statistic on the lagged level with
    its response-surface unit-root p-value.
    """
    dep, ylag, lag_block = _adf_arrays(series, lags)
    det = _det_matrix(len(dep), deterministic)
    blocks = [ylag.reshape(-1, 1), lag_block]
    if det is not None:
        blocks.append(det)
    x = np.column_stack(blocks)
    _, _, tstat, _ = _ols_tstat_first(x, dep)
    pval = mackinnon_pvalue(tstat, _REGRESSION_KEY[deterministic])
    return UnivariateResult(tstat, pval, lags, len(dep))


def select_adf_lags(
    series: np.ndarray, deterministic: str, max_lags: int | None = None
) -> int:
    """Schwarz-criterion lag choice over 0..max_lags on a common sample.

    Default cap is the Schwert rule floor(12 * (T/100)**0.25), reduced when
    the sample cannot support it; ties break toward fewer lags.
    """
    y = np.asarray(series, dtype=float)
    t = len(y)
    n_det = {DET_NONE: 0, DET_INTERCEPT: 1, DET_TREND: 2}[deterministic]
    if max_lags is None:
        max_lags = int(12.0 * (t / 100.0) ** 0.25)
    feasible = (t - n_det - 4) // 2
    max_lags = max(0, min(max_lags, feasible))
    if max_lags == 0:
        return 0
    dy = np.diff(y)
    dep = dy[max_lags:]
    n = len(dep)
    ylag = y[max_lags : t - 1]
    det = _det_matrix(n, deterministic)
    best_lag, best_sic = 0, math.inf
    for p in range(0, max_lags + 1):
        blocks = [ylag.reshape(-1, 1)]
        if p:
            blocks.append(
                np.column_stack([dy[max_lags - j : t - 1 - j] for j in range(1, p + 1)])
            )
        if det is not None:
            blocks.append(det)
        x = np.column_stack(blocks)
        k = x.shape[1]
        if n <= k + 1:
            break
        beta, _, _, _ = np.linalg.lstsq(x, dep, rcond=None)
        ssr = float(np.sum((dep - x @ beta) ** 2))
        if ssr <= 0.0:
            continue
        sic = math.log(ssr / n) + k * math.log(n) / n
        if sic < best_sic - 1e-12:
            best_sic, best_lag = sic, p
    return best_lag


def adf_test(series: np.ndarray, config: UnitRootConfig) -> UnivariateResult:
    """ADF test with the configured lag rule (refit on the maximal window)."""
    lags = config.lag_rule.resolve(series, config.deterministic)
    return adf_regression(series, lags, config.deterministic)


def bartlett_long_run_variance(u: np.ndarray, bandwidth: int) -> float:
    """Bartlett-kernel long-run variance with divisor n."""
    u = np.asarray(u, dtype=float)
    n = len(u)
    total = float(u @ u) / n
    for j in range(1, min(bandwidth, n - 1) + 1):
        gamma = float(u[j:] @ u[:-j]) / n
        total += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    return total


def newey_west_bandwidth(u: np.ndarray) -> int:
    """Newey-West (1994) automatic bandwidth for the Bartlett kernel.

    Data-dependent: near-white-noise residuals select bandwidth 0 (the
    long-run variance then collapses to the sample variance).
    """
    u = np.asarray(u, dtype=float)
    n = len(u)
    pilot = int(4.0 * (n / 100.0) ** (2.0 / 9.0))
    pilot = min(pilot, n - 1)
    sig = [float(u @ u) / n]
    for j in range(1, pilot + 1):
        sig.append(float(u[j:] @ u[:-j]) / n)
    s0 = sig[0] + 2.0 * sum(sig[1:])
    s1 = 2.0 * sum(j * sig[j] for j in range(1, pilot + 1))
    if s0 <= 0.0:
        return 0
    gamma = 1.1447 * abs(s1 / s0) ** (2.0 / 3.0)
    return min(int(gamma * n ** (1.0 / 3.0)), n - 1)


def pp_regression(
    series: np.ndarray, deterministic: str, bandwidth: int | None = None
) -> UnivariateResult:
    """Phillips-Perron test with Bartlett-kernel serial-correlation correction.

    Uses the Newey-West automatic bandwidth unless an integer override is
    given; the adjusted t-statistic is referenced to the same response
    surface as the ADF statistic.
    """
    dep, ylag, _ = _adf_arrays(series, 0)
    n = len(dep)
    det = _det_matrix(n, deterministic)
    x = ylag.reshape(-1, 1) if det is None else np.column_stack([ylag, det])
    _, se_rho, tstat, resid = _ols_tstat_first(x, dep)
    if bandwidth is None:
        bandwidth = newey_west_bandwidth(resid)
    gamma0 = float(resid @ resid) / n
    lam2 = bartlett_long_run_variance(resid, bandwidth)
    if lam2 <= 0.0 or gamma0 <= 0.0:
        raise EstimationError("nonpositive long-run variance in Phillips-Perron test")
    s = math.sqrt(float(resid @ resid) / (n - x.shape[1]))
    z_t = math.sqrt(gamma0 / lam2) * tstat - n * (lam2 - gamma0) * se_rho / (
        2.0 * math.sqrt(lam2) * s
    )
    pval = mackinnon_pvalue(z_t, _REGRESSION_KEY[deterministic])
    return UnivariateResult(z_t, pval, 0, n)


def _llc_components(y: np.ndarray, lags: int, deterministic: str):
    """Per-entity orthogonalized pieces of the pooled LLC regression.

    Returns normalized residual pairs (e~, v~), the innovation s.d., and the
    effective observation count.
    """
    dep, ylag, lag_block = _adf_arrays(y, lags)
    n = len(dep)
    det = _det_matrix(n, deterministic)
    blocks = [lag_block] if lags else []
    if det is not None:
        blocks.append(det)
    if blocks:
        w = np.column_stack(blocks)
        wtw_inv = np.linalg.pinv(w.T @ w)
        proj = w @ (wtw_inv @ (w.T @ dep))
        ehat = dep - proj
        vhat = ylag - w @ (wtw_inv @ (w.T @ ylag))
    else:
        ehat, vhat = dep.copy(), ylag.copy()
    denom = float(vhat @ vhat)
    if denom <= 0.0:
        raise EstimationError("degenerate level regressor in pooled unit-root test")
    delta = float(vhat @ ehat) / denom
    resid = ehat - delta * vhat
    df = n - lags - 1
    if df <= 0:
        raise EstimationError("insufficient observations for the pooled unit-root test")
    s2 = float(resid @ resid) / df
    if s2 <= 0.0:
        raise EstimationError("zero innovation variance in pooled unit-root test")
    s = math.sqrt(s2)
    return ehat / s, vhat / s, s, n


def llc_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Levin-Lin-Chu pooled test of a common autoregressive root.

    Entity-wise prewhitening and normalization, pooled bias-adjusted
    t-statistic, standard normal reference (lower tail rejects).
    """
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    n_entities, t = panel.shape
    e_all, v_all, ratios, lags_used, n_obs = [], [], [], [], 0
    bandwidth = config.llc_bandwidth
    if bandwidth is None:
        bandwidth = int(3.21 * t ** (1.0 / 3.0))
    for i in range(n_entities):
        y = panel[i]
        p = config.lag_rule.resolve(y, config.deterministic)
        e_i, v_i, s_i, n_i = _llc_components(y, p, config.deterministic)
        dy = np.diff(y)
        if config.deterministic == DET_NONE:
            dyd = dy
        else:
            dyd = dy - dy.mean()
        lrv = bartlett_long_run_variance(dyd, bandwidth)
        if lrv <= 0.0:
            raise EstimationError("nonpositive long-run variance in LLC test")
        ratios.append(math.sqrt(lrv) / s_i)
        e_all.append(e_i)
        v_all.append(v_i)
        lags_used.append(p)
        n_obs += n_i
    e = np.concatenate(e_all)
    v = np.concatenate(v_all)
    t_tilde = n_obs / n_entities
    vv = float(v @ v)
    delta = float(v @ e) / vv
    rss = float(np.sum((e - delta * v) ** 2))
    s2_eps = rss / n_obs
    se_delta = math.sqrt(s2_eps / vv)
    t_delta = delta / se_delta
    s_bar = float(np.mean(ratios))
    mu, sigma = llc_adjustment(_REGRESSION_KEY[config.deterministic], t_tilde)
    centering = n_entities * t_tilde * s_bar * se_delta * mu / s2_eps
    t_star = (t_delta - centering) / sigma
    pval = float(norm.cdf(t_star))
    return PanelTestResult(
        LLC,
        config.deterministic,
        t_star,
        pval,
        details={
            "t_delta": t_delta,
            "delta": delta,
            "t_tilde": t_tilde,
            "s_bar": s_bar,
            "lags": tuple(lags_used),
        },
    )


def _breitung_components(y: np.ndarray, lags: int) -> tuple[np.ndarray, np.ndarray]:
    """Transformed difference/level pair for one entity.

    Differences are prewhitened on their own lags (no deterministic terms),
    normalized, and forward-orthogonalized (Helmert); the level proxy is the
    cumulative sum of the prewhitened differences, detrended through its full
    span.  Under the unit-root null every numerator cross-product then has
    exactly zero expectation, whatever the drift or trend.
    """
    dep, _, lag_block = _adf_arrays(y, lags)
    if lags:
        w = lag_block
        wtw_inv = np.linalg.pinv(w.T @ w)
        e = dep - w @ (wtw_inv @ (w.T @ dep))
    else:
        e = dep.copy()
    n = len(e)
    if n < 4:
        raise EstimationError("series too short for the Breitung transformation")
    # level proxy rebuilt from the prewhitened differences; v[j] pairs with
    # e[j] as the pre-innovation level
    v = np.concatenate([[0.0], np.cumsum(e[:-1])])
    denom = float(v @ v)
    delta = float(v @ e) / denom if denom > 0 else 0.0
    resid = e - delta * v
    df = n - lags - 1
    s2 = float(resid @ resid) / df
    if s2 <= 0.0:
        raise EstimationError("zero innovation variance in Breitung test")
    s = math.sqrt(s2)
    e = e / s
    v = v / s
    # forward (Helmert) orthogonalization drops the last observation
    idx = np.arange(n - 1)
    remaining = (n - 1 - idx).astype(float)
    tail_means = (np.cumsum(e[::-1])[::-1][1:]) / remaining
    e_star = np.sqrt(remaining / (remaining + 1.0)) * (e[:-1] - tail_means)
    # full-span detrending of the level proxy (anchor one step past the last
    # lagged level) keeps E[v* e*] = 0 under the null
    last_level = v[-1] + e[-1]
    v_star = v - np.arange(n, dtype=float) / n * last_level
    return e_star, v_star[: n - 1]


def breitung_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Breitung's pooled statistic (intercept-and-trend spec only).

    The transformed pooled t-ratio needs no bias adjustment in its numerator;
    a tabulated small-panel centering and scale (vanishing as the number of
    entities grows) sharpens the standard normal reference.
    """
    if config.deterministic != DET_TREND:
        raise EstimationError("the Breitung test applies to the intercept-and-trend spec")
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    n_entities = panel.shape[0]
    num = 0.0
    den = 0.0
    n_obs = 0
    lags_used = []
    for y in panel:
        p = config.lag_rule.resolve(y, config.deterministic)
        e_star, v_star = _breitung_components(y, p)
        num += float(v_star @ e_star)
        den += float(v_star @ v_star)
        n_obs += len(e_star) + 1
        lags_used.append(p)
    if den <= 0.0:
        raise EstimationError("degenerate Breitung denominator")
    raw = num / math.sqrt(den)
    t_tilde = n_obs / n_entities
    mean_c, ratio_c, scale_c = breitung_adjustment(t_tilde)
    root_n = math.sqrt(n_entities)
    stat = (raw - root_n * mean_c - ratio_c / root_n) / scale_c
    return PanelTestResult(
        BREITUNG,
        config.deterministic,
        stat,
        float(norm.cdf(stat)),
        details={"raw": raw, "lags": tuple(lags_used), "t_tilde": t_tilde},
    )


def ips_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Im-Pesaran-Shin group-mean test (requires an intercept in the spec).

    Averages entity ADF t-statistics and standardizes with moments tabulated
    by (spec, lag, sample size); standard normal reference.
    """
    if config.deterministic == DET_NONE:
        raise EstimationError("the group-mean test requires intercept or trend terms")
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    n_entities = panel.shape[0]
    reg = _REGRESSION_KEY[config.deterministic]
    tstats, means, variances, lags_used = [], [], [], []
    for y in panel:
        p = config.lag_rule.resolve(y, config.deterministic)
        res = adf_regression(y, p, config.deterministic)
        mean, var = ips_tbar_moments(reg, p, res.n_obs)
        tstats.append(res.statistic)
        means.append(mean)
        variances.append(var)
        lags_used.append(p)
    t_bar = float(np.mean(tstats))
    e_bar = float(np.mean(means))
    v_bar = float(np.mean(variances))
    stat = math.sqrt(n_entities) * (t_bar - e_bar) / math.sqrt(v_bar)
    return PanelTestResult(
        IPS,
        config.deterministic,
        stat,
        float(norm.cdf(stat)),
        details={"t_bar": t_bar, "lags": tuple(lags_used)},
    )


def fisher_combine(p_values: Sequence[float]) -> tuple[float, float]:
    """Fisher combination -2 sum(log p) against chi-square with 2N df."""
    p = np.asarray(list(p_values), dtype=float)
    if p.size == 0:
        raise ValueError("need at least one p-value to combine")
    if np.any(p <= 0.0):
        raise ValueError("Fisher combination undefined for p = 0 (infinite statistic)")
    if np.any(p > 1.0):
        raise ValueError("p-values must lie in (0, 1]")
    stat = float(-2.0 * np.sum(np.log(p)))
    return stat, chi_square_pvalue(stat, 2 * p.size)


def adf_fisher_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Fisher combination of entity ADF p-values."""
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    pvals = [adf_test(y, config).p_value for y in panel]
    stat, pval = fisher_combine(pvals)
    return PanelTestResult(
        ADF_FISHER, config.deterministic, stat, pval, details={"entity_p": tuple(pvals)}
    )


def pp_fisher_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Fisher combination of entity Phillips-Perron p-values."""
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    pvals = [
        pp_regression(y, config.deterministic, config.pp_bandwidth).p_value for y in panel
    ]
    stat, pval = fisher_combine(pvals)
    return PanelTestResult(
        PP_FISHER, config.deterministic, stat, pval, details={"entity_p": tuple(pvals)}
    )


def hadri_test(panel: np.ndarray, config: UnitRootConfig) -> PanelTestResult:
    """Hadri LM test whose null hypothesis is stationarity.

    Per-entity KPSS-type statistics from partial sums of deterministic-trend
    residuals, averaged and standardized; large positive values reject
    stationarity (upper tail).
    """
    if config.deterministic == DET_NONE:
        raise EstimationError("the Hadri test requires intercept or trend terms")
    panel = np.atleast_2d(np.asarray(panel, dtype=float))
    n_entities, t = panel.shape
    det = _det_matrix(t, config.deterministic)
    lm = []
    for y in panel:
        beta, _, _, _ = np.linalg.lstsq(det, y, rcond=None)
        resid = y - det @ beta
        s2 = float(resid @ resid) / t
        if s2 <= 0.0:
            raise EstimationError("zero residual variance in Hadri test")
        partial = np.cumsum(resid)
        lm.append(float(partial @ partial) / (t**2 * s2))
    # standardize with tabulated finite-sample moments of the entity
    # statistic (asymptotically 1/6 and 1/45 with an intercept, 1/15 and
    # 11/6300 with a trend); the upper-tail p-value applies a Cornish-Fisher
    # refinement for the skewness left in the N-entity average
    xi, zeta2, gamma1 = hadri_moments(_REGRESSION_KEY[config.deterministic], t)
    stat = math.sqrt(n_entities) * (float(np.mean(lm)) - xi) / math.sqrt(zeta2)
    gamma = gamma1 / math.sqrt(n_entities)
    z_ref = stat - gamma / 6.0 * (stat * stat - 1.0)
    return PanelTestResult(
        HADRI,
        config.deterministic,
        stat,
        float(norm.sf(z_ref)),
        details={"lm": tuple(lm), "skewness": gamma},
    )


_TEST_FUNCS = {
    LLC: llc_test,
    BREITUNG: breitung_test,
    IPS: ips_test,
    ADF_FISHER: adf_fisher_test,
    PP_FISHER: pp_fisher_test,
}


@dataclass(frozen=True)
class TestCell:
    test: str
    deterministic: str
    order: str
    statistic: float
    p_value: float
    decision: str


@dataclass(frozen=True)
class UnitRootSummary:
    """Summary grid for one variable: tests x deterministic specs x orders."""

    variable: str
    cells: tuple[TestCell, ...]
    significance: float

    def cell(self, test: str, deterministic: str, order: str) -> TestCell:
        for c in self.cells:
            if (c.test, c.deterministic, c.order) == (test, deterministic, order):
                return c
        return TestCell(test, deterministic, order, math.nan, math.nan, NOT_APPLICABLE)

    def counts(self, deterministic: str, order: str) -> tuple[int, int]:
        """(rejections, applicable tests) for one spec and order."""
        applicable = APPLICABLE_TESTS[deterministic]
        rejections = sum(
            1
            for c in self.cells
            if c.deterministic == deterministic
            and c.order == order
            and c.test in applicable
            and c.decision == REJECT
        )
        return rejections, len(applicable)

    def hadri_flag(self) -> bool:
        """True when Hadri rejects stationarity at level and accepts it after
        first differencing (intercept spec)."""
        at_level = self.cell(HADRI, DET_INTERCEPT, LEVEL)
        at_diff = self.cell(HADRI, DET_INTERCEPT, DIFFERENCE)
        return at_level.decision == REJECT and at_diff.decision == FAIL_TO_REJECT


def _decide(p_value: float, significance: float) -> str:
    return REJECT if p_value < significance else FAIL_TO_REJECT


def summary_window(
    ds: PanelDataset | np.ndarray,
    variables: Sequence[str] | None = None,
    config: UnitRootConfig | None = None,
) -> dict[str, UnitRootSummary]:
    """Run the full battery per variable, at level and at first difference.

    Accepts a dataset (with a list of variables) or a bare (N, T) array for a
    single unnamed series panel.
    """
    config = config or UnitRootConfig()
    if isinstance(ds, PanelDataset):
        if variables is None:
            variables = list(ds.variables)
        panels = {}
        for var in variables:
            arr = ds.values[var]
            if np.isnan(arr).any():
                raise EstimationError(f"variable {var!r} has missing cells; interpolate first")
            panels[var] = arr
    else:
        panels = {"series": np.atleast_2d(np.asarray(ds, dtype=float))}

    out: dict[str, UnitRootSummary] = {}
    for var, panel in panels.items():
        cells: list[TestCell] = []
        for order in (LEVEL, DIFFERENCE):
            data = panel if order == LEVEL else np.diff(panel, axis=1)
            for det in DETERMINISTICS:
                det_config = replace(config, deterministic=det)
                for test in APPLICABLE_TESTS[det]:
                    result = _TEST_FUNCS[test](data, det_config)
                    cells.append(
                        TestCell(
                            test,
                            det,
                            order,
                            result.statistic,
                            result.p_value,
                            _decide(result.p_value, config.significance),
                        )
                    )
                if det in (DET_INTERCEPT, DET_TREND):
                    hadri = hadri_test(data, det_config)
                    cells.append(
                        TestCell(
                            HADRI,
                            det,
                            order,
                            hadri.statistic,
                            hadri.p_value,
                            _decide(hadri.p_value, config.significance),
                        )
                    )
        out[var] = UnitRootSummary(var, tuple(cells), config.significance)
    return out
