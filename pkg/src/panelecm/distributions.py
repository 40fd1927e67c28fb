"""Reference distributions: quantiles and p-values used by every test.

Thin wrappers over scipy.stats with argument validation; all p-value
functions return values in [0, 1].
"""

from __future__ import annotations

from scipy import stats


def _check_prob(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie in (0, 1), got {p}")
    return p


def _check_df(df: int, name: str = "df") -> int:
    df = int(df)
    if df < 1:
        raise ValueError(f"{name} must be a positive integer, got {df}")
    return df


def chi_square_quantile(p: float, df: int) -> float:
    """Inverse chi-square CDF, accurate to 1e-6 relative for df <= 1000."""
    return float(stats.chi2.ppf(_check_prob(p), _check_df(df)))


def chi_square_pvalue(stat: float, df: int) -> float:
    """Upper-tail chi-square probability of ``stat``."""
    if stat < 0:
        raise ValueError(f"chi-square statistic must be nonnegative, got {stat}")
    return float(stats.chi2.sf(stat, _check_df(df)))


def t_pvalue(t: float, df: int, two_sided: bool = True) -> float:
    """t-distribution p-value (two-sided by default)."""
    df = _check_df(df)
    if two_sided:
        return float(2.0 * stats.t.sf(abs(t), df))
    return float(stats.t.sf(t, df))


def f_pvalue(f: float, df1: int, df2: int) -> float:
    """Upper-tail F probability."""
    if f < 0:
        raise ValueError(f"F statistic must be nonnegative, got {f}")
    return float(stats.f.sf(f, _check_df(df1, "df1"), _check_df(df2, "df2")))


def normal_pvalue(z: float, two_sided: bool = True) -> float:
    """Standard normal p-value (two-sided by default)."""
    if two_sided:
        return float(2.0 * stats.norm.sf(abs(z)))
    return float(stats.norm.sf(z))


def normal_cdf(z: float) -> float:
    return float(stats.norm.cdf(z))


def normal_quantile(p: float) -> float:
    return float(stats.norm.ppf(_check_prob(p)))
