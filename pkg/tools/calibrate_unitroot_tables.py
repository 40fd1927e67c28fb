#!/usr/bin/env python3
"""Regenerate the simulated moment tables in src/panelecm/_urmoments.py.

Two table families are produced, mirroring how the published tabulations for
these statistics were constructed:

* group-mean moments: mean and variance of the entity Dickey-Fuller
  t-statistic under a driftless random walk null, per (deterministic spec,
  augmentation lag, regression sample size) -- the standardization constants
  of the Im-Pesaran-Shin W statistic;
* pooled-test adjustments: mean (mu*) and standard deviation (sigma*)
  corrections for the bias of the pooled coefficient t-statistic of
  Levin-Lin-Chu, calibrated against this package's exact normalization and
  kernel conventions so that the adjusted statistic is standard normal under
  the null.

Usage:
    python tools/calibrate_unitroot_tables.py [--quick] [--out PATH]

The full run takes tens of minutes; --quick uses small replication counts
for smoke-testing the machinery only.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

import numpy as np

SEED = 20240117
N_GRID = (10, 13, 15, 18, 20, 25, 30, 40, 50, 70, 100, 150, 250, 500)
LAGS = tuple(range(0, 9))
REGRESSIONS = ("nc", "c", "ct")
IPS_REGRESSIONS = ("c", "ct")


def det_matrix(n: int, regression: str) -> np.ndarray | None:
    if regression == "nc":
        return None
    if regression == "c":
        return np.ones((n, 1))
    return np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])


def batched_adf_tstats(y: np.ndarray, lags: int, regression: str) -> np.ndarray:
    """ADF t-statistics on the lagged level for a (B, T) batch of series."""
    b, t = y.shape
    dy = np.diff(y, axis=1)
    dep = dy[:, lags:]
    n = dep.shape[1]
    cols = [y[:, lags : t - 1]]
    for j in range(1, lags + 1):
        cols.append(dy[:, lags - j : t - 1 - j])
    x = np.stack(cols, axis=2)  # (B, n, 1 + lags)
    det = det_matrix(n, regression)
    if det is not None:
        x = np.concatenate([x, np.broadcast_to(det, (b, n, det.shape[1]))], axis=2)
    k = x.shape[2]
    g = np.einsum("bni,bnj->bij", x, x)
    c = np.einsum("bni,bn->bi", x, dep)
    beta = np.linalg.solve(g, c[..., None])[..., 0]
    resid = dep - np.einsum("bni,bi->bn", x, beta)
    s2 = np.einsum("bn,bn->b", resid, resid) / (n - k)
    g_inv = np.linalg.inv(g)
    se0 = np.sqrt(s2 * g_inv[:, 0, 0])
    return beta[:, 0] / se0


def ips_cell(regression: str, lags: int, n_eff: int, reps: int, chunk: int = 20000):
    """Mean/variance of the ADF t-statistic at one grid cell."""
    t_len = n_eff + lags + 1
    stats = []
    done = 0
    idx = 0
    while done < reps:
        m = min(chunk, reps - done)
        rng = np.random.default_rng([SEED, 1, REGRESSIONS.index(regression), lags, n_eff, idx])
        eps = rng.standard_normal((m, t_len))
        y = np.cumsum(eps, axis=1)
        stats.append(batched_adf_tstats(y, lags, regression))
        done += m
        idx += 1
    allstats = np.concatenate(stats)
    return float(allstats.mean()), float(allstats.var(ddof=1))


def detrend_matrix(n: int, regression: str) -> np.ndarray | None:
    """Projection-residual maker M so that resid = series @ M.T (same design all rows)."""
    d = det_matrix(n, regression)
    if d is None:
        return None
    p = d @ np.linalg.inv(d.T @ d) @ d.T
    return np.eye(n) - p


def bartlett_lrv_batch(u: np.ndarray, bandwidth: int) -> np.ndarray:
    n = u.shape[1]
    total = np.einsum("bn,bn->b", u, u) / n
    for j in range(1, min(bandwidth, n - 1) + 1):
        gamma = np.einsum("bn,bn->b", u[:, j:], u[:, :-j]) / n
        total = total + 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    return total


def llc_cell(regression: str, t_tilde: int, panels: int, n_entities: int = 64):
    """Calibrate (mu*, sigma*) at one effective length.

    Simulates full pooled statistics with lag 0 on driftless random walks and
    solves t_delta = c0 * mu + sigma * Z for the adjustment constants; the
    computational conventions (normalization df, sigma_eps divisor, kernel
    bandwidth) replicate panelecm.unitroot.llc_test exactly.
    """
    t_len = t_tilde + 1
    bandwidth = int(3.21 * t_len ** (1.0 / 3.0))
    m_resid = detrend_matrix(t_tilde, regression)
    t_deltas = np.empty(panels)
    c0s = np.empty(panels)
    chunk = max(1, 200000 // (n_entities * t_len))
    done = 0
    idx = 0
    while done < panels:
        m = min(chunk, panels - done)
        rng = np.random.default_rng([SEED, 2, REGRESSIONS.index(regression), t_tilde, idx])
        eps = rng.standard_normal((m * n_entities, t_len))
        y = np.cumsum(eps, axis=1)
        dy = np.diff(y, axis=1)          # (B, t_tilde)
        ylag = y[:, : t_len - 1]         # (B, t_tilde)
        if m_resid is not None:
            e = dy @ m_resid.T
            v = ylag @ m_resid.T
        else:
            e, v = dy, ylag
        a_i = np.einsum("bn,bn->b", v, e)
        b_i = np.einsum("bn,bn->b", v, v)
        ee_i = np.einsum("bn,bn->b", e, e)
        rss_i = ee_i - a_i**2 / b_i
        s2_i = rss_i / (t_tilde - 1)     # df = n - lags - 1 with lags = 0
        # long-run to short-run ratio on (demeaned) differences
        if regression == "nc":
            dyd = dy
        else:
            dyd = dy - dy.mean(axis=1, keepdims=True)
        lrv = bartlett_lrv_batch(dyd, bandwidth)
        ratio = np.sqrt(lrv / s2_i)
        # pool within panels
        shape = (m, n_entities)
        u_p = (a_i / s2_i).reshape(shape).sum(axis=1)
        v_p = (b_i / s2_i).reshape(shape).sum(axis=1)
        ee_p = (ee_i / s2_i).reshape(shape).sum(axis=1)
        s_bar = ratio.reshape(shape).mean(axis=1)
        delta = u_p / v_p
        rss = ee_p - delta * u_p
        n_total = n_entities * t_tilde
        s2_eps = rss / n_total
        se_delta = np.sqrt(s2_eps / v_p)
        t_deltas[done : done + m] = delta / se_delta
        c0s[done : done + m] = (
            n_entities * t_tilde * s_bar * se_delta / s2_eps
        )
        done += m
        idx += 1
    mu = float(t_deltas.mean() / c0s.mean())
    sigma = float(np.std(t_deltas - c0s * mu, ddof=1))
    return mu, sigma


def _breitung_raw_batch(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Numerator/denominator of the transformed statistic for (B, T) series,
    lag 0; mirrors panelecm.unitroot._breitung_components exactly."""
    e = np.diff(y, axis=1)
    b, n = e.shape
    v = np.concatenate([np.zeros((b, 1)), np.cumsum(e[:, :-1], axis=1)], axis=1)
    a_i = np.einsum("bn,bn->b", v, e)
    d_i = np.einsum("bn,bn->b", v, v)
    ee = np.einsum("bn,bn->b", e, e)
    s2 = (ee - a_i**2 / d_i) / (n - 1)
    s = np.sqrt(s2)[:, None]
    e = e / s
    v = v / s
    idx = np.arange(n - 1)
    remaining = (n - 1 - idx).astype(float)
    tail_means = np.cumsum(e[:, ::-1], axis=1)[:, ::-1][:, 1:] / remaining
    e_star = np.sqrt(remaining / (remaining + 1.0)) * (e[:, :-1] - tail_means)
    last_level = v[:, -1] + e[:, -1]
    v_star = v - np.arange(n) / n * last_level[:, None]
    v_star = v_star[:, : n - 1]
    num = np.einsum("bn,bn->b", v_star, e_star)
    den = np.einsum("bn,bn->b", v_star, v_star)
    return num, den


def breitung_cell(t_tilde: int, panels: int, n_small: int = 15, n_large: int = 60):
    """Centering and scale for the transformed pooled statistic.

    Simulates pooled statistics at two panel widths, fits the mean model
    E[B]_N = sqrt(N) a + b / sqrt(N), and reports (a, b, s) where s is the
    pooled standard deviation at the small width; the test then uses
    B* = (B - sqrt(N) a - b / sqrt(N)) / s.
    """

    def pooled(n_entities: int, m_panels: int, tag: int):
        t_len = t_tilde + 1
        stats = np.empty(m_panels)
        chunk = max(1, 400000 // (n_entities * t_len))
        done = 0
        idx = 0
        while done < m_panels:
            m = min(chunk, m_panels - done)
            rng = np.random.default_rng([SEED, 3, t_tilde, tag, idx])
            y = np.cumsum(rng.standard_normal((m * n_entities, t_len)), axis=1)
            num, den = _breitung_raw_batch(y)
            num = num.reshape(m, n_entities).sum(axis=1)
            den = den.reshape(m, n_entities).sum(axis=1)
            stats[done : done + m] = num / np.sqrt(den)
            done += m
            idx += 1
        return stats

    b_small = pooled(n_small, panels, 1)
    b_large = pooled(n_large, max(panels // 2, 200), 2)
    m_s, m_l = b_small.mean(), b_large.mean()
    rs, rl = math.sqrt(n_small), math.sqrt(n_large)
    a = (rl * m_l - rs * m_s) / (n_large - n_small)
    b = rs * m_s - n_small * a
    scale = float(b_small.std(ddof=1))
    return float(a), float(b), scale


def hadri_cell(regression: str, t_len: int, reps: int, chunk: int = 50000):
    """Finite-sample mean/variance/skewness of the entity stationarity
    statistic under iid normal errors."""
    d = det_matrix(t_len, regression)
    proj = np.eye(t_len) - d @ np.linalg.inv(d.T @ d) @ d.T
    done = 0
    idx = 0
    acc = []
    while done < reps:
        m = min(chunk, reps - done)
        rng = np.random.default_rng([SEED, 4, REGRESSIONS.index(regression), t_len, idx])
        e = rng.standard_normal((m, t_len)) @ proj.T
        s2 = np.einsum("bt,bt->b", e, e) / t_len
        partial = np.cumsum(e, axis=1)
        lm = np.einsum("bt,bt->b", partial, partial) / (t_len**2 * s2)
        acc.append(lm)
        done += m
        idx += 1
    lm = np.concatenate(acc)
    centered = lm - lm.mean()
    skew = float(np.mean(centered**3) / lm.std() ** 3)
    return float(lm.mean()), float(lm.var(ddof=1)), skew


def feasible(n_eff: int, lags: int, regression: str) -> bool:
    k = 1 + lags + {"nc": 0, "c": 1, "ct": 2}[regression]
    return n_eff >= k + 6


def render(ips, llc, breitung, hadri, reps_ips, panels_llc) -> str:
    lines = [
        '"""Simulated moment tables for the panel unit-root statistics.',
        "",
        "Generated by tools/calibrate_unitroot_tables.py (do not edit by hand):",
        f"seed {SEED}, {reps_ips} replications per group-mean cell,",
        f"{panels_llc} panels of 64 entities per pooled-adjustment cell.",
        "Regression keys: nc = none, c = intercept, ct = intercept and trend.",
        '"""',
        "",
        "# regression -> lag -> (n_eff grid, mean of t, variance of t)",
        "IPS_MOMENTS = {",
    ]
    for reg in IPS_REGRESSIONS:
        lines.append(f'    "{reg}": {{')
        for lag in LAGS:
            grid, means, variances = ips[reg][lag]
            lines.append(f"        {lag}: (")
            lines.append(f"            {tuple(grid)},")
            lines.append("            (" + ", ".join(f"{m:.5f}" for m in means) + "),")
            lines.append("            (" + ", ".join(f"{v:.5f}" for v in variances) + "),")
            lines.append("        ),")
        lines.append("    },")
    lines.append("}")
    lines.append("")
    lines.append("# regression -> (t_tilde grid, mu*, sigma*)")
    lines.append("LLC_ADJUSTMENTS = {")
    for reg in REGRESSIONS:
        grid, mus, sigmas = llc[reg]
        lines.append(f'    "{reg}": (')
        lines.append(f"        {tuple(grid)},")
        lines.append("        (" + ", ".join(f"{m:.5f}" for m in mus) + "),")
        lines.append("        (" + ", ".join(f"{s:.5f}" for s in sigmas) + "),")
        lines.append("    ),")
    lines.append("}")
    lines.append("")
    grid, means, ratios, scales = breitung
    lines.append("# (t_tilde grid, per-entity mean, ratio covariance, scale)")
    lines.append("BREITUNG_ADJUSTMENTS = (")
    lines.append(f"    {tuple(grid)},")
    lines.append("    (" + ", ".join(f"{m:.5f}" for m in means) + "),")
    lines.append("    (" + ", ".join(f"{r:.5f}" for r in ratios) + "),")
    lines.append("    (" + ", ".join(f"{s:.5f}" for s in scales) + "),")
    lines.append(")")
    lines.append("")
    lines.append("# regression -> (n_obs grid, mean of LM, variance of LM, skewness of LM)")
    lines.append("HADRI_MOMENTS = {")
    for reg in IPS_REGRESSIONS:
        grid, means, variances, skews = hadri[reg]
        lines.append(f'    "{reg}": (')
        lines.append(f"        {tuple(grid)},")
        lines.append("        (" + ", ".join(f"{m:.6f}" for m in means) + "),")
        lines.append("        (" + ", ".join(f"{v:.7f}" for v in variances) + "),")
        lines.append("        (" + ", ".join(f"{s:.4f}" for s in skews) + "),")
        lines.append("    ),")
    lines.append("}")
    lines.append("")
    return "\n".join(lines)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="tiny replication counts (smoke test)")
    parser.add_argument("--out", default="src/panelecm/_urmoments.py")
    args = parser.parse_args()

    reps_ips = 2000 if args.quick else 80000
    panels_llc = 200 if args.quick else 4000

    t0 = time.time()
    ips: dict = {}
    for reg in IPS_REGRESSIONS:
        ips[reg] = {}
        for lag in LAGS:
            grid = [n for n in N_GRID if feasible(n, lag, reg)]
            means, variances = [], []
            for n_eff in grid:
                m, v = ips_cell(reg, lag, n_eff, reps_ips)
                means.append(m)
                variances.append(v)
            ips[reg][lag] = (grid, means, variances)
            print(
                f"[{time.time() - t0:7.1f}s] group-mean {reg} lag {lag}: "
                f"{len(grid)} cells, E at n={grid[-1]}: {means[-1]:.4f}",
                flush=True,
            )

    llc: dict = {}
    for reg in REGRESSIONS:
        grid = list(N_GRID)
        mus, sigmas = [], []
        for t_tilde in grid:
            mu, sigma = llc_cell(reg, t_tilde, panels_llc)
            mus.append(mu)
            sigmas.append(sigma)
        llc[reg] = (grid, mus, sigmas)
        print(
            f"[{time.time() - t0:7.1f}s] pooled-adjustment {reg}: "
            f"mu at 25: {mus[grid.index(25)]:.4f}, sigma at 25: {sigmas[grid.index(25)]:.4f}",
            flush=True,
        )

    reps_breitung = 2000 if args.quick else 60000
    b_grid = [n for n in N_GRID if n >= 10]
    b_means, b_ratios, b_scales = [], [], []
    for t_tilde in b_grid:
        m, r, s = breitung_cell(t_tilde, reps_breitung)
        b_means.append(m)
        b_ratios.append(r)
        b_scales.append(s)
    breitung = (b_grid, b_means, b_ratios, b_scales)
    print(f"[{time.time() - t0:7.1f}s] breitung constants done", flush=True)

    reps_hadri = 5000 if args.quick else 300000
    hadri: dict = {}
    h_grid = [n for n in N_GRID]
    for reg in IPS_REGRESSIONS:
        means, variances, skews = [], [], []
        for t_len in h_grid:
            m, v, s = hadri_cell(reg, t_len, reps_hadri)
            means.append(m)
            variances.append(v)
            skews.append(s)
        hadri[reg] = (h_grid, means, variances, skews)
        print(f"[{time.time() - t0:7.1f}s] hadri moments {reg} done", flush=True)

    out = Path(args.out)
    out.write_text(render(ips, llc, breitung, hadri, reps_ips, panels_llc))
    print(f"wrote {out} in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
