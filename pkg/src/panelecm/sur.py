"""Cross-section SUR weighting: one-step feasible GLS for balanced panels.

The contemporaneous N x N residual covariance is estimated from a first-stage
pooled OLS fit and used once to whiten the stacked system ("one-step"
weighting; no iteration to convergence).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EstimationError, SigmaNotPositiveDefinite
from .panel import SampleInfo
from .regression import (
    CROSS_SECTION_SUR,
    FitResult,
    WeightMatrix,
    gls_fit,
    ols_fit,
)

SHRINKAGE_LADDER = (0.01, 0.05, 0.1)


@dataclass(frozen=True)
class CrossSectionCovariance:
    """Contemporaneous residual covariance across entities."""

    entities: tuple[str, ...]
    sigma: np.ndarray  # (N, N), symmetric positive definite

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=float)
        n = len(self.entities)
        if sigma.shape != (n, n):
            raise ValueError(f"sigma shape {sigma.shape} does not match {n} entities")
        if not np.allclose(sigma, sigma.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(sigma).max())):
            raise ValueError("sigma must be symmetric")

    def is_positive_definite(self) -> bool:
        # relative eigenvalue floor: exact rank deficiency must not slip
        # through floating-point fuzz in the Cholesky pivots
        eig = np.linalg.eigvalsh(self.sigma)
        return bool(eig[0] > 1e-10 * max(eig[-1], 0.0) and eig[0] > 0.0)

    def to_delimited(self, delimiter: str = ",") -> str:
        out = io.StringIO()
        writer = csv.writer(out, delimiter=delimiter)
        writer.writerow(["entity", *self.entities])
        for name, row in zip(self.entities, self.sigma):
            writer.writerow([name, *[repr(float(v)) for v in row]])
        return out.getvalue()


def estimate_sigma(
    residuals: np.ndarray,
    entities: Sequence[str],
    shrink: bool = False,
) -> CrossSectionCovariance:
    """Estimate sigma_ij = (1/T) sum_t e_it e_jt from aligned residual rows.

    ``residuals`` is (N, T) with one row per entity on identical periods.
    When the result is not positive definite (possible whenever T < N) the
    default is a hard error; ``shrink=True`` instead blends toward the
    diagonal, sigma <- (1 - lam) * sigma + lam * diag(sigma), taking the
    smallest lam in {0.01, 0.05, 0.1} that restores positive definiteness.
    """
    e = np.asarray(residuals, dtype=float)
    if e.ndim != 2:
        raise EstimationError("residuals must be an (entities, periods) matrix")
    n, t = e.shape
    if n != len(entities):
        raise EstimationError(f"{n} residual rows but {len(entities)} entities")
    if t < 2:
        raise EstimationError("need at least 2 aligned periods to estimate sigma")
    sigma = (e @ e.T) / t
    sigma = 0.5 * (sigma + sigma.T)
    if np.any(np.diag(sigma) <= 0.0):
        raise SigmaNotPositiveDefinite(
            "an entity has zero residual variance; sigma is singular"
        )
    cov = CrossSectionCovariance(tuple(entities), sigma)
    if cov.is_positive_definite():
        return cov
    if not shrink:
        raise SigmaNotPositiveDefinite(
            "estimated cross-section covariance is not positive definite "
            f"(N={n}, T={t}); rerun with shrink=True to blend toward the diagonal"
        )
    diag = np.diag(np.diag(sigma))
    for lam in SHRINKAGE_LADDER:
        candidate = CrossSectionCovariance(
            tuple(entities), (1.0 - lam) * sigma + lam * diag
        )
        if candidate.is_positive_definite():
            return candidate
    raise SigmaNotPositiveDefinite(
        "covariance still not positive definite after diagonal shrinkage"
    )


def sur_one_step_fit(
    x: np.ndarray,
    y: np.ndarray,
    sample: SampleInfo,
    first_stage: FitResult | None = None,
    has_intercept: bool = True,
    names: Sequence[str] | None = None,
    shrink: bool = False,
) -> FitResult:
    """One-step Cross-Section SUR EGLS fit of the stacked balanced system.

    The first stage is pooled OLS on the identical specification (or a
    caller-supplied fit covering the full balanced sample); its residuals
    yield sigma, the system is whitened once by the inverse Cholesky factor
    per period, and a single GLS pass produces the result.  Exactly one
    weighting iteration is performed, whatever the input.
    """
    if first_stage is None:
        first_stage = ols_fit(
            x, y, has_intercept=has_intercept, names=names, sample=sample
        )
    if first_stage.n_observations != sample.n_obs:
        raise EstimationError(
            f"first-stage residuals cover {first_stage.n_observations} rows, "
            f"sample expects {sample.n_obs}"
        )
    resid = sample.reshape(first_stage.residuals)
    sigma = estimate_sigma(resid, sample.entities, shrink=shrink)
    weight = WeightMatrix(kind=CROSS_SECTION_SUR, sigma=sigma)
    return gls_fit(
        x, y, weight, has_intercept=has_intercept, names=names, sample=sample
    )
