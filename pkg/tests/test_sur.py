"""Cross-section SUR weighting: sigma estimation and one-step EGLS."""

import numpy as np
import pytest

from panelecm import (
    SampleInfo,
    SigmaNotPositiveDefinite,
    estimate_sigma,
    ols_fit,
    sur_one_step_fit,
)
from panelecm.sur import CrossSectionCovariance


def sample_info(n, t):
    return SampleInfo(tuple(f"E{i}" for i in range(n)), tuple(range(2000, 2000 + t)))


class TestEstimateSigma:
    def test_duplicated_series_perfect_correlation(self):
        e = np.vstack([np.array([1.0, -2.0, 0.5, 1.5])] * 2)
        with pytest.raises(SigmaNotPositiveDefinite):
            estimate_sigma(e, ["a", "b"])
        # identical rows give identical variances and covariance
        sigma = (e @ e.T) / 4
        assert sigma[0, 0] == sigma[0, 1] == sigma[1, 1]

    def test_two_by_two_hand_computation(self):
        e = np.array([[1.0, -1.0], [2.0, -2.0]])
        with pytest.raises(SigmaNotPositiveDefinite):
            estimate_sigma(e, ["a", "b"])
        sigma = (e @ e.T) / 2
        assert np.allclose(sigma, [[1.0, 2.0], [2.0, 4.0]])

    def test_independent_panels_off_diagonal_near_zero(self):
        rng = np.random.default_rng(0)
        acc = []
        for _ in range(1000):
            e = rng.standard_normal((15, 18))
            sigma = estimate_sigma(e, [f"E{i}" for i in range(15)]).sigma
            off = sigma[np.triu_indices(15, 1)]
            acc.append(off.mean())
        assert abs(np.mean(acc)) < 0.05

    def test_shrinkage_restores_definiteness(self):
        rng = np.random.default_rng(1)
        e = rng.standard_normal((6, 4))  # T < N forces rank deficiency
        with pytest.raises(SigmaNotPositiveDefinite, match="shrink"):
            estimate_sigma(e, [f"E{i}" for i in range(6)])
        cov = estimate_sigma(e, [f"E{i}" for i in range(6)], shrink=True)
        assert cov.is_positive_definite()

    def test_entity_reordering_permutes_sigma(self):
        rng = np.random.default_rng(2)
        e = rng.standard_normal((4, 9))
        names = ["a", "b", "c", "d"]
        sigma = estimate_sigma(e, names).sigma
        perm = [2, 0, 3, 1]
        sigma_p = estimate_sigma(e[perm], [names[i] for i in perm]).sigma
        assert np.allclose(sigma_p, sigma[np.ix_(perm, perm)])

    def test_scaling_residuals_scales_sigma_quadratically(self):
        rng = np.random.default_rng(3)
        e = rng.standard_normal((3, 10))
        s1 = estimate_sigma(e, ["a", "b", "c"]).sigma
        s2 = estimate_sigma(3.0 * e, ["a", "b", "c"]).sigma
        assert np.allclose(s2, 9.0 * s1, rtol=1e-12)

    def test_divisor_is_t(self):
        e = np.array([[2.0, 2.0, 2.0, 2.0], [1.0, -1.0, 1.0, -1.0]])
        cov = estimate_sigma(e, ["a", "b"])
        assert cov.sigma[0, 0] == pytest.approx(4.0)  # sum 16 / T=4

    def test_export_layout(self):
        cov = CrossSectionCovariance(("a", "b"), np.array([[1.0, 0.1], [0.1, 2.0]]))
        text = cov.to_delimited()
        lines = text.strip().splitlines()
        assert lines[0] == "entity,a,b"
        assert lines[1].startswith("a,1.0")


def make_sur_system(rng, n, t, k, sigma):
    """Stacked panel regression with contemporaneously correlated errors."""
    chol = np.linalg.cholesky(sigma)
    x = rng.standard_normal((n * t, k))
    beta = rng.standard_normal(k + 1)
    eps = np.empty((n, t))
    for s in range(t):
        eps[:, s] = chol @ rng.standard_normal(n)
    y = beta[0] + x @ beta[1:] + eps.reshape(-1)
    return x, y, beta


class TestSurOneStep:
    def test_near_identity_sigma_reproduces_ols(self):
        rng = np.random.default_rng(4)
        sample = sample_info(4, 30)
        x, y, _ = make_sur_system(rng, 4, 30, 2, np.eye(4))
        first = ols_fit(x, y, sample=sample)
        fit = sur_one_step_fit(x, y, sample)
        # weighting estimated from data, so agreement is statistical, not exact
        assert np.allclose(fit.coefficients, first.coefficients, atol=0.15)

    def test_matches_dense_omega_oracle(self):
        rng = np.random.default_rng(5)
        n, t, k = 2, 4, 1
        sample = sample_info(n, t)
        sigma_true = np.array([[1.5, 0.6], [0.6, 1.0]])
        x, y, _ = make_sur_system(rng, n, t, k, sigma_true)
        first = ols_fit(x, y, sample=sample)
        fit = sur_one_step_fit(x, y, sample, first_stage=first)
        resid = sample.reshape(first.residuals)
        sigma_hat = (resid @ resid.T) / t
        omega = np.kron(sigma_hat, np.eye(t))
        xf = np.column_stack([np.ones(n * t), x])
        oi = np.linalg.inv(omega)
        beta = np.linalg.solve(xf.T @ oi @ xf, xf.T @ oi @ y)
        assert np.allclose(fit.coefficients, beta, rtol=1e-8)

    def test_oracle_equivalence_over_100_random_instances(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            n = int(rng.integers(2, 5))
            t = int(rng.integers(n + 2, 9))
            k = int(rng.integers(1, 4))
            a = rng.standard_normal((n, n)) / np.sqrt(n)
            sigma_true = a @ a.T + np.eye(n)
            sample = sample_info(n, t)
            x, y, _ = make_sur_system(rng, n, t, k, sigma_true)
            first = ols_fit(x, y, sample=sample)
            resid = sample.reshape(first.residuals)
            sigma_hat = (resid @ resid.T) / t
            try:
                np.linalg.cholesky(sigma_hat)
            except np.linalg.LinAlgError:
                continue  # degenerate draw; the error path is tested elsewhere
            fit = sur_one_step_fit(x, y, sample, first_stage=first)
            omega_inv = np.linalg.inv(np.kron(sigma_hat, np.eye(t)))
            xf = np.column_stack([np.ones(n * t), x])
            beta = np.linalg.solve(xf.T @ omega_inv @ xf, xf.T @ omega_inv @ y)
            assert np.allclose(fit.coefficients, beta, rtol=1e-8, atol=1e-10)

    def test_coefficients_invariant_to_residual_scaling(self):
        rng = np.random.default_rng(7)
        sample = sample_info(3, 12)
        x, y, _ = make_sur_system(rng, 3, 12, 2, np.eye(3))
        fit1 = sur_one_step_fit(x, y, sample)
        # scaling y scales first-stage residuals and sigma by c, c^2; the
        # weighting ratio is unchanged so coefficients scale exactly by c
        fit2 = sur_one_step_fit(x, 10.0 * y, sample)
        assert np.allclose(fit2.coefficients, 10.0 * fit1.coefficients, rtol=1e-10)

    def test_whitening_moves_residual_covariance_toward_identity(self):
        rng = np.random.default_rng(8)
        n, t = 5, 60
        sample = sample_info(n, t)
        rho = 0.7
        sigma_true = rho * np.ones((n, n)) + (1 - rho) * np.eye(n)
        x, y, _ = make_sur_system(rng, n, t, 2, sigma_true)
        first = ols_fit(x, y, sample=sample)
        fit = sur_one_step_fit(x, y, sample, first_stage=first)

        def corr_distance(resid):
            sig = (resid @ resid.T) / resid.shape[1]
            d = np.diag(1.0 / np.sqrt(np.diag(sig)))
            return np.linalg.norm(d @ sig @ d - np.eye(n))

        before = corr_distance(sample.reshape(first.residuals))
        after = corr_distance(sample.reshape(fit.residuals))
        assert after < before

    def test_one_step_semantics_deterministic(self):
        rng = np.random.default_rng(9)
        sample = sample_info(3, 10)
        x, y, _ = make_sur_system(rng, 3, 10, 1, np.eye(3))
        fit1 = sur_one_step_fit(x, y, sample)
        fit2 = sur_one_step_fit(x, y, sample)
        assert np.array_equal(fit1.coefficients, fit2.coefficients)

    def test_summary_block_is_whitened(self):
        rng = np.random.default_rng(10)
        sample = sample_info(4, 20)
        sigma_true = np.diag([1.0, 4.0, 9.0, 0.25])
        x, y, _ = make_sur_system(rng, 4, 20, 2, sigma_true)
        fit = sur_one_step_fit(x, y, sample)
        # whitened innovations have roughly unit scale regardless of sigma
        assert 0.7 < fit.se_of_regression < 1.4

    def test_entity_permutation_consistency(self):
        rng = np.random.default_rng(11)
        n, t = 4, 12
        sample = sample_info(n, t)
        a = rng.standard_normal((n, n)) / 2
        sigma_true = a @ a.T + np.eye(n)
        x, y, _ = make_sur_system(rng, n, t, 2, sigma_true)
        fit = sur_one_step_fit(x, y, sample)
        perm = [2, 0, 3, 1]
        rows = np.concatenate([np.arange(i * t, (i + 1) * t) for i in perm])
        sample_p = SampleInfo(tuple(sample.entities[i] for i in perm), sample.periods)
        fit_p = sur_one_step_fit(x[rows], y[rows], sample_p)
        assert np.allclose(fit_p.coefficients, fit.coefficients, atol=1e-10)
