"""Least-squares engine: OLS, GLS, Durbin-Watson, information criterion."""

import math

import numpy as np
import pytest

from panelecm import (
    EstimationError,
    RankDeficientError,
    SampleInfo,
    WeightMatrix,
    durbin_watson,
    gls_fit,
    ols_fit,
    schwarz_criterion,
)
from panelecm.regression import CROSS_SECTION_SUR, IDENTITY, schwarz_from
from panelecm.sur import CrossSectionCovariance


def random_instance(rng, n, k):
    x = rng.standard_normal((n, k))
    beta = rng.standard_normal(k + 1)
    y = beta[0] + x @ beta[1:] + 0.5 * rng.standard_normal(n)
    return x, y


class TestOls:
    def test_perfect_fit(self):
        fit = ols_fit(np.array([[1.0], [2.0], [3.0]]), [1.0, 2.0, 3.0])
        assert fit.coefficient("X1") == pytest.approx(1.0, abs=1e-10)
        assert fit.coefficient("C") == pytest.approx(0.0, abs=1e-10)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)

    def test_hand_solved_normal_equations(self):
        # y = [1, 2, 2] on x = [1, 2, 3]: slope 0.5, intercept 2/3
        fit = ols_fit(np.array([[1.0], [2.0], [3.0]]), [1.0, 2.0, 2.0])
        assert fit.coefficient("X1") == pytest.approx(0.5, abs=1e-12)
        assert fit.coefficient("C") == pytest.approx(2.0 / 3.0, abs=1e-12)

    def test_intercept_only_returns_mean(self):
        y = np.array([1.0, 4.0, 7.0, 8.0])
        fit = ols_fit(np.empty((4, 0)), y, has_intercept=True)
        assert fit.coefficient("C") == pytest.approx(y.mean())
        assert fit.r_squared == pytest.approx(0.0, abs=1e-12)
        assert fit.f_statistic is None

    def test_residuals_orthogonal_to_design(self):
        rng = np.random.default_rng(0)
        x, y = random_instance(rng, 60, 3)
        fit = ols_fit(x, y)
        for j in range(3):
            inner = float(x[:, j] @ fit.residuals)
            assert abs(inner) <= 1e-8 * np.abs(y).sum()

    def test_residuals_sum_to_zero_with_intercept(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            x, y = random_instance(rng, 40, 2)
            fit = ols_fit(x, y)
            assert abs(fit.residuals.sum()) <= 1e-8 * np.abs(y).sum()

    def test_projection_idempotence(self):
        rng = np.random.default_rng(2)
        x, y = random_instance(rng, 50, 2)
        fit = ols_fit(x, y)
        refit = ols_fit(fit.fitted.reshape(-1, 1), fit.fitted)
        assert refit.coefficients[1] == pytest.approx(1.0, abs=1e-10)
        assert refit.r_squared == pytest.approx(1.0, abs=1e-12)

    def test_rank_deficiency_names_columns(self):
        x = np.column_stack([np.arange(10.0), 2.0 * np.arange(10.0)])
        with pytest.raises(RankDeficientError) as err:
            ols_fit(x, np.arange(10.0), names=["a", "b"])
        assert err.value.columns

    def test_more_params_than_obs_rejected(self):
        with pytest.raises(EstimationError, match="n > k"):
            ols_fit(np.eye(3), [1.0, 2.0, 3.0], has_intercept=True)

    def test_t_equals_coef_over_se_and_pvalues_monotone(self):
        rng = np.random.default_rng(3)
        x, y = random_instance(rng, 80, 3)
        fit = ols_fit(x, y)
        assert np.allclose(fit.t_statistics, fit.coefficients / fit.standard_errors)
        order = np.argsort(np.abs(fit.t_statistics))
        pv = fit.p_values[order]
        assert np.all(np.diff(pv) <= 1e-12)

    def test_adjusted_r2_below_r2(self):
        rng = np.random.default_rng(4)
        x, y = random_instance(rng, 30, 4)
        fit = ols_fit(x, y)
        assert fit.adjusted_r_squared <= fit.r_squared
        assert 0.0 <= fit.r_squared <= 1.0


class TestGls:
    def sample(self, n_entities, n_periods):
        return SampleInfo(
            tuple(f"E{i}" for i in range(n_entities)),
            tuple(range(2000, 2000 + n_periods)),
        )

    def test_identity_weight_equals_ols_bitwise(self):
        rng = np.random.default_rng(5)
        x, y = random_instance(rng, 24, 2)
        a = ols_fit(x, y)
        b = gls_fit(x, y, WeightMatrix(IDENTITY))
        assert np.array_equal(a.coefficients, b.coefficients)
        assert a.ssr == b.ssr

    def test_scalar_sigma_equals_ols_coefficients(self):
        rng = np.random.default_rng(6)
        sample = self.sample(3, 8)
        x, y = random_instance(rng, 24, 2)
        sigma = CrossSectionCovariance(sample.entities, 4.0 * np.eye(3))
        w = WeightMatrix(CROSS_SECTION_SUR, sigma)
        a = ols_fit(x, y)
        b = gls_fit(x, y, w, sample=sample)
        assert np.allclose(a.coefficients, b.coefficients, atol=1e-12)

    def test_matches_dense_omega_solve(self):
        rng = np.random.default_rng(7)
        sample = self.sample(2, 3)
        x = rng.standard_normal((6, 1))
        y = rng.standard_normal(6)
        s = np.array([[2.0, 0.7], [0.7, 1.0]])
        sigma = CrossSectionCovariance(sample.entities, s)
        fit = gls_fit(x, y, WeightMatrix(CROSS_SECTION_SUR, sigma), sample=sample)
        omega = np.kron(s, np.eye(3))
        xf = np.column_stack([np.ones(6), x])
        oi = np.linalg.inv(omega)
        beta = np.linalg.solve(xf.T @ oi @ xf, xf.T @ oi @ y)
        assert np.allclose(fit.coefficients, beta, rtol=1e-10)

    def test_gls_equals_ols_on_100_random_identity_instances(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            n, k = int(rng.integers(8, 30)), int(rng.integers(1, 4))
            x, y = random_instance(rng, n, k)
            a = ols_fit(x, y)
            b = gls_fit(x, y, WeightMatrix(IDENTITY))
            assert np.allclose(a.coefficients, b.coefficients, rtol=1e-12)

    def test_non_pd_sigma_rejected(self):
        sample = self.sample(2, 3)
        bad = CrossSectionCovariance(sample.entities, np.array([[1.0, 2.0], [2.0, 1.0]]))
        with pytest.raises(EstimationError):
            gls_fit(
                np.random.default_rng(0).standard_normal((6, 1)),
                np.zeros(6),
                WeightMatrix(CROSS_SECTION_SUR, bad),
                sample=sample,
            )

    def test_weight_matrix_invariants(self):
        with pytest.raises(ValueError):
            WeightMatrix(IDENTITY, sigma="something")
        with pytest.raises(ValueError):
            WeightMatrix(CROSS_SECTION_SUR, None)


class TestDurbinWatson:
    def test_alternating_single_entity(self):
        assert durbin_watson(np.array([1.0, -1.0, 1.0, -1.0])) == pytest.approx(3.0)

    def test_constant_residuals_give_zero(self):
        assert durbin_watson(np.array([1.0, 1.0, 1.0, 1.0])) == pytest.approx(0.0)

    def test_two_entities_skip_boundary(self):
        dw = durbin_watson([np.array([1.0, -1.0]), np.array([1.0, -1.0])])
        assert dw == pytest.approx(2.0)

    def test_all_zero_rejected(self):
        with pytest.raises(EstimationError):
            durbin_watson(np.zeros(5))

    def test_bounds(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            e = rng.standard_normal((3, 6))
            assert 0.0 <= durbin_watson(e) <= 4.0


class TestSchwarz:
    def test_direct_formula(self):
        assert schwarz_from(100.0, 100, 2) == pytest.approx(
            math.log(1.0) + 2 * math.log(100) / 100, abs=1e-12
        )
        assert schwarz_from(100.0, 100, 2) == pytest.approx(0.0921034, abs=1e-7)

    def test_penalty_monotone_in_k(self):
        assert schwarz_from(50.0, 80, 3) > schwarz_from(50.0, 80, 2)

    def test_zero_ssr_rejected(self):
        with pytest.raises(EstimationError):
            schwarz_from(0.0, 10, 2)

    def test_matches_fit_field(self):
        rng = np.random.default_rng(10)
        x, y = random_instance(rng, 40, 2)
        fit = ols_fit(x, y)
        assert schwarz_criterion(fit) == pytest.approx(fit.schwarz_criterion)


class TestSerialization:
    def test_fit_round_trips_through_dict(self):
        rng = np.random.default_rng(11)
        x, y = random_instance(rng, 30, 2)
        sample = SampleInfo(("A", "B", "C"), tuple(range(2001, 2011)))
        fit = ols_fit(x, y, sample=sample)
        tree = fit.to_dict()
        assert tree["n_observations"] == 30
        assert len(tree["parameters"]) == 3
        back = tree["parameters"][1]
        assert back["coefficient"] == fit.coefficients[1]
        assert tree["sample"]["entities"] == ["A", "B", "C"]
