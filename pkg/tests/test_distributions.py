"""Reference distribution kernels against analytic and high-precision oracles."""

import math

import mpmath
import pytest

from panelecm.distributions import (
    chi_square_pvalue,
    chi_square_quantile,
    f_pvalue,
    normal_pvalue,
    normal_quantile,
    t_pvalue,
)


class TestChiSquare:
    def test_published_value_df258(self):
        assert chi_square_quantile(0.95, 258) == pytest.approx(296.466, abs=0.01)

    def test_median_df2_is_2ln2(self):
        assert chi_square_quantile(0.5, 2) == pytest.approx(2.0 * math.log(2.0), abs=1e-9)

    def test_quantile_pvalue_inverse(self):
        for df in (1, 5, 30, 258, 1000):
            for p in (0.01, 0.5, 0.95, 0.999):
                q = chi_square_quantile(p, df)
                assert chi_square_pvalue(q, df) == pytest.approx(1.0 - p, rel=1e-6)

    def test_high_precision_oracle(self):
        # upper tail from the regularized incomplete gamma function
        for df, x in [(2, 3.0), (10, 18.3), (258, 296.466)]:
            expected = float(mpmath.gammainc(df / 2, x / 2, mpmath.inf, regularized=True))
            assert chi_square_pvalue(x, df) == pytest.approx(expected, rel=1e-9)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            chi_square_quantile(0.0, 5)
        with pytest.raises(ValueError):
            chi_square_quantile(1.0, 5)
        with pytest.raises(ValueError):
            chi_square_quantile(0.5, 0)
        with pytest.raises(ValueError):
            chi_square_pvalue(-1.0, 5)


class TestNormal:
    def test_two_sided_five_percent_point(self):
        assert normal_pvalue(1.959964) == pytest.approx(0.05, abs=1e-6)

    def test_erfc_oracle(self):
        for z in (-3.0, -1.0, 0.0, 0.5, 2.5, 5.0):
            expected = float(mpmath.erfc(z / mpmath.sqrt(2)) / 2)
            assert normal_pvalue(z, two_sided=False) == pytest.approx(expected, rel=1e-10)

    def test_quantile_round_trip(self):
        for p in (0.001, 0.3, 0.5, 0.975):
            z = normal_quantile(p)
            assert normal_pvalue(z, two_sided=False) == pytest.approx(1.0 - p, rel=1e-8)


class TestTandF:
    def test_t_matches_normal_for_huge_df(self):
        assert t_pvalue(1.959964, 10**7) == pytest.approx(0.05, abs=1e-4)

    def test_t_monotone_in_abs_t(self):
        values = [t_pvalue(t, 12) for t in (0.0, 0.5, 1.0, 2.0, 4.0)]
        assert values == sorted(values, reverse=True)

    def test_t_symmetric(self):
        assert t_pvalue(2.5, 8) == pytest.approx(t_pvalue(-2.5, 8), rel=1e-12)

    def test_f_is_squared_t(self):
        # F(1, d) equals t(d) squared
        t, df = 2.1, 17
        assert f_pvalue(t * t, 1, df) == pytest.approx(t_pvalue(t, df), rel=1e-9)

    def test_f_nonnegative_required(self):
        with pytest.raises(ValueError):
            f_pvalue(-0.5, 2, 10)
