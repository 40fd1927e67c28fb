"""Seedable data-generating processes and Monte Carlo oracle drivers.

Random numbers come from the counter-based Philox generator with one stream
per (seed, entity) pair, so generation order never affects the sample, and
normal variates use the inverse-CDF transform, so draw i is a pure function
of the stream position.  Replication r of a Monte Carlo run reseeds with
``base_seed XOR r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Sequence

import numpy as np
from scipy.special import ndtri
from scipy.stats import norm

from .diagnostics import breusch_pagan_lm, jarque_bera, pesaran_cd, white_test
from .ecm import EcmSpec
from .panel import PanelDataset
from .regression import ols_fit
from .unitroot import (
    DET_INTERCEPT,
    DET_TREND,
    UnitRootConfig,
    adf_fisher_test,
    adf_test,
    breitung_test,
    hadri_test,
    ips_test,
    llc_test,
    pp_fisher_test,
)

RANDOM_WALK_PANEL = "random_walk_panel"
STATIONARY_AR1_PANEL = "stationary_ar1_panel"
COINTEGRATED_PANEL = "cointegrated_panel"
COMMON_FACTOR_PANEL = "common_factor_panel"
HETEROSKEDASTIC_REGRESSION = "heteroskedastic_regression"
KNOWN_ECM = "known_ecm"

KINDS = (
    RANDOM_WALK_PANEL,
    STATIONARY_AR1_PANEL,
    COINTEGRATED_PANEL,
    COMMON_FACTOR_PANEL,
    HETEROSKEDASTIC_REGRESSION,
    KNOWN_ECM,
)

_SEED_MASK = (1 << 64) - 1
_COMMON_STREAM = 1 << 32  # entity index reserved for shared (factor) draws


@dataclass(frozen=True)
class DgpSpec:
    """A named data-generating process with explicit seed and sizes."""

    kind: str
    n_entities: int
    n_periods: int
    parameters: Mapping[str, object] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown DGP kind {self.kind!r}")
        if self.n_periods < 10:
            raise ValueError("n_periods must be at least 10")
        if self.n_entities < 1:
            raise ValueError("n_entities must be positive")
        rho = self.parameters.get("rho")
        if self.kind == STATIONARY_AR1_PANEL and rho is not None and abs(rho) >= 1:
            raise ValueError("|rho| must be below 1 for a stationary panel")

    def param(self, name: str, default):
        return self.parameters.get(name, default)


def _stream(seed: int, entity_index: int) -> np.random.Generator:
    key = np.array([seed & _SEED_MASK, entity_index & _SEED_MASK], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _normals(gen: np.random.Generator, *shape: int) -> np.ndarray:
    """Standard normals via inverse CDF of open-interval uniforms."""
    bits = gen.integers(0, 1 << 53, dtype=np.uint64, size=shape)
    u = (bits.astype(np.float64) + 0.5) / float(1 << 53)
    return ndtri(u)


def _periods(spec: DgpSpec) -> tuple[int, ...]:
    start = int(spec.param("start_period", 1995))
    return tuple(range(start, start + spec.n_periods))


def _dataset(spec: DgpSpec, variables: Mapping[str, np.ndarray]) -> PanelDataset:
    entities = tuple(f"E{i + 1:02d}" for i in range(spec.n_entities))
    ds = PanelDataset(entities, _periods(spec), {}, {})
    for name, arr in variables.items():
        ds = ds.with_variable(name, arr)
    return ds


def _gen_random_walk(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    drift = float(spec.param("drift", 0.0))
    scale = float(spec.param("scale", 1.0))
    y = np.empty((spec.n_entities, spec.n_periods))
    for i in range(spec.n_entities):
        eps = _normals(_stream(spec.seed, i), spec.n_periods)
        y[i] = np.cumsum(drift + scale * eps)
    return {"y": y}


def _gen_stationary_ar1(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    rho = float(spec.param("rho", 0.5))
    scale = float(spec.param("scale", 1.0))
    burn = int(spec.param("burn_in", 50))
    y = np.empty((spec.n_entities, spec.n_periods))
    for i in range(spec.n_entities):
        eps = scale * _normals(_stream(spec.seed, i), spec.n_periods + burn)
        path = np.empty(spec.n_periods + burn)
        level = eps[0] / math.sqrt(max(1.0 - rho * rho, 1e-12))
        for t, e in enumerate(eps):
            level = rho * level + e
            path[t] = level
        y[i] = path[burn:]
    return {"y": y}


def _gen_cointegrated(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    n_reg = int(spec.param("n_regressors", 1))
    beta = tuple(spec.param("beta", tuple([1.0] * n_reg)))
    const = float(spec.param("constant", 0.0))
    rho_u = float(spec.param("noise_rho", 0.5))
    scale_u = float(spec.param("noise_scale", 1.0))
    x_scale = float(spec.param("x_scale", 1.0))
    if len(beta) != n_reg:
        raise ValueError("beta length must match n_regressors")
    t = spec.n_periods
    xs = np.empty((n_reg, spec.n_entities, t))
    y = np.empty((spec.n_entities, t))
    for i in range(spec.n_entities):
        gen = _stream(spec.seed, i)
        u = np.empty(t)
        level = 0.0
        eps_u = scale_u * _normals(gen, t)
        for s in range(t):
            level = rho_u * level + eps_u[s]
            u[s] = level
        total = const + u
        for j in range(n_reg):
            walk = np.cumsum(x_scale * _normals(gen, t))
            xs[j, i] = walk
            total = total + beta[j] * walk
        y[i] = total
    out = {"y": y}
    for j in range(n_reg):
        out[f"x{j + 1}"] = xs[j]
    return out


def _gen_common_factor(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    loading = float(spec.param("loading", 1.0))
    scale = float(spec.param("scale", 1.0))
    t = spec.n_periods
    factor = _normals(_stream(spec.seed, _COMMON_STREAM), t)
    y = np.empty((spec.n_entities, t))
    for i in range(spec.n_entities):
        gen = _stream(spec.seed, i)
        lam = loading * (0.5 + gen.random())
        y[i] = lam * factor + scale * _normals(gen, t)
    return {"y": y}


def _gen_heteroskedastic(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    het = float(spec.param("het", 0.0))
    scale = float(spec.param("scale", 1.0))
    coefs = tuple(spec.param("coefficients", (1.0, 1.0, 0.5)))
    t = spec.n_periods
    x1 = np.empty((spec.n_entities, t))
    x2 = np.empty((spec.n_entities, t))
    y = np.empty((spec.n_entities, t))
    for i in range(spec.n_entities):
        gen = _stream(spec.seed, i)
        a = _normals(gen, t)
        b = _normals(gen, t)
        z = _normals(gen, t)
        sd = scale * np.sqrt(1.0 + het * a**2)
        x1[i], x2[i] = a, b
        y[i] = coefs[0] + coefs[1] * a + coefs[2] * b + sd * z
    return {"y": y, "x1": x1, "x2": x2}


def _known_ecm_params(spec: DgpSpec):
    beta = tuple(spec.param("beta", (1.0, -0.5, 0.8)))
    lagged = tuple(spec.param("lagged_coefficients", (0.3, -0.2)))
    contemporaneous = tuple(spec.param("contemporaneous_coefficients", (0.25,)))
    if len(lagged) + len(contemporaneous) != len(beta):
        raise ValueError(
            "lagged plus contemporaneous coefficients must cover every regressor"
        )
    ar = float(spec.param("ar", 0.3))
    adjustment = float(spec.param("adjustment", -0.8))
    if abs(ar) >= 1.0:
        raise ValueError("|ar| must be below 1 for a stable error-correction process")
    if not -2.0 < adjustment < 0.0:
        raise ValueError("adjustment must lie in (-2, 0)")
    return {
        "beta": beta,
        "lagged": lagged,
        "contemporaneous": contemporaneous,
        "ar": ar,
        "adjustment": adjustment,
        "const_long": float(spec.param("long_run_constant", 5.0)),
        "alpha0": float(spec.param("alpha0", 0.1)),
        "noise_scale": float(spec.param("noise_scale", 0.5)),
        "x_scale": float(spec.param("x_scale", 1.0)),
        "burn_in": int(spec.param("burn_in", 30)),
    }


def _gen_known_ecm(spec: DgpSpec) -> Mapping[str, np.ndarray]:
    p = _known_ecm_params(spec)
    beta = p["beta"]
    n_reg = len(beta)
    t_total = spec.n_periods + p["burn_in"]
    xs = np.empty((n_reg, spec.n_entities, t_total))
    y = np.empty((spec.n_entities, t_total))
    for i in range(spec.n_entities):
        gen = _stream(spec.seed, i)
        for j in range(n_reg):
            xs[j, i] = np.cumsum(p["x_scale"] * _normals(gen, t_total))
        eps = p["noise_scale"] * _normals(gen, t_total)
        equilibrium = p["const_long"] + sum(beta[j] * xs[j, i] for j in range(n_reg))
        level = equilibrium[0] + eps[0]
        prev_dy = 0.0
        y[i, 0] = level
        for s in range(1, t_total):
            err_prev = y[i, s - 1] - equilibrium[s - 1]
            dy = p["alpha0"] + p["ar"] * prev_dy + p["adjustment"] * err_prev + eps[s]
            if s >= 2:
                for j, coef in enumerate(p["lagged"]):
                    dy += coef * (xs[j, i, s - 1] - xs[j, i, s - 2])
            for m, coef in enumerate(p["contemporaneous"]):
                j = len(p["lagged"]) + m
                dy += coef * (xs[j, i, s] - xs[j, i, s - 1])
            level = y[i, s - 1] + dy
            y[i, s] = level
            prev_dy = dy
    burn = p["burn_in"]
    out = {"y": y[:, burn:]}
    for j in range(n_reg):
        out[f"x{j + 1}"] = xs[j, :, burn:]
    return out


_GENERATORS: Mapping[str, Callable[[DgpSpec], Mapping[str, np.ndarray]]] = {
    RANDOM_WALK_PANEL: _gen_random_walk,
    STATIONARY_AR1_PANEL: _gen_stationary_ar1,
    COINTEGRATED_PANEL: _gen_cointegrated,
    COMMON_FACTOR_PANEL: _gen_common_factor,
    HETEROSKEDASTIC_REGRESSION: _gen_heteroskedastic,
    KNOWN_ECM: _gen_known_ecm,
}


def generate(spec: DgpSpec) -> PanelDataset:
    """Generate the dataset for a DGP spec (bit-for-bit seed-reproducible)."""
    return _dataset(spec, _GENERATORS[spec.kind](spec))


def ecm_spec_for(spec: DgpSpec) -> EcmSpec:
    """Model specification matching the variables of a known_ecm DGP."""
    if spec.kind != KNOWN_ECM:
        raise ValueError("only known_ecm DGPs define a matching model spec")
    p = _known_ecm_params(spec)
    n_lagged = len(p["lagged"])
    names = [f"x{j + 1}" for j in range(len(p["beta"]))]
    return EcmSpec(
        dependent="y",
        long_run_terms=tuple(names),
        lagged_difference_terms=("y", *names[:n_lagged]),
        contemporaneous_difference_terms=tuple(names[n_lagged:]),
        include_constant=True,
    )


def true_ecm_coefficients(spec: DgpSpec) -> dict[str, float]:
    """The generating coefficients keyed by fitted-parameter labels (lag 1)."""
    p = _known_ecm_params(spec)
    truth = {"C": p["alpha0"], "D(Y(-1))": p["ar"], "ECT(-1)": p["adjustment"]}
    for j, coef in enumerate(p["lagged"]):
        truth[f"D(X{j + 1}(-1))"] = coef
    for m, coef in enumerate(p["contemporaneous"]):
        truth[f"D(X{len(p['lagged']) + m + 1})"] = coef
    return truth


# --- Monte Carlo drivers ----------------------------------------------------


def _panel(ds: PanelDataset, variable: str = "y") -> np.ndarray:
    return ds.values[variable]


def _pvalue_white(ds: PanelDataset, _config) -> float:
    x = np.column_stack([_panel(ds, "x1").reshape(-1), _panel(ds, "x2").reshape(-1)])
    y = _panel(ds, "y").reshape(-1)
    fit = ols_fit(x, y, names=["x1", "x2"])
    return white_test(fit, x, ["x1", "x2"]).p_value


_TEST_PVALUES: Mapping[str, Callable[[PanelDataset, UnitRootConfig | None], float]] = {
    "adf": lambda ds, cfg: adf_test(_panel(ds)[0], cfg or UnitRootConfig()).p_value,
    "llc": lambda ds, cfg: llc_test(_panel(ds), cfg or UnitRootConfig()).p_value,
    "ips": lambda ds, cfg: ips_test(_panel(ds), cfg or UnitRootConfig()).p_value,
    "breitung": lambda ds, cfg: breitung_test(
        _panel(ds), cfg or UnitRootConfig(deterministic=DET_TREND)
    ).p_value,
    "hadri": lambda ds, cfg: hadri_test(_panel(ds), cfg or UnitRootConfig()).p_value,
    "adf_fisher": lambda ds, cfg: adf_fisher_test(
        _panel(ds), cfg or UnitRootConfig()
    ).p_value,
    "pp_fisher": lambda ds, cfg: pp_fisher_test(
        _panel(ds), cfg or UnitRootConfig()
    ).p_value,
    "pesaran_cd": lambda ds, cfg: pesaran_cd(_panel(ds)).p_value,
    "bp_lm": lambda ds, cfg: breusch_pagan_lm(_panel(ds)).p_value,
    "jarque_bera": lambda ds, cfg: jarque_bera(_panel(ds).reshape(-1)).p_value,
    "white": _pvalue_white,
}

TEST_NAMES = tuple(_TEST_PVALUES.keys())


def wilson_interval(successes: int, trials: int, coverage: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    z = float(norm.ppf(0.5 + coverage / 2.0))
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class MonteCarloResult:
    test: str
    dgp_kind: str
    replications: int
    rejections: int
    alpha: float
    rate: float
    ci_low: float
    ci_high: float


def monte_carlo_size(
    test: str,
    dgp: DgpSpec,
    replications: int,
    alpha: float = 0.05,
    config: UnitRootConfig | None = None,
) -> MonteCarloResult:
    """Rejection rate of a named test over seeded replications of a DGP.

    Replication r regenerates the DGP with seed ``dgp.seed XOR r``; the
    returned interval is the 95% Wilson interval for the rate.
    """
    if test not in _TEST_PVALUES:
        raise ValueError(f"unknown test {test!r}; choose from {TEST_NAMES}")
    if replications < 1:
        raise ValueError("replications must be positive")
    pfunc = _TEST_PVALUES[test]
    rejections = 0
    for r in range(replications):
        ds = generate(replace(dgp, seed=dgp.seed ^ r))
        if pfunc(ds, config) < alpha:
            rejections += 1
    rate = rejections / replications
    lo, hi = wilson_interval(rejections, replications)
    return MonteCarloResult(
        test, dgp.kind, replications, rejections, alpha, rate, lo, hi
    )


@dataclass(frozen=True)
class OracleCheck:
    name: str
    test: str
    dgp: DgpSpec
    band: tuple[float, float]
    replications: int
    alpha: float = 0.05
    config: UnitRootConfig | None = None


@dataclass(frozen=True)
class OracleOutcome:
    check: OracleCheck
    result: MonteCarloResult
    passed: bool


def default_validation_suite(seed: int = 7, scale: float = 1.0) -> list[OracleCheck]:
    """Curated size/power oracle checks; ``scale`` shrinks replication counts."""
    from .unitroot import LagRule

    fixed1 = UnitRootConfig(lag_rule=LagRule(method="fixed", lags=1))
    fixed1_trend = UnitRootConfig(
        deterministic=DET_TREND, lag_rule=LagRule(method="fixed", lags=1)
    )
    rw = lambda n, t: DgpSpec(RANDOM_WALK_PANEL, n, t, seed=seed)  # noqa: E731
    wn = lambda n, t: DgpSpec(STATIONARY_AR1_PANEL, n, t, {"rho": 0.0}, seed=seed)  # noqa: E731

    def reps(n: int) -> int:
        return max(50, int(n * scale))

    return [
        OracleCheck("adf size", "adf", rw(1, 200), (0.035, 0.065), reps(2000), config=fixed1),
        OracleCheck("adf power", "adf", wn(1, 200), (0.99, 1.0), reps(500), config=fixed1),
        OracleCheck("llc size", "llc", rw(15, 200), (0.035, 0.065), reps(2000), config=fixed1),
        OracleCheck("llc power", "llc", wn(15, 200), (0.99, 1.0), reps(200), config=fixed1),
        OracleCheck("ips size", "ips", rw(15, 200), (0.035, 0.065), reps(2000), config=fixed1),
        OracleCheck("ips power", "ips", wn(15, 200), (0.99, 1.0), reps(200), config=fixed1),
        OracleCheck(
            "breitung size", "breitung", rw(15, 200), (0.035, 0.065), reps(2000), config=fixed1_trend
        ),
        OracleCheck(
            "breitung power", "breitung", wn(15, 200), (0.99, 1.0), reps(200), config=fixed1_trend
        ),
        OracleCheck(
            "adf-fisher size", "adf_fisher", rw(15, 200), (0.035, 0.065), reps(2000), config=fixed1
        ),
        OracleCheck(
            "adf-fisher power", "adf_fisher", wn(15, 200), (0.99, 1.0), reps(200), config=fixed1
        ),
        OracleCheck(
            "pp-fisher size", "pp_fisher", rw(15, 200), (0.035, 0.065), reps(2000), config=fixed1
        ),
        OracleCheck(
            "pp-fisher power", "pp_fisher", wn(15, 200), (0.99, 1.0), reps(200), config=fixed1
        ),
        OracleCheck("hadri size", "hadri", wn(15, 200), (0.03, 0.07), reps(2000)),
        OracleCheck("pesaran-cd size", "pesaran_cd", wn(15, 18), (0.03, 0.07), reps(1000)),
        OracleCheck(
            "pesaran-cd power",
            "pesaran_cd",
            DgpSpec(COMMON_FACTOR_PANEL, 15, 18, {"loading": 1.0}, seed=seed),
            (0.95, 1.0),
            reps(300),
        ),
        OracleCheck("bp-lm size", "bp_lm", wn(10, 100), (0.03, 0.07), reps(1000)),
        OracleCheck(
            "jarque-bera size", "jarque_bera", wn(15, 18), (0.03, 0.07), reps(1000)
        ),
        OracleCheck(
            "white size",
            "white",
            DgpSpec(HETEROSKEDASTIC_REGRESSION, 15, 18, {"het": 0.0}, seed=seed),
            (0.03, 0.07),
            reps(1000),
        ),
        OracleCheck(
            "white power",
            "white",
            DgpSpec(HETEROSKEDASTIC_REGRESSION, 15, 18, {"het": 1.5}, seed=seed),
            (0.90, 1.0),
            reps(300),
        ),
    ]


def run_validation(checks: Sequence[OracleCheck]) -> list[OracleOutcome]:
    outcomes = []
    for check in checks:
        result = monte_carlo_size(
            check.test, check.dgp, check.replications, check.alpha, check.config
        )
        passed = check.band[0] <= result.rate <= check.band[1]
        outcomes.append(OracleOutcome(check, result, passed))
    return outcomes
