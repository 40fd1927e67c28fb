"""panelecm: a panel error-correction workbench.

Library and CLI for balanced annual panels: gap interpolation, a panel
unit-root battery, cointegration-gated error-correction estimation by
one-step Cross-Section SUR feasible GLS, and a Gauss-Markov diagnostic
battery, validated by Monte Carlo oracles.
"""

from .errors import (
    AlignmentError,
    ConfigError,
    EstimationError,
    GateError,
    InterpolationError,
    PanelDataError,
    PanelEcmError,
    RankDeficientError,
    SigmaNotPositiveDefinite,
    TransformError,
)
from .panel import (
    InterpolationLog,
    PanelDataset,
    SampleInfo,
    TransformSpec,
    align_balanced,
    apply_transform,
    interpolate_missing,
    load_panel,
    read_long_csv,
    wide_to_long,
)
from .regression import (
    FitResult,
    WeightMatrix,
    durbin_watson,
    gls_fit,
    ols_fit,
    schwarz_criterion,
)
from .sur import CrossSectionCovariance, estimate_sigma, sur_one_step_fit
from .unitroot import (
    LagRule,
    UnitRootConfig,
    UnitRootSummary,
    adf_regression,
    adf_test,
    breitung_test,
    fisher_combine,
    hadri_test,
    ips_test,
    llc_test,
    pp_regression,
    summary_window,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "ConfigError",
    "CrossSectionCovariance",
    "EstimationError",
    "FitResult",
    "GateError",
    "InterpolationError",
    "InterpolationLog",
    "LagRule",
    "PanelDataError",
    "PanelDataset",
    "PanelEcmError",
    "RankDeficientError",
    "SampleInfo",
    "SigmaNotPositiveDefinite",
    "TransformError",
    "TransformSpec",
    "UnitRootConfig",
    "UnitRootSummary",
    "WeightMatrix",
    "align_balanced",
    "apply_transform",
    "adf_regression",
    "adf_test",
    "breitung_test",
    "durbin_watson",
    "estimate_sigma",
    "fisher_combine",
    "gls_fit",
    "hadri_test",
    "interpolate_missing",
    "ips_test",
    "llc_test",
    "load_panel",
    "ols_fit",
    "pp_regression",
    "read_long_csv",
    "schwarz_criterion",
    "summary_window",
    "sur_one_step_fit",
    "wide_to_long",
]
