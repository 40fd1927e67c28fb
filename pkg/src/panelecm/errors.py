"""Exception hierarchy shared across the package."""


class PanelEcmError(Exception):
    """Base class for all errors raised by this package."""


class PanelDataError(PanelEcmError):
    """Malformed or inconsistent panel input (duplicate keys, bad values)."""


class InterpolationError(PanelEcmError):
    """Interpolation request that cannot be satisfied (boundary gaps)."""


class TransformError(PanelEcmError):
    """Differencing/lagging request that exceeds the available sample."""


class AlignmentError(PanelEcmError):
    """Balanced alignment produced an empty or inconsistent sample."""


class RankDeficientError(PanelEcmError):
    """Design matrix is rank deficient."""

    def __init__(self, message, columns=()):
        super().__init__(message)
        self.columns = tuple(columns)


class EstimationError(PanelEcmError):
    """Least-squares estimation could not be carried out."""


class SigmaNotPositiveDefinite(PanelEcmError):
    """Estimated cross-section residual covariance is not positive definite."""


class GateError(PanelEcmError):
    """Cointegration gate failed and no override was requested."""


class ConfigError(PanelEcmError):
    """Invalid run configuration or profile."""
