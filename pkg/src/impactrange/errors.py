"""Exception types shared across the package."""


class ImpactRangeError(Exception):
    """Base class for all errors raised by this package."""


class DataError(ImpactRangeError):
    """Unreadable, malformed, or non-finite input data."""


class ConfigError(ImpactRangeError, ValueError):
    """Analysis parameters out of range or inconsistent."""


class SingularFitError(ImpactRangeError):
    """Least-squares design matrix is rank deficient."""


class DomainError(ImpactRangeError):
    """A model was evaluated outside its mathematical domain."""


class ModelEvaluationError(ImpactRangeError):
    """A model produced unusable (wrong-shaped or non-finite) predictions."""


class ProtocolError(ImpactRangeError):
    """An external predict server violated the wire protocol."""
