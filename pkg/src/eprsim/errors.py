"""Exception types shared across the package."""


class EprsimError(Exception):
    """Base class for package-specific failures."""


class UnphysicalStateError(EprsimError):
    """Covariance matrix violates the uncertainty-principle constraint."""


class InvalidQuadraturePairError(EprsimError):
    """Operation requested on a non-commuting (same-mode) quadrature pair."""


class DegenerateConditionerError(EprsimError):
    """Conditioning quadrature has numerically zero variance."""


class TruncationError(EprsimError):
    """Number-state truncation is too small for the requested accuracy."""


class NegligibleMarginalError(EprsimError):
    """Conditioning point carries negligible marginal density."""


class OccupancyError(EprsimError):
    """No conditioning bin reaches the required occupancy."""
