"""Exception and warning types shared across the package."""


class SpinStarError(Exception):
    """Base class for all spinstar errors."""


class DomainError(SpinStarError, ValueError):
    """An argument lies outside the mathematically valid domain."""


class CapacityExceeded(SpinStarError):
    """Requested system size is beyond the dense-diagonalization budget."""


class DegeneracyAmbiguity(SpinStarError):
    """A sector eigenstate could not be assigned a sharp total spin."""


class OrderingViolation(SpinStarError):
    """Computed level crossings are not monotone; signals a spectrum bug."""


class OracleMismatch(SpinStarError):
    """A brute-force cross-check disagreed with an analytic construction."""


class VanishingOverlap(SpinStarError):
    """Consecutive loop states are (numerically) orthogonal."""


class ConvergenceWarning(UserWarning):
    """Doubling quadrature nodes moved the result beyond tolerance."""


class NormalizationWarning(UserWarning):
    """A probability distribution integrates measurably away from one."""
