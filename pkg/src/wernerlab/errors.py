"""Exception types shared across the library."""


class WernerLabError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(WernerLabError, ValueError):
    """A scalar parameter is outside its admissible range."""


class InvalidDimensionError(InvalidParameterError):
    """A local dimension is not an integer >= 2."""


class DimensionMismatchError(WernerLabError, ValueError):
    """Operands have incompatible shapes."""


class DimensionOverflowError(WernerLabError, ValueError):
    """A requested matrix or copy count exceeds the configured size cap."""


class NonHermitianError(WernerLabError, ValueError):
    """A matrix violates the Hermiticity tolerance."""


class NotUnitaryError(WernerLabError, ValueError):
    """A matrix violates the unitarity tolerance."""


class NotDensityMatrixError(WernerLabError, ValueError):
    """A matrix fails the density-matrix invariants (trace, positivity)."""


class SupportMismatchError(WernerLabError, ValueError):
    """An entropy difference is undefined because a state is rank-deficient."""
