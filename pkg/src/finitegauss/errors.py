"""Exception types shared across the package."""


class FiniteGaussError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimensionError(FiniteGaussError):
    """Lattice size is not an odd integer >= 3."""


class InvalidParameterError(FiniteGaussError):
    """A numeric parameter is outside its admissible range."""


class PhasePointRangeError(InvalidParameterError):
    """A phase-space label falls outside the centered index range."""


class KindMismatchError(FiniteGaussError):
    """An operator of the wrong structural kind was supplied."""


class DimensionMismatchError(FiniteGaussError):
    """Operands live on lattices of different sizes."""


class UnsupportedOrderError(InvalidParameterError):
    """Requested polynomial order is outside the supported range."""


class DegenerateVectorError(FiniteGaussError):
    """A constructed vector has norm too small to be usable."""


class NoLevelsError(FiniteGaussError):
    """No level carries weight above the floor."""


class CapacityExceededError(FiniteGaussError):
    """An exact integer result would overflow the supported range."""


class NumericalFailureError(FiniteGaussError):
    """A numerical routine failed to meet its accuracy contract.

    The offending residual, when available, is stored on the instance.
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual
