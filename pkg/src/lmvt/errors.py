"""Exception hierarchy shared by all solvers."""


class LMVTError(Exception):
    """Base class for every error raised by this package."""


class InstanceShapeError(LMVTError, ValueError):
    """Rate matrix, allocation or vector dimensions do not line up."""


class InvalidAllocationError(LMVTError, ValueError):
    """An allocation names a video index outside ``[0, n)``."""


class CapacityError(LMVTError, OverflowError):
    """A rate or a row sum falls outside the supported magnitude."""


class TooLargeForOracleError(LMVTError):
    """The exhaustive oracle was asked to enumerate more than its cap."""


class StateBudgetError(LMVTError):
    """A layered DP produced more frontier vectors than allowed."""


class InvalidWitnessError(LMVTError, ValueError):
    """An allocation cannot be decoded into a partition witness."""
