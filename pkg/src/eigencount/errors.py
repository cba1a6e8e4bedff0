"""Exception types shared across the package."""


class EigencountError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(EigencountError):
    """Raised when an argument violates a documented precondition."""


class SolverError(EigencountError):
    """Raised when an iterative numerical routine fails to converge."""


class DegenerateModelError(EigencountError):
    """Raised when a population model has repeated strengths where distinct
    ones are required (the interaction formulas are singular at exact ties)."""


class DataError(EigencountError):
    """Raised when an input file cannot be parsed into the expected shape."""
