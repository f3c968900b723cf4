"""Exception types shared across the package."""


class DcfregError(Exception):
    """Base class for every error raised by dcfreg."""


class DimensionError(DcfregError, ValueError):
    """Operands have incompatible shapes."""


class AsymmetricMatrixError(DcfregError, ValueError):
    """A matrix required to be symmetric is not."""


class SingularSystemError(DcfregError, ArithmeticError):
    """A linear system is singular, indefinite or rank deficient."""


class UnderdeterminedError(DcfregError, ValueError):
    """Too few observations to determine a unique fit."""


class UndefinedRSquaredError(DcfregError, ValueError):
    """R-squared requires targets with nonzero variance."""


class InputError(DcfregError, ValueError):
    """Malformed or invalid user input (files, config, flags)."""
