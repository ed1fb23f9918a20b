"""Exception types shared across the package."""


class MorsimError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(MorsimError, ValueError):
    """A physical parameter violates its validity constraints."""


class ConfigError(MorsimError, ValueError):
    """A sweep configuration is malformed or inconsistent.

    ``line`` carries the 1-based line number for errors raised while
    parsing config text, or ``None`` for semantic errors.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NumericError(MorsimError, ArithmeticError):
    """A numeric computation failed or produced untrustworthy output."""


class SingularSystemError(NumericError):
    """A linear solve failed or its residual exceeded tolerance."""


class CrossValidationError(NumericError):
    """Analytic and numeric engines disagree beyond tolerance."""


class EmitError(MorsimError):
    """Output rows could not be written to the requested destination."""
