"""Exception types raised by mfkit."""


class MfkitError(Exception):
    """Base class of every error raised by mfkit."""


class RingMismatchError(MfkitError):
    """Two operands live over different rings or potentials."""


class DimensionMismatchError(MfkitError):
    """Matrix or vector shapes are incompatible."""


class GradingError(MfkitError):
    """A homogeneity or twist constraint is violated."""


class ValidationError(MfkitError):
    """An object fails one of the identities it must satisfy.

    Args:
        message: `str` - Summary of the failure.
        failures: `list` of `str` - One line per failed identity.
    """

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


class SplittingError(MfkitError):
    """The potential does not lie in the ideal of the chosen sequence."""


class DocumentError(MfkitError):
    """A document violates the file schema.

    Args:
        message: `str` - Description of the violation.
        field: `str` - Dotted path of the offending field.
    """

    def __init__(self, message, field=''):
        if field:
            message = '{0}: {1}'.format(field, message)
        super().__init__(message)
        self.field = field
