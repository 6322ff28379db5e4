"""Exception types shared across the package."""


class HilbgeomError(Exception):
    """Base class for every mathematical-domain error raised by hilbgeom."""


class DomainError(HilbgeomError, ValueError):
    """An argument lies outside the domain of the operation."""


class GenericityError(HilbgeomError, RuntimeError):
    """Independent random runs disagreed, so a 'general' choice was not general."""


class InputError(ValueError):
    """A JSON payload has the wrong shape."""
