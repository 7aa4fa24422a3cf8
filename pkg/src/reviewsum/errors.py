"""Exception hierarchy shared across the package."""


class ReviewSumError(Exception):
    """Base class for all errors raised by this package."""


class DataError(ReviewSumError):
    """A data file is missing, malformed, or inconsistent."""


class ControlsError(ReviewSumError):
    """A user-supplied control parameter is out of range or unresolvable.

    ``fields`` maps parameter names to messages so HTTP responses can
    report problems field by field.
    """

    def __init__(self, message: str, fields: dict[str, str] | None = None):
        super().__init__(message)
        self.fields = fields or {}


class InfeasibleError(ReviewSumError):
    """A candidate selection violates the length budget."""


class UnknownPlaceError(DataError):
    """No corpus is loaded for the requested place."""
