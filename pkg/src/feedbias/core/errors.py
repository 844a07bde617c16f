"""Core feedbias errors."""


class FeedbiasError(Exception):
    """Base class for all Feedbias errors."""

    pass


class InvalidArgumentError(FeedbiasError):
    """Raised when a parameter lies outside its domain."""

    pass


class InsufficientDataError(FeedbiasError):
    """Raised when there are too few observations or periods."""

    pass


class DegenerateConditionError(FeedbiasError):
    """Raised when a conditioning event has numerically zero probability."""

    def __init__(self, event: str, detail: str | None = None):
        self.event = event
        message = f"conditioning event {event} is numerically impossible"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class DegenerateVarianceError(FeedbiasError):
    """Raised when a series has zero sample variance."""

    pass


class DataError(FeedbiasError):
    """Raised when input data is inconsistent."""

    pass


class DataParseError(DataError):
    """Raised when an input file cannot be parsed.

    Carries the file path and, when known, the 1-based line and the column.
    """

    def __init__(
        self,
        path: str,
        message: str,
        line: int | None = None,
        column: str | None = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        location = path
        if line is not None:
            location = f"{location}:{line}"
        if column is not None:
            location = f"{location} [{column}]"
        super().__init__(f"{location}: {message}")


class ConfigError(FeedbiasError):
    """Raised when configuration is invalid."""
