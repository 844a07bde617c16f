"""Output streams, logging setup and exit codes shared by all commands."""

import logging
from pathlib import Path

import typer
from rich.console import Console
from rich.logging import RichHandler

from feedbias.core.errors import ConfigError, DataParseError, FeedbiasError, InvalidArgumentError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

stderr_console = Console(stderr=True)

# DataParseError precedes its DataError parent.
_EXIT_CODES: tuple[tuple[type[BaseException], int], ...] = (
    (DataParseError, EXIT_USAGE_ERROR),
    (InvalidArgumentError, EXIT_USAGE_ERROR),
    (ConfigError, EXIT_USAGE_ERROR),
    (FeedbiasError, EXIT_DOMAIN_ERROR),
)


def configure_logging(verbose: bool) -> None:
    """Route the package's log records to stderr through rich."""
    package_logger = logging.getLogger("feedbias")
    for handler in list(package_logger.handlers):
        if isinstance(handler, RichHandler):
            package_logger.removeHandler(handler)
    handler = RichHandler(console=stderr_console, show_time=False, show_path=verbose)
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def get_exit_code_for_exception(exception: BaseException) -> int:
    """Map exception types to process exit codes; the first matching row wins."""
    for exception_type, code in _EXIT_CODES:
        if isinstance(exception, exception_type):
            return code
    return EXIT_USAGE_ERROR


def print_error(message: str) -> None:
    """One ``error:`` line on stderr."""
    flattened = " ".join(str(message).split())
    typer.echo(f"error: {flattened}", err=True)


def emit(text: str, out: Path | None = None) -> None:
    """Write tabular output to ``out`` when given, else to stdout."""
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {out}")
