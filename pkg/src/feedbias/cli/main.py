"""Main entry point for the feedbias CLI."""

import sys
from collections.abc import Sequence

import typer

from feedbias import __version__
from feedbias.cli.commands import conditional, diagnose, estimate, limits, pipeline, simulate, smooth, surface
from feedbias.cli.output import EXIT_OK, EXIT_USAGE_ERROR, configure_logging, get_exit_code_for_exception, print_error
from feedbias.core.errors import FeedbiasError

# typer re-exports the exception types of the click it runs on, bundled or not.
_cli_exceptions = sys.modules[typer.BadParameter.__module__]

cli = typer.Typer(
    name="feedbias",
    help="Conditional drift estimates and adaptive forecasts for positive-feedback traders",
    add_completion=False,
    no_args_is_help=True,
)


def version_callback(value: bool):
    if value:
        typer.echo(f"feedbias v{__version__}")
        raise typer.Exit()


@cli.callback()
def main_callback(
    version: bool = typer.Option(None, "--version", callback=version_callback, is_eager=True),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug detail to stderr"),
):
    """
    feedbias CLI.
    """
    configure_logging(verbose)


cli.add_typer(simulate.app, name="simulate")
cli.add_typer(estimate.app, name="estimate")
cli.add_typer(conditional.app, name="conditional")
cli.add_typer(surface.app, name="surface")
cli.add_typer(limits.app, name="limits")
cli.add_typer(smooth.app, name="smooth")
cli.add_typer(diagnose.app, name="diagnose")
cli.add_typer(pipeline.app, name="pipeline")


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI on ``argv`` and return the exit code instead of exiting."""
    command = typer.main.get_command(cli)
    args = list(sys.argv[1:] if argv is None else argv)
    if not args:
        # Bare invocation: show the full help, then fail as a usage error.
        ctx = command.make_context("feedbias", [], resilient_parsing=True)
        typer.echo(command.get_help(ctx), err=True)
        print_error("missing command")
        return EXIT_USAGE_ERROR
    try:
        result = command.main(args=args, prog_name="feedbias", standalone_mode=False)
    except _cli_exceptions.UsageError as e:
        if e.ctx is not None:
            typer.echo(e.ctx.get_usage(), err=True)
        print_error(e.format_message())
        return EXIT_USAGE_ERROR
    except _cli_exceptions.ClickException as e:
        print_error(e.format_message())
        return e.exit_code
    except _cli_exceptions.Abort:
        print_error("aborted")
        return EXIT_USAGE_ERROR
    except (FeedbiasError, OSError) as e:
        print_error(str(e))
        return get_exit_code_for_exception(e)
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
