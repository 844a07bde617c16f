"""CLI subcommands, one Typer app per module."""
