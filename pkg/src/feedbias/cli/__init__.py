"""Command line interface for feedbias."""
