"""Command-line interface: argument parsing, settings and console output."""

from .cli import EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, EXIT_VIOLATION, build_parser, main
from .settings import RunConfig, Settings

__all__ = [
    'EXIT_OK',
    'EXIT_PRECONDITION',
    'EXIT_USAGE',
    'EXIT_VIOLATION',
    'RunConfig',
    'Settings',
    'build_parser',
    'main',
]
