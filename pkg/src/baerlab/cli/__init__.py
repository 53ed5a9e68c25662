"""Command-line interface and input file formats."""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
