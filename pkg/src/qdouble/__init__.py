"""Exact symbolic tools for double-bosonised quantum groups."""

__version__ = "0.1.0"
