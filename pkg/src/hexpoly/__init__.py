"""Exact enumeration of hexagonal polyominoes with nearly convex columns."""

__version__ = "0.1.0"
