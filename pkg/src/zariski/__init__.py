"""Exact computer algebra for conic-line arrangements and elliptic surfaces."""

__version__ = "0.1.0"
