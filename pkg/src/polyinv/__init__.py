"""Exact topology of complex polynomial maps C^2 -> C."""
__version__ = "0.1.0"
