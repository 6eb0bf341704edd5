"""Exact tilt-stability computations on index-two Fano threefolds."""

__version__ = "0.1.0"
