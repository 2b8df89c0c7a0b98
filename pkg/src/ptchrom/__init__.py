"""Chromatic polynomials of planar triangulation families."""

__version__ = "0.1.0"
