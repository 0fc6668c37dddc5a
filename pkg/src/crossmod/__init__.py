"""Exact Lie algebra cohomology, crossed modules and cocycle catalogs."""

__version__ = "0.1.0"
