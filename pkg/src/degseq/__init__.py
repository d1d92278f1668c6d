"""Exact and asymptotic enumeration of graphs by degree sequence."""

__version__ = "0.1.0"

__all__ = ["__version__"]
