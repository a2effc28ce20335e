"""Gentle Jacobian algebras of triangulated unpunctured marked surfaces."""

__version__ = "0.1.0"
