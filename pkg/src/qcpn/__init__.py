"""Exact spectral computations for the Dolbeault-Dirac operator on quantum projective space."""

__version__ = "0.1.0"
