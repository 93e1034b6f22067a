"""Finite residuated lattice workbench."""

__version__ = "1.0.0"
