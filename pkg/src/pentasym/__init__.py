"""Exact computations on pentavalent symmetric graphs and their groups."""

__version__ = "0.1.0"
