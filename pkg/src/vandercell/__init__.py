"""Exact geometry of power-sum images of the simplex and symmetric copositivity tests."""

__version__ = "0.1.0"
