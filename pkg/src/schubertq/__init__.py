"""Exact quantum Schubert calculus for Lagrangian and orthogonal Grassmannians."""

__version__ = "0.1.0"
