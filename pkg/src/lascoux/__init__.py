"""Exact combinatorics for key and Lascoux polynomials via Kohnert diagrams."""

__version__ = "0.1.0"
