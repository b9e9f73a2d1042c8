"""Exact computations with Weyl cycles on blow-ups of P^3 and P^4 at points."""

__version__ = "0.1.0"
