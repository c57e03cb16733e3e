"""Numerical experiments with Blaschke products and inner functions of the unit disk."""

__version__ = "0.1.0"
