"""Exact computations with Levi extensions of nilpotent Lie algebras."""

__version__ = "0.1.0"
