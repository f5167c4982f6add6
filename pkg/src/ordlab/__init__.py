"""Exact computations with left orders on Z^n and on small nilpotent groups."""

__version__ = "0.1.0"
