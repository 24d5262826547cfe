"""Planar humanoid fall-recovery and stand-up laboratory."""

__version__ = "0.1.0"
