"""Additive p-sequences, their golden ratios and related identities."""

__version__ = "0.1.0"
