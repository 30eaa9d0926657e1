"""Exact Hodge spectra and middle-degree isospectrality checks."""

__version__ = "0.1.0"
