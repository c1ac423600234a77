"""Exact walk generating functions and spectral radii of near-complete digraphs."""

__version__ = "0.1.0"
