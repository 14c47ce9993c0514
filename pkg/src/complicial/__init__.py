"""Exact computation with finite stratified and bistratified simplicial sets."""

__version__ = "0.1.0"
