"""Exact construction and verification toolkit for higher-order superintegrable systems."""
__version__ = "0.1.0"
