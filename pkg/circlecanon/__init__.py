# Canonical encodings of circle graphs
__version__ = "1.0.0"
