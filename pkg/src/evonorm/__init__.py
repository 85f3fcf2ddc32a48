"""Exact algebra for evolutes and curves of normals of plane curves."""

__version__ = "0.1.0"
