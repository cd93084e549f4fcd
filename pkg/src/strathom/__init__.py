"""Intersection homology of stratified simplicial pseudomanifolds."""

__version__ = "0.1.0"
