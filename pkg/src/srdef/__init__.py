"""Deformation theory of Stanley-Reisner rings of simplicial complexes."""

__version__ = "0.1.0"
