"""Exact-arithmetic g-fans and g-polytopes from three combinatorial inputs:
skew-symmetric exchange matrices, Brauer graphs and Dynkin Cartan matrices."""

__version__ = "0.1.0"
