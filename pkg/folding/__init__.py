# folding/__init__.py

"""Folding polynomials for A1, A2, B2, G2 and their value sets over finite fields."""

__version__ = "0.1.0"
