"""
JINF Package

Exact computations on the infinite Johnson graph J∞ and Kneser graph K∞.
"""

__version__ = "1.0.0"
