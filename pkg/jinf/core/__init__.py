"""
JINF Core Module

Configuration and the exact algebra of periodic sets and computable permutations.
"""
