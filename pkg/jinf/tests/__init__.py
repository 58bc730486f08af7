"""
JINF Test Suite
"""
