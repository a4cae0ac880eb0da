"""
Exact Arithmetic Feature Module

Rational numbers, rational functions in zeta and sparse exact linear algebra.
"""
