"""
Weights Feature Module

Parameters, rho-shifted weights, atypicality, blocks and the Bruhat order.
"""
