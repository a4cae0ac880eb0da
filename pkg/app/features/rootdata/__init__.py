"""
Root Data Feature Module

Root system, bilinear form and the bracket table of D(2|1;zeta).
"""
