"""
Verma Feature Module

Truncated Verma modules, PBW straightening and singular vectors.
"""
