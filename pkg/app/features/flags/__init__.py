"""Tilting, projective and simple modules: closed-form flags and their checks."""
