"""Formal characters, Verma flags and translation functors at flag level."""
