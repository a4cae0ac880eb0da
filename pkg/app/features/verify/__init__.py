"""Verification suites, their worker pool and scheduler."""
