"""
Features Module

Each feature follows the same structure:
- schema.py (data shapes, Pydantic models)
- service.py (computation)
- further modules for feature-specific concerns (repo, worker, scheduler, tables)
"""
