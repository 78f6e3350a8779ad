"""
schreier.spaces package.
"""

__all__ = (
    'ordinals',
    'families',
    'vectors',
    'norms',
    'one_sets',
    'tingley',
    'oracle',
    'properties',
    'config',
    'errors',
    'util',
    'cli',
)
