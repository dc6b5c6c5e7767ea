"""Exhaustive enumeration of small pure complexes and conjecture searches."""
