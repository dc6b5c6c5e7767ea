"""Facet-list and sequence loaders package."""
