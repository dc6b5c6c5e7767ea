"""Simplicial tree certifiers package."""
