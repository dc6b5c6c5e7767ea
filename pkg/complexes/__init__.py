"""Pure simplicial complexes, paths and cycles package."""
