"""Tropical homology and intersection forms of floor decomposed surfaces."""
