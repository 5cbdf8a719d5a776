"""Permutation arithmetic and cycle notation."""
