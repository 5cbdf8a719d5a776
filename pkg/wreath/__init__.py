"""Iterated wreath products acting on tree leaves."""
