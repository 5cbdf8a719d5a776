"""Kaloujnine tableaux over finite rooted trees."""
