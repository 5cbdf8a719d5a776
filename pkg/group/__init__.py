"""Permutation-group engine on top of sympy stabilizer chains."""
