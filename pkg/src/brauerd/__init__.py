"""Brauer diagram algebra of type D_n."""
