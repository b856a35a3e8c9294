"""Source package for the diagonal coupling lab."""
