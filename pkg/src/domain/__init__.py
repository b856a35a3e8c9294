"""Pure group theory, Folner sets and couplings of diagonal products."""
