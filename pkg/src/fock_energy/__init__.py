"""Parabolically semistandard tableaux, RSK-type bijection, charge and energy."""
