"""Free and nearly free surfaces in P^3: Jacobian syzygies, tameness, Bourbaki ideals."""

__version__ = "0.1.0"
