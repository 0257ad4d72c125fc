"""HexForce - forcing and anti-forcing polynomials of pyrene chains"""

__version__ = "1.0.0"
