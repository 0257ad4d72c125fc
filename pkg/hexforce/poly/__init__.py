"""Exact polynomial, quadratic-field and sequence arithmetic"""
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.quadrat import QuadRat

__all__ = ["IntPoly", "QuadRat"]
