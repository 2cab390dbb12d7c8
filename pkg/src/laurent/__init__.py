"""Multivariate Laurent polynomial module"""
from .polynomial import Monomial, RationalPoint, XPoly

__all__ = ["Monomial", "RationalPoint", "XPoly"]
