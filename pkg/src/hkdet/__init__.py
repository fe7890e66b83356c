"""Exact Hilbert-Kunz functions of the 2x2 determinantal ring k[X]/I_2(X).

The main entry points are :func:`hilbert_kunz` (the length at one q),
:func:`count` (bounded variants), and :func:`hk_polynomial` (the whole
function as a polynomial in q).
"""
from .counting import INF, CountQuery, count, count_bounds, hilbert_kunz
from .polyfit import RationalPolynomial, hk_polynomial, interpolate, multiplicity

__all__ = [
    "INF",
    "CountQuery",
    "count",
    "count_bounds",
    "hilbert_kunz",
    "RationalPolynomial",
    "hk_polynomial",
    "interpolate",
    "multiplicity",
]

__version__ = "0.1.0"
