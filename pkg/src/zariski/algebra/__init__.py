"""Exact arithmetic: rationals, polynomials, Q(t) and a polynomial parser."""

from .fields import QQ, FunctionField, RationalField
from .multipoly import MultiPoly, resultant
from .parse import ParseError, UnknownVariableError, parse_poly, parse_ratfunc, print_poly
from .ratfunc import RationalFunction, as_ratfunc
from .unipoly import (
    UniPoly,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    squarefree_decomposition,
    squarefree_part,
)
from .unipoly import resultant as uni_resultant

__all__ = [
    "QQ", "FunctionField", "RationalField", "MultiPoly", "resultant", "ParseError",
    "UnknownVariableError", "parse_poly", "parse_ratfunc", "print_poly", "RationalFunction",
    "as_ratfunc", "UniPoly", "poly_gcd", "poly_xgcd", "rational_roots",
    "squarefree_decomposition", "squarefree_part", "uni_resultant",
]
