"""Splitting types from intersections of lifted curves in the double cover y^2 = F."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.multipoly import MultiPoly
from .algebra.parse import parse_poly
from .algebra.ratfunc import RationalFunction
from .algebra.unipoly import squarefree_part
from .elliptic import CurvePoint
from .groebner import INFINITE, GroebnerBasis, LexOrder, groebner, quotient_dimension

SPACE_VARS = ("t", "x", "y")
SPLIT_ORDER = LexOrder("x", "y", "t")


class SplittingError(ValueError):
    pass


@dataclass(frozen=True)
class SplittingType:
    m1: int
    m2: int

    def __post_init__(self):
        if self.m1 > self.m2:
            a, b = self.m2, self.m1
            object.__setattr__(self, "m1", a)
            object.__setattr__(self, "m2", b)

    def __iter__(self):
        return iter((self.m1, self.m2))

    def __str__(self):
        return f"({self.m1}, {self.m2})"


@dataclass(frozen=True)
class SplittingResult:
    type: SplittingType
    dims: tuple  # (d+, d-)
    bases: dict  # "+" / "-" -> GroebnerBasis


def _coord(value, name) -> MultiPoly:
    if not isinstance(value, RationalFunction) or not value.is_polynomial():
        raise SplittingError(f"{name} = {value} is not a polynomial in t")
    return MultiPoly.from_uni(value.as_polynomial(), SPACE_VARS)


def lift_ideal(P: CurvePoint, sign: int) -> tuple:
    """Generators <x - x_P, y - sign*y_P> of one lift, with integer coefficients."""
    if P.is_infinity:
        raise SplittingError("the point at infinity has no lift")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x = MultiPoly.gen("x", SPACE_VARS)
    y = MultiPoly.gen("y", SPACE_VARS)
    return ((x - _coord(P.x, "x")).primitive(), (y - _coord(P.y, "y") * sign).primitive())


def _check_eliminant(gb: GroebnerBasis):
    if gb.is_unit_ideal():
        return
    elim = [g for g in gb.elements if set(g.used_vars()) <= {"t"}]
    if not elim:
        return
    r = elim[0].to_uni("t")
    if squarefree_part(r).degree != r.degree:
        raise SplittingError(f"eliminant {r} is not squarefree; Q-dimension would count multiplicity")


def splitting_type_via_groebner(base: CurvePoint, other: CurvePoint, base_sign: int = 1) -> SplittingResult:
    """Intersect the ``base_sign`` lift of ``base`` with both lifts of ``other``."""
    lifted = lift_ideal(base, base_sign)
    dims = []
    bases = {}
    for sign, key in ((1, "+"), (-1, "-")):
        gb = groebner(list(lifted) + list(lift_ideal(other, sign)), SPLIT_ORDER)
        d = quotient_dimension(gb)
        if d is INFINITE:
            raise SplittingError("the lifted curves share a component")
        _check_eliminant(gb)
        dims.append(d)
        bases[key] = gb
    return SplittingResult(SplittingType(*dims), tuple(dims), bases)


def primitive_form(polys) -> list:
    """Canonical text of each polynomial scaled to coprime integers with positive leading term."""
    return sorted(str(p.primitive()) for p in polys)


def parse_basis(texts, variables=SPACE_VARS) -> list:
    return [parse_poly(s, variables) for s in texts]


def same_basis(gb: GroebnerBasis, printed) -> bool:
    """Compare a computed basis with printed generators up to scaling each element."""
    return primitive_form(gb.elements) == primitive_form(parse_basis(printed))
