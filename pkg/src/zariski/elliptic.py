"""Elliptic curves y^2 = F(x) over Q(t) or Q, with the group law done through Mumford pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.fields import QQ, FunctionField
from .algebra.multipoly import MultiPoly
from .algebra.parse import parse_poly, parse_ratfunc
from .algebra.ratfunc import RationalFunction
from .algebra.unipoly import UniPoly, poly_xgcd, resultant
from .groebner import GroebnerBasis, LexOrder, groebner
from .plane import PlaneCurve


class CurveError(ValueError):
    """Invalid curve data or a point that is not on the curve."""


class DivisorError(ValueError):
    """A divisor that is not semi-reduced, or is outside the supported cases."""


@dataclass(frozen=True)
class CurvePoint:
    """An affine point, or the point at infinity when both coordinates are ``None``."""

    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


O = CurvePoint()


class WeierstrassCurve:
    """y^2 = F(x), F monic cubic with nonzero discriminant.

    ``field`` is the coefficient field of F: ``FunctionField("t")`` for the
    generic fiber, or ``QQ`` for a specialisation.
    """

    def __init__(self, F: UniPoly, factored: str | None = None):
        if F.degree != 3 or F.lc != F.field.one:
            raise CurveError(f"F must be a monic cubic in x, got {F}")
        if not resultant(F, F.derivative()):
            raise CurveError(f"F has a repeated root: {F}")
        self.F = F
        self.field = F.field
        self.factored = factored

    @classmethod
    def parse(cls, text: str, param: str = "t", var: str = "x") -> "WeierstrassCurve":
        """Parse F from text in the variables (param, var) into a cubic over Q(param)."""
        poly = parse_poly(text, (param, var))
        field = FunctionField(param)
        coeffs = poly.coeffs_in(var)
        deg = max(coeffs)
        cs = [field(coeffs[k].to_uni(param)) if k in coeffs else field.zero for k in range(deg + 1)]
        return cls(UniPoly(cs, var, field), factored=text)

    def __repr__(self):
        return f"WeierstrassCurve(y^2 = {self.factored or self.F})"

    def coerce(self, value):
        if isinstance(value, str):
            if self.field == QQ:
                return Fraction(value)
            return parse_ratfunc(value, self.field.var)
        return self.field(value)

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(self.coerce(x), self.coerce(y))
        if not self.on_curve(P):
            raise CurveError(f"{P} is not on {self}")
        return P

    def on_curve(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == self.F(P.x)

    def specialize(self, t0) -> "WeierstrassCurve":
        """The fiber over t = t0, as a curve over Q."""
        if self.field == QQ:
            raise CurveError("curve is already over Q")
        cs = [c(Fraction(t0)) for c in self.F.coeffs]
        return WeierstrassCurve(UniPoly(cs, self.F.var, QQ))

    def specialize_point(self, P: CurvePoint, t0) -> CurvePoint:
        if P.is_infinity:
            return O
        return CurvePoint(P.x(Fraction(t0)), P.y(Fraction(t0)))

    def discriminant(self):
        return resultant(self.F, self.F.derivative())


def negate(curve: WeierstrassCurve, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return O
    return CurvePoint(P.x, -P.y)


@dataclass(frozen=True)
class SemiReducedDivisor:
    """Effective affine divisor: a tuple of ``(point, multiplicity)``."""

    support: tuple

    def __init__(self, support):
        merged: dict = {}
        order = []
        for P, m in support:
            if P.is_infinity:
                raise DivisorError("the point at infinity is not in the affine support")
            if m <= 0:
                raise DivisorError("multiplicities must be positive")
            if P not in merged:
                order.append(P)
                merged[P] = 0
            merged[P] += m
        xs = {}
        for P in order:
            if not P.y and merged[P] > 1:
                raise DivisorError(f"2-torsion point {P} with multiplicity {merged[P]}")
            if P.x in xs:
                raise DivisorError(f"{xs[P.x]} and {P} are exchanged by the involution")
            xs[P.x] = P
        object.__setattr__(self, "support", tuple((P, merged[P]) for P in order))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.support)


@dataclass(frozen=True)
class MumfordPair:
    u: UniPoly
    v: UniPoly

    def __str__(self):
        return f"(u = {self.u}, v = {self.v})"

    def is_valid(self, curve: WeierstrassCurve) -> bool:
        return (self.u.lc == self.u.field.one and self.v.degree < self.u.degree
                and (self.v * self.v - curve.F) % self.u == 0)


def _sqrt_branch(curve: WeierstrassCurve, P: CurvePoint, e: int) -> UniPoly:
    """v with v(x_P) = y_P and v^2 = F modulo (x - x_P)^e, by Newton lifting."""
    F = curve.F
    X = UniPoly.gen(F.var, curve.field)
    m = (X - P.x) ** e
    v = UniPoly.constant(P.y, F.var, curve.field)
    if e == 1:
        return v
    prec = 1
    while prec < e:
        _, s, _ = poly_xgcd(v * 2, m)
        v = (v - (v * v - F) * s) % m
        prec *= 2
    return v


def mumford_of_divisor(curve: WeierstrassCurve, d: SemiReducedDivisor) -> MumfordPair:
    field = curve.field
    var = curve.F.var
    X = UniPoly.gen(var, field)
    u = UniPoly.one(var, field)
    v = UniPoly.zero(var, field)
    for P, e in d.support:
        if not curve.on_curve(P):
            raise CurveError(f"{P} is not on the curve")
        m = (X - P.x) ** e
        w = _sqrt_branch(curve, P, e)
        if u.degree == 0:
            v = w
        else:
            # Chinese remaindering: v = v (mod u), v = w (mod m)
            _, s, t = poly_xgcd(u, m)
            v = (v * t * m + w * s * u) % (u * m)
        u = u * m
    return MumfordPair(u, v)


def mumford_basis(pair: MumfordPair) -> GroebnerBasis:
    """{y - v, u} as a reduced basis in Q(t)[x, y] with lex y > x."""
    field = pair.u.field
    var = pair.u.var
    ring = (var, "y")
    y = MultiPoly.gen("y", ring, field)
    return GroebnerBasis(LexOrder("y", var),
                         (y - MultiPoly.from_uni(pair.v, ring), MultiPoly.from_uni(pair.u, ring)),
                         True)


def mumford_via_groebner(curve: WeierstrassCurve, d: SemiReducedDivisor) -> GroebnerBasis:
    """Reduced lex (y > x) basis of the ideal of a degree <= 2 divisor on the curve."""
    field = curve.field
    var = curve.F.var
    ring = (var, "y")
    x = MultiPoly.gen(var, ring, field)
    y = MultiPoly.gen("y", ring, field)
    eq = y * y - MultiPoly.from_uni(curve.F, ring)
    pts = []
    for P, m in d.support:
        if not curve.on_curve(P):
            raise CurveError(f"{P} is not on the curve")
        pts.extend([P] * m)
    if len(pts) == 1:
        (P,) = pts
        gens = [x - P.x, y - P.y, eq]
    elif len(pts) == 2:
        P1, P2 = pts
        # the same recipe covers a doubled point: it is the square of the point ideal
        gens = [(x - P1.x) * (x - P2.x), (x - P1.x) * (y - P2.y),
                (x - P2.x) * (y - P1.y), (y - P1.y) * (y - P2.y), eq]
    else:
        raise DivisorError("only divisors of degree 1 or 2 are supported")
    return groebner(gens, LexOrder("y", var))


def add_points(curve: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    for R in (P, Q):
        if not curve.on_curve(R):
            raise CurveError(f"{R} is not on the curve")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x and P.y == -Q.y:
        return O
    d = SemiReducedDivisor([(P, 1), (Q, 1)])
    pair = mumford_of_divisor(curve, d)
    # (v^2 - F)/u = -(x - x3) because F is monic of degree 3
    q = (pair.v * pair.v - curve.F).exact_div(pair.u)
    x3 = q.coeff(0)
    return CurvePoint(x3, -pair.v(x3))


def multiply(curve: WeierstrassCurve, n: int, P: CurvePoint) -> CurvePoint:
    if n < 0:
        return multiply(curve, -n, negate(curve, P))
    result = O
    base = P
    while n:
        if n & 1:
            result = add_points(curve, result, base)
        base = add_points(curve, base, base)
        n >>= 1
    return result


def linear_combination(curve: WeierstrassCurve, points, coefficients, torsion: CurvePoint | None = None) -> CurvePoint:
    """sum c_i P_i (+ torsion), added left to right."""
    points = list(points)
    coefficients = list(coefficients)
    if len(points) != len(coefficients):
        raise ValueError("points and coefficients differ in length")
    result = O
    for P, c in zip(points, coefficients):
        result = add_points(curve, result, multiply(curve, c, P))
    if torsion is not None:
        result = add_points(curve, result, torsion)
    return result


def curve_from_point(P: CurvePoint, label: str = "") -> PlaneCurve:
    """The plane curve x - x_P(t) = 0 swept out by a section."""
    if P.is_infinity:
        raise CurveError("the point at infinity has no affine image")
    xP = P.x
    if not isinstance(xP, RationalFunction):
        raise CurveError("coordinates must lie in Q(t)")
    if not xP.is_polynomial():
        raise CurveError(f"x-coordinate {xP} is not a polynomial in {xP.var}")
    num = xP.as_polynomial()
    if num.degree > 2:
        raise CurveError(f"x-coordinate {xP} has degree above 2")
    vars = (num.var, "x")
    return PlaneCurve(MultiPoly.gen("x", vars) - MultiPoly.from_uni(num, vars), label)
