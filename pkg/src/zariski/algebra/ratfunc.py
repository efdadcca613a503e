"""Elements of Q(t) as reduced fractions of univariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .unipoly import UniPoly, poly_gcd


class RationalFunction:
    """``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly.one(num.var)
        if num.var != den.var:
            raise ValueError("numerator and denominator use different variables")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = UniPoly.one(num.var)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = 1 / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def constant(cls, c, var: str = "t") -> "RationalFunction":
        return cls._raw(UniPoly.constant(c, var), UniPoly.one(var))

    @classmethod
    def gen(cls, var: str = "t") -> "RationalFunction":
        return cls._raw(UniPoly.gen(var), UniPoly.one(var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.num.coeff(0) == other
        if isinstance(other, UniPoly):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, UniPoly):
            return RationalFunction._raw(other, UniPoly.one(other.var))
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num ** n, self.den ** n)

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def as_polynomial(self) -> UniPoly:
        if self.den.degree != 0:
            raise ValueError(f"{self} is not a polynomial")
        return self.num


def as_ratfunc(value, var: str = "t") -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, UniPoly):
        return RationalFunction._raw(value, UniPoly.one(value.var))
    return RationalFunction.constant(QQ(value), var)
