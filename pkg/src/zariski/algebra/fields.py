"""Coefficient fields: the rationals and the rational function field Q(t)."""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The field Q, with elements represented by :class:`fractions.Fraction`."""

    name = "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to a rational")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def format(self, c: Fraction) -> str:
        return str(c)

    def is_atomic(self, c: Fraction) -> bool:
        # Safe to print without parentheses as a coefficient.
        return True

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FunctionField:
    """The field Q(var) of rational functions in one variable."""

    def __init__(self, var: str = "t"):
        self.var = var
        self.name = f"QQ({var})"

    def __call__(self, value):
        from .ratfunc import RationalFunction
        from .unipoly import UniPoly

        if isinstance(value, RationalFunction):
            if value.var != self.var:
                raise ValueError(f"variable mismatch: {value.var} vs {self.var}")
            return value
        if isinstance(value, UniPoly):
            return RationalFunction(value, UniPoly.one(self.var))
        if isinstance(value, (int, Fraction)):
            return RationalFunction.constant(value, self.var)
        raise TypeError(f"cannot convert {value!r} to an element of {self.name}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def format(self, c) -> str:
        return str(c)

    def is_atomic(self, c) -> bool:
        return c.is_constant() and c.constant_value() >= 0

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("QQ(t)", self.var))

    def __repr__(self):
        return f"FunctionField({self.var!r})"
