"""Affine plane curves in the coordinates (t, x)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.fields import QQ
from .algebra.multipoly import MultiPoly
from .algebra.parse import parse_poly

PLANE_VARS = ("t", "x")

_KINDS = {1: "line", 2: "conic", 4: "quartic-union"}


@dataclass(frozen=True)
class PlaneCurve:
    poly: MultiPoly
    label: str = ""
    kind: str = ""

    def __post_init__(self):
        if self.poly.vars != PLANE_VARS:
            object.__setattr__(self, "poly", self.poly.in_vars(PLANE_VARS))
        if self.poly.field != QQ:
            raise TypeError("plane curves have rational coefficients")
        deg = self.poly.total_degree()
        if deg < 1:
            raise ValueError(f"{self.label or 'curve'}: constant polynomial is not a curve")
        expected = _KINDS.get(deg, f"degree-{deg}")
        if not self.kind:
            object.__setattr__(self, "kind", expected)
        elif self.kind != expected:
            raise ValueError(f"{self.label}: kind {self.kind!r} does not match total degree {deg}")

    @classmethod
    def parse(cls, text: str, label: str = "", kind: str = "") -> "PlaneCurve":
        return cls(parse_poly(text, PLANE_VARS), label, kind)

    @property
    def degree(self) -> int:
        return self.poly.total_degree()

    def __str__(self):
        return str(self.poly)

    def scaled(self, c) -> "PlaneCurve":
        return PlaneCurve(self.poly * c, self.label, self.kind)

    def homogeneous_matrix(self):
        """Symmetric 3x3 matrix of a conic in the monomials (t, x, 1)."""
        if self.degree != 2:
            raise ValueError("only conics have a 3x3 symmetric matrix")
        c = lambda i, j: self.poly.terms.get((i, j), Fraction(0))  # noqa: E731
        half = Fraction(1, 2)
        return [
            [c(2, 0), c(1, 1) * half, c(1, 0) * half],
            [c(1, 1) * half, c(0, 2), c(0, 1) * half],
            [c(1, 0) * half, c(0, 1) * half, c(0, 0)],
        ]

    def is_smooth_conic(self) -> bool:
        if self.degree != 2:
            return False
        m = self.homogeneous_matrix()
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        return det != 0

    def proportional_to(self, other: "PlaneCurve") -> bool:
        """Same curve: the defining polynomials differ by a nonzero scalar."""
        a, b = self.poly, other.poly
        if set(a.terms) != set(b.terms):
            return False
        e = next(iter(a.terms))
        ratio = a.terms[e] / b.terms[e]
        return a == b * ratio

    def scale_factor(self, other: "PlaneCurve"):
        """``c`` with ``self = c * other``, or ``None``."""
        if not self.proportional_to(other):
            return None
        e = next(iter(self.poly.terms))
        return self.poly.terms[e] / other.poly.terms[e]
