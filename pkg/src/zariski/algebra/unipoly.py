"""Dense univariate polynomials over an exact field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .fields import QQ


def format_terms(terms) -> str:
    """Join ``(coeff, monomial, field)`` triples into canonical text.

    ``monomial`` is ``""`` for the constant term. Coefficients equal to one
    are omitted in front of a monomial; negative rational coefficients are
    turned into a subtraction.
    """
    out = []
    for coeff, mono, field in terms:
        if not isinstance(coeff, Fraction) and coeff.is_constant():
            coeff = coeff.constant_value()
        if isinstance(coeff, Fraction):
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            neg = False
            text = field.format(coeff)
            atomic = field.is_atomic(coeff)
            if mono and coeff == field.one:
                body = mono
            elif mono:
                body = (text if atomic else f"({text})") + f"*{mono}"
            else:
                body = text if atomic else f"({text})"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


class UniPoly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of ``var**i``."""

    __slots__ = ("coeffs", "var", "field")

    def __init__(self, coeffs=(), var: str = "x", field=QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.field = field

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, coeffs, var, field):
        p = object.__new__(cls)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p.coeffs = tuple(cs)
        p.var = var
        p.field = field
        return p

    @classmethod
    def gen(cls, var: str = "x", field=QQ) -> "UniPoly":
        return cls._raw((field.zero, field.one), var, field)

    @classmethod
    def constant(cls, c, var: str = "x", field=QQ) -> "UniPoly":
        return cls._raw((field(c),), var, field)

    @classmethod
    def one(cls, var: str = "x", field=QQ) -> "UniPoly":
        return cls._raw((field.one,), var, field)

    @classmethod
    def zero(cls, var: str = "x", field=QQ) -> "UniPoly":
        return cls._raw((), var, field)

    @classmethod
    def from_roots(cls, roots, var: str = "x", field=QQ) -> "UniPoly":
        p = cls.one(var, field)
        x = cls.gen(var, field)
        for r in roots:
            p = p * (x - r)
        return p

    # basic properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) or not hasattr(other, "coeffs"):
            try:
                c = self.field(other)
            except (TypeError, ValueError):
                return NotImplemented
            return self.coeffs == ((c,) if c else ())
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"UniPoly({str(self)!r}, var={self.var!r})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            terms.append((c, mono, self.field))
        return format_terms(terms)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return UniPoly._raw((self.field(other),), self.var, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(out, self.var, self.field)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.var, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw((), self.var, self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly._raw(out, self.var, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.one(self.var, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = self.field(c)
        return UniPoly._raw([x * c for x in self.coeffs], self.var, self.field)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        inv = self.field.one / other.lc
        q = [self.field.zero] * max(len(r) - db, 0)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if not c:
                continue
            c = c * inv
            q[k] = c
            for j, cb in enumerate(other.coeffs):
                r[k + j] = r[k + j] - c * cb
        return (UniPoly._raw(q, self.var, self.field),
                UniPoly._raw(r[:db] if db > 0 else [], self.var, self.field))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other) -> bool:
        return not (other % self)

    # calculus and composition ------------------------------------------
    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may be any compatible ring element."""
        if not self.coeffs:
            return self.field.zero * 1 if not hasattr(value, "coeffs") else value * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        if len(self.coeffs) == 1 and hasattr(value, "coeffs"):
            acc = value * 0 + acc
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.var, self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = self.field.one / self.lc
        return UniPoly._raw([c * inv for c in self.coeffs], self.var, self.field)

    def map_coeffs(self, fn, field=None, var=None) -> "UniPoly":
        field = field or self.field
        return UniPoly._raw([field(fn(c)) for c in self.coeffs], var or self.var, field)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: UniPoly, b: UniPoly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.one(a.var, a.field), UniPoly.zero(a.var, a.field)
    t0, t1 = UniPoly.zero(a.var, a.field), UniPoly.one(a.var, a.field)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = a.field.one / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_decomposition(p: UniPoly):
    """Yun's algorithm over a field of characteristic zero.

    Returns ``[(f_i, m_i), ...]`` with ``f_i`` monic, squarefree, pairwise coprime,
    nonconstant and ``m_i`` strictly increasing, such that
    ``p = lc(p) * prod f_i**m_i``.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.monic().exact_div(a)
    c = dp.scale(p.field.one / p.lc).exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    part = UniPoly.one(p.var, p.field)
    for f, _ in squarefree_decomposition(p):
        part = part * f
    return part


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of two univariate polynomials over a field (Euclidean route)."""
    if f.is_zero() or g.is_zero():
        return f.field.zero
    field = f.field
    res = field.one
    a, b = f, g
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc ** da
        r = a % b
        if r.is_zero():
            return field.zero
        if da % 2 == 1 and db % 2 == 1:
            res = -res
        res = res * b.lc ** (da - r.degree)
        a, b = b, r


def _integer_coefficients(p: UniPoly):
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: UniPoly):
    """All rational roots of a nonzero polynomial over Q, as a set of Fractions."""
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    if p.field != QQ:
        raise TypeError("rational_roots requires a polynomial over QQ")
    if p.degree <= 0:
        return set()
    q = squarefree_part(p)
    roots = set()
    ints = _integer_coefficients(q)
    # strip the factor x^k first so the constant term is nonzero
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) == 1:
        return roots
    lead, const = ints[-1], ints[0]
    for num in _divisors(const):
        for den in _divisors(lead):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if not q(cand):
                    roots.add(cand)
    return roots
