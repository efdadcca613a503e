"""Sparse multivariate polynomials over an exact field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import QQ
from .unipoly import UniPoly, format_terms


def print_key(exps):
    """Canonical print order: total degree, then lex with the last variable highest."""
    return (sum(exps), tuple(reversed(exps)))


class MultiPoly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("terms", "vars", "field", "_hash")

    def __init__(self, terms=None, vars=("x",), field=QQ):
        self.vars = tuple(vars)
        self.field = field
        out = {}
        n = len(self.vars)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match variables {self.vars}")
            c = field(c)
            if c:
                out[exps] = out[exps] + c if exps in out else c
                if not out[exps]:
                    del out[exps]
        self.terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms, vars, field):
        p = object.__new__(cls)
        p.terms = terms
        p.vars = vars
        p.field = field
        p._hash = None
        return p

    # construction -------------------------------------------------------
    @classmethod
    def gen(cls, var: str, vars, field=QQ) -> "MultiPoly":
        vars = tuple(vars)
        exps = tuple(1 if v == var else 0 for v in vars)
        if var not in vars:
            raise ValueError(f"unknown variable {var!r}")
        return cls._raw({exps: field.one}, vars, field)

    @classmethod
    def constant(cls, c, vars, field=QQ) -> "MultiPoly":
        vars = tuple(vars)
        c = field(c)
        return cls._raw({(0,) * len(vars): c} if c else {}, vars, field)

    @classmethod
    def zero(cls, vars, field=QQ) -> "MultiPoly":
        return cls._raw({}, tuple(vars), field)

    @classmethod
    def from_uni(cls, p: UniPoly, vars=None) -> "MultiPoly":
        vars = tuple(vars or (p.var,))
        i = vars.index(p.var)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                e = [0] * len(vars)
                e[i] = k
                terms[tuple(e)] = c
        return cls._raw(terms, vars, p.field)

    # properties ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.vars), self.field.zero)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self == MultiPoly.constant(c, self.vars, self.field)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={self.vars!r})"

    def monomial_str(self, exps) -> str:
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        keys = sorted(self.terms, key=print_key, reverse=True)
        return format_terms((self.terms[e], self.monomial_str(e), self.field) for e in keys)

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, UniPoly):
            return MultiPoly.from_uni(other, self.vars)
        return MultiPoly.constant(other, self.vars, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return MultiPoly._raw(out, self.vars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (MultiPoly, UniPoly)):
            c = self.field(other)
            if not c:
                return MultiPoly.zero(self.vars, self.field)
            return MultiPoly._raw({e: v * c for e, v in self.terms.items()}, self.vars, self.field)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c}, self.vars, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, exps, c) -> "MultiPoly":
        return MultiPoly._raw(
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
            self.vars, self.field,
        )

    def derivative(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly._raw(terms, self.vars, self.field)

    # structure -----------------------------------------------------------
    def coeffs_in(self, var: str) -> dict:
        """Coefficients with respect to ``var`` as polynomials in the same ring."""
        i = self.vars.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly._raw(t, self.vars, self.field) for k, t in out.items()}

    def to_uni(self, var: str | None = None) -> UniPoly:
        used = self.used_vars()
        if var is None:
            if len(used) > 1:
                raise ValueError(f"{self} is not univariate")
            var = used[0] if used else self.vars[0]
        elif any(v != var for v in used):
            raise ValueError(f"{self} is not univariate in {var}")
        i = self.vars.index(var)
        deg = self.degree(var)
        cs = [self.field.zero] * (deg + 1)
        for e, c in self.terms.items():
            cs[e[i]] = c
        return UniPoly(cs, var, self.field)

    def in_vars(self, vars) -> "MultiPoly":
        """Re-embed into a ring with another variable list (must cover the used variables)."""
        vars = tuple(vars)
        idx = []
        for v in self.vars:
            idx.append(vars.index(v) if v in vars else None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for k, i in enumerate(idx):
                if e[k]:
                    if i is None:
                        raise ValueError(f"variable {self.vars[k]} not in {vars}")
                    ne[i] = e[k]
            out[tuple(ne)] = c
        return MultiPoly._raw(out, vars, self.field)

    def subs(self, mapping: dict) -> "MultiPoly":
        """Substitute polynomials (same ring) or scalars for variables."""
        vals = []
        for v in self.vars:
            if v in mapping:
                val = mapping[v]
                vals.append(val if isinstance(val, MultiPoly) else MultiPoly.constant(val, self.vars, self.field))
            else:
                vals.append(MultiPoly.gen(v, self.vars, self.field))
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = vals[i] ** k
            return cache[key]

        result = MultiPoly.zero(self.vars, self.field)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, self.vars, self.field)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point: dict):
        """Evaluate at scalar values for every variable."""
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * self.field(point[v]) ** k
            total = total + term
        return total

    def map_coeffs(self, fn, field=None) -> "MultiPoly":
        field = field or self.field
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.vars, field)

    def leading(self, key):
        """``(exponents, coefficient)`` of the term maximal under ``key``."""
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self, key=print_key) -> "MultiPoly":
        if not self.terms:
            return self
        _, c = self.leading(key)
        return self * (self.field.one / c)

    def primitive(self, key=print_key) -> "MultiPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient (over Q)."""
        if self.field != QQ:
            raise TypeError("primitive form needs rational coefficients")
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        scale = Fraction(den, g)
        if self.leading(key)[1] < 0:
            scale = -scale
        return self * scale

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        key = lambda e: e  # noqa: E731  lex in declared variable order
        le, lc = other.leading(key)
        inv = self.field.one / lc
        rem = self
        quo = {}
        while rem.terms:
            e, c = rem.leading(key)
            d = tuple(a - b for a, b in zip(e, le))
            if any(k < 0 for k in d):
                raise ArithmeticError(f"{other} does not divide {self}")
            q = c * inv
            quo[d] = q
            rem = rem - other.mul_term(d, q)
        return MultiPoly._raw(quo, self.vars, self.field)


def _bareiss_det(matrix):
    n = len(matrix)
    if n == 0:
        return None
    m = [row[:] for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else num.exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str):
    m, n = f.degree(var), g.degree(var)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    zero = MultiPoly.zero(f.vars, f.field)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = fc.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = gc.get(k, zero)
        rows.append(row)
    return rows


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant with respect to ``var``: fraction-free determinant of the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if g.vars != f.vars:
        raise ValueError("operands live in different rings")
    m, n = f.degree(var), g.degree(var)
    if m == 0 and n == 0:
        return MultiPoly.constant(1, f.vars, f.field)
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return _bareiss_det(sylvester_matrix(f, g, var))
