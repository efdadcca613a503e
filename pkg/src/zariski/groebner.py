"""Buchberger's algorithm for lexicographic orders.

Polynomials are handled internally as dictionaries keyed by exponent tuples
permuted into order position, so that the lex comparison is plain tuple
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra.multipoly import MultiPoly


class _Infinite:
    """Marker for a quotient ring of infinite dimension."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__


INFINITE = _Infinite()


@dataclass(frozen=True)
class LexOrder:
    """Pure lexicographic order; ``variables`` lists the highest variable first."""

    variables: tuple

    def __init__(self, *variables):
        if len(variables) == 1 and not isinstance(variables[0], str):
            variables = tuple(variables[0])
        if len(set(variables)) != len(variables):
            raise ValueError("repeated variable in order")
        object.__setattr__(self, "variables", tuple(variables))

    def __str__(self):
        return "lex(" + " > ".join(self.variables) + ")"

    def key(self, ring_vars):
        """Sort key on exponent tuples of a ring with variables ``ring_vars``."""
        idx = self._perm(ring_vars)
        return lambda e: tuple(e[i] for i in idx)

    def _perm(self, ring_vars):
        ring_vars = tuple(ring_vars)
        if sorted(ring_vars) != sorted(self.variables):
            raise ValueError(f"order {self} does not match ring variables {ring_vars}")
        return [ring_vars.index(v) for v in self.variables]


@dataclass(frozen=True)
class GroebnerBasis:
    order: LexOrder
    elements: tuple
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"

    def leading_monomials(self):
        key = self.order.key(self.elements[0].vars) if self.elements else None
        return [g.leading(key)[0] for g in self.elements]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)


# internal dictionary arithmetic ------------------------------------------------

def _to_internal(p: MultiPoly, perm):
    return {tuple(e[i] for i in perm): c for e, c in p.terms.items()}


def _from_internal(d, perm, vars, field):
    n = len(perm)
    terms = {}
    for k, c in d.items():
        e = [0] * n
        for pos, i in enumerate(perm):
            e[i] = k[pos]
        terms[tuple(e)] = c
    return MultiPoly._raw(terms, vars, field)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _monic(d, one):
    lm = max(d)
    inv = one / d[lm]
    return {k: c * inv for k, c in d.items()}


def _sub_multiple(f, g, shift, c):
    """f - c * x^shift * g, in place on a copy of f."""
    out = dict(f)
    for k, v in g.items():
        m = tuple(a + b for a, b in zip(k, shift))
        val = out.get(m)
        new = -(v * c) if val is None else val - v * c
        if new:
            out[m] = new
        else:
            out.pop(m, None)
    return out


def _normal_form(f, basis, one):
    """Full reduction of ``f`` by monic polynomials ``basis`` (list of (lm, dict))."""
    rem = {}
    f = dict(f)
    while f:
        lm = max(f)
        c = f[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                f = _sub_multiple(f, g, _sub(lm, glm), c)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def _spoly(f, flm, g, glm):
    l = _lcm(flm, glm)
    shift = _sub(l, flm)
    a = {tuple(x + y for x, y in zip(k, shift)): v for k, v in f.items()}
    return _sub_multiple(a, g, _sub(l, glm), 1)


def _buchberger_internal(polys, one):
    basis = []  # list of (lm, monic dict)
    pairs = set()
    for p in polys:
        if not p:
            continue
        p = _monic(p, one)
        basis.append((max(p), p))
    n0 = len(basis)
    pairs = {(i, j) for i in range(n0) for j in range(i + 1, n0)}

    def criteria_skip(i, j):
        li, lj = basis[i][0], basis[j][0]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            return True  # coprime leading monomials
        l = _lcm(li, lj)
        for k in range(len(basis)):
            if k in (i, j) or basis[k] is None:
                continue
            if _divides(basis[k][0], l):
                ik = (min(i, k), max(i, k))
                jk = (min(j, k), max(j, k))
                if ik not in pairs and jk not in pairs:
                    return True
        return False

    while pairs:
        # normal strategy: smallest lcm first, ties by index for determinism
        i, j = min(pairs, key=lambda ij: (_lcm(basis[ij[0]][0], basis[ij[1]][0]), ij))
        pairs.discard((i, j))
        if criteria_skip(i, j):
            continue
        s = _spoly(basis[i][1], basis[i][0], basis[j][1], basis[j][0])
        r = _normal_form(s, basis, one)
        if not r:
            continue
        r = _monic(r, one)
        k = len(basis)
        basis.append((max(r), r))
        pairs |= {(m, k) for m in range(k)}
        if not any(max(r)):
            break  # the unit ideal
    return basis


def _reduce_internal(basis, one):
    basis = [(lm, _monic(p, one)) for lm, p in basis if p]
    if any(not any(lm) for lm, _ in basis):
        return [(tuple(0 for _ in basis[0][0]), {tuple(0 for _ in basis[0][0]): one})]
    # drop elements whose leading monomial is divisible by another's
    basis.sort(key=lambda t: t[0])
    minimal = []
    for lm, p in basis:
        if any(_divides(m, lm) for m, _ in minimal):
            continue
        minimal = [(m, q) for m, q in minimal if not _divides(lm, m)]
        minimal.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(minimal):
        others = [t for k, t in enumerate(minimal) if k != idx]
        r = _normal_form(p, others, one)
        out.append((max(r), _monic(r, one)))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


# public API --------------------------------------------------------------------

def _setup(polys, order):
    polys = [p for p in polys]
    if not polys:
        raise ValueError("empty generator set")
    vars = polys[0].vars
    field = polys[0].field
    for p in polys:
        if p.vars != vars:
            raise ValueError("generators live in different rings")
    return vars, field, order._perm(vars)


def buchberger(polys, order: LexOrder) -> GroebnerBasis:
    """A (not necessarily reduced) Gröbner basis of the ideal generated by ``polys``."""
    vars, field, perm = _setup(polys, order)
    basis = _buchberger_internal([_to_internal(p, perm) for p in polys], field.one)
    elems = tuple(_from_internal(p, perm, vars, field) for _, p in basis)
    if not elems:
        elems = (MultiPoly.zero(vars, field),)
    return GroebnerBasis(order, elems, False)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The reduced basis: monic, minimal and autoreduced, sorted by decreasing leading term."""
    elems = [g for g in gb.elements if not g.is_zero()]
    if not elems:
        return GroebnerBasis(gb.order, tuple(gb.elements[:1]), True)
    vars, field, perm = _setup(elems, gb.order)
    red = _reduce_internal([(max(d), d) for d in (_to_internal(p, perm) for p in elems)], field.one)
    return GroebnerBasis(gb.order, tuple(_from_internal(p, perm, vars, field) for _, p in red), True)


def groebner(polys, order: LexOrder) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``polys``."""
    return reduce_basis(buchberger(polys, order))


def normal_form(p: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    elems = [g for g in gb.elements if not g.is_zero()]
    if not elems:
        return p
    vars, field, perm = _setup([p] + elems, gb.order)
    basis = [(max(d), _monic(d, field.one)) for d in (_to_internal(g, perm) for g in elems)]
    return _from_internal(_normal_form(_to_internal(p, perm), basis, field.one), perm, vars, field)


def contains(gb: GroebnerBasis, p: MultiPoly) -> bool:
    return normal_form(p, gb).is_zero()


def spoly_criterion_holds(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of basis elements reduces to zero."""
    elems = [g for g in gb.elements if not g.is_zero()]
    if not elems:
        return True
    vars, field, perm = _setup(elems, gb.order)
    basis = [(max(d), _monic(d, field.one)) for d in (_to_internal(g, perm) for g in elems)]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = _spoly(basis[i][1], basis[i][0], basis[j][1], basis[j][0])
            if _normal_form(s, basis, field.one):
                return False
    return True


def quotient_dimension(gb: GroebnerBasis):
    """Number of standard monomials, or ``INFINITE``."""
    elems = [g for g in gb.elements if not g.is_zero()]
    if not elems:
        return INFINITE
    vars, field, perm = _setup(elems, gb.order)
    lms = [max(_to_internal(g, perm)) for g in elems]
    n = len(perm)
    if any(not any(m) for m in lms):
        return 0
    bounds = []
    for v in range(n):
        pure = [m[v] for m in lms if all(m[w] == 0 for w in range(n) if w != v)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for mono in product(*(range(b) for b in bounds)):
        if not any(_divides(m, mono) for m in lms):
            count += 1
    return count


def same_ideal(a, b, order: LexOrder) -> bool:
    """Ideal equality by comparing reduced bases."""
    return groebner(list(a), order).elements == groebner(list(b), order).elements
