"""Conic-line arrangements: chord constructions, intersection profiles, combinatorics checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import isqrt

from .algebra.fields import FunctionField
from .algebra.multipoly import MultiPoly, resultant
from .algebra.ratfunc import RationalFunction
from .algebra.unipoly import UniPoly, poly_gcd, rational_roots, squarefree_decomposition, squarefree_part
from .algebra.unipoly import resultant as uni_resultant
from .elliptic import CurvePoint, WeierstrassCurve
from .groebner import LexOrder, groebner
from .plane import PLANE_VARS, PlaneCurve


class ArrangementError(ValueError):
    pass


# chord points --------------------------------------------------------------------

def _rational_sqrt(c: Fraction):
    if c < 0:
        return None
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def chord_point(curve: WeierstrassCurve, ti, tj, sign: int = -1) -> CurvePoint:
    """The point over the line through (ti, ti^2) and (tj, tj^2).

    F((ti+tj)t - ti*tj) must equal c (t-ti)^2 (t-tj)^2 with c a rational
    square; the y-coordinate is d (t-ti)(t-tj) with d = sign * sqrt(c).
    """
    ti, tj = Fraction(ti), Fraction(tj)
    var = curve.field.var
    T = UniPoly.gen(var)
    xline = T * (ti + tj) - ti * tj
    sub = curve.F(RationalFunction(xline))
    if not sub.is_polynomial():
        raise ArrangementError("substitution is not a polynomial")
    g = sub.as_polynomial()
    sq = ((T - ti) * (T - tj)) ** 2
    q, r = divmod(g, sq)
    if r or q.degree > 0:
        raise ArrangementError(f"F along the chord is not c (t-{ti})^2 (t-{tj})^2: {g}")
    c = q.coeff(0)
    d = _rational_sqrt(c)
    if d is None or d == 0:
        raise ArrangementError(f"c = {c} is not a nonzero rational square")
    y = (T - ti) * (T - tj) * (d * sign)
    return curve.point(RationalFunction(xline), RationalFunction(y))


def weak_contact_x(curve: WeierstrassCurve, P: CurvePoint, Q: CurvePoint, sign: int = 1):
    """x-coordinate of P + (sign)Q from the chord slope: lambda^2 - A - x_P - x_Q.

    A is the x^2 coefficient of F; for F = (x - t^2)(x^2 + a1 x + a2) it is a1 - t^2.
    """
    if P.x == Q.x:
        raise ArrangementError("equal x-coordinates: slope undefined, use add_points")
    yQ = Q.y if sign > 0 else -Q.y
    lam = (yQ - P.y) / (Q.x - P.x)
    return lam * lam - curve.F.coeff(2) - P.x - Q.x


# projective intersection profiles ------------------------------------------------

@dataclass(frozen=True)
class Chart:
    """Affine chart given by T = t + p x, X = x, Z = q t + r x + 1 (unimodular)."""

    p: int = 0
    q: int = 0
    r: int = 0

    def transform(self, f: MultiPoly) -> MultiPoly:
        d = f.total_degree()
        t = MultiPoly.gen("t", PLANE_VARS)
        x = MultiPoly.gen("x", PLANE_VARS)
        T = t + x * self.p
        Z = t * self.q + x * self.r + 1
        out = MultiPoly.zero(PLANE_VARS)
        for (i, j), c in f.terms.items():
            out = out + (T ** i) * (x ** j) * (Z ** (d - i - j)) * c
        return out

    def to_original(self, t0, x0):
        """Projective coordinates [T : X : Z] of a chart point, normalised."""
        T, X, Z = t0 + self.p * x0, x0, self.q * t0 + self.r * x0 + 1
        for v in (Z, X, T):
            if v:
                return (T / v, X / v, Z / v)
        raise ArrangementError("zero point")


def chart_sequence(budget: int = 400):
    vals = [0, 1, -1, 2, -2, 3, -3, 4, -4]
    triples = sorted(product(vals, repeat=3), key=lambda c: (sum(abs(v) for v in c), vals.index(c[0]),
                                                          vals.index(c[1]), vals.index(c[2])))
    return [Chart(*c) for c in triples[:budget]]


def _eliminant(f: MultiPoly, g: MultiPoly):
    """Monic eliminant r(t) if <f, g> has shape {x - h(t), r(t)} in lex x > t, else None."""
    gb = groebner([f, g], LexOrder("x", "t"))
    els = gb.elements
    if len(els) == 1 and els[0].is_constant():
        return UniPoly.one("t")
    if len(els) != 2:
        return None
    h, r = els
    if h.degree("x") != 1 or h.coeffs_in("x").get(1) != 1:
        return None
    if r.degree("x") != 0:
        return None
    return r.to_uni("t")


def _chart_ok(chart: Chart, f: MultiPoly, g: MultiPoly):
    fs, gs = chart.transform(f), chart.transform(g)
    for h in (fs, gs):
        d = h.total_degree()
        if h.degree("x") != d or not h.coeffs_in("x")[d].is_constant():
            return None
    res = resultant(fs, gs, "x")
    bezout = f.total_degree() * g.total_degree()
    if res.is_zero():
        raise ArrangementError("the curves share a component")
    if res.degree("t") != bezout:
        return None
    r = _eliminant(fs, gs)
    if r is None or r.degree != bezout:
        return None
    return fs, gs, r


@dataclass
class ProfileEntry:
    labels: tuple
    bezout: int
    multiplicities: list
    factors: list  # (UniPoly in the chart coordinate, multiplicity)
    points: list  # (projective rational point, multiplicity)
    chart: Chart

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    def summary(self) -> str:
        ms = ",".join(str(m) for m in self.multiplicities)
        pts = "; ".join(f"{_fmt_point(P)} x{m}" for P, m in self.points)
        return f"{self.labels[0]}.{self.labels[1]}: bezout {self.bezout}, multiplicities [{ms}]" + (
            f", rational points {pts}" if pts else "")


def _fmt_point(P):
    T, X, Z = P
    if Z:
        return f"({T}, {X})"
    return f"[{T}:{X}:{Z}]"


def _profile_in_chart(f: PlaneCurve, g: PlaneCurve, chart: Chart, r: UniPoly, gs_pair):
    fs, gs = gs_pair
    mults, factors, points = [], [], []
    for fac, m in squarefree_decomposition(r):
        factors.append((fac, m))
        mults.extend([m] * fac.degree)
        for t0 in sorted(rational_roots(fac)):
            # recover x from the shape basis: x - h(t)
            common = poly_gcd(fs.subs({"t": t0}).to_uni("x"), gs.subs({"t": t0}).to_uni("x"))
            if common.degree != 1:
                raise ArrangementError("base point not determined")
            x0 = -common.coeff(0)
            points.append((chart.to_original(t0, x0), m))
    return ProfileEntry((f.label, g.label), f.degree * g.degree, sorted(mults), factors, points, chart)


def intersection_profile(f: PlaneCurve, g: PlaneCurve, charts=None) -> ProfileEntry:
    """Local intersection multiplicities of two plane curves in the projective plane."""
    for chart in charts or chart_sequence():
        ok = _chart_ok(chart, f.poly, g.poly)
        if ok is not None:
            fs, gs, r = ok
            return _profile_in_chart(f, g, chart, r, (fs, gs))
    raise ArrangementError(f"no admissible chart found for {f.label} and {g.label}")


def common_chart(curves, charts=None):
    """First chart admissible for every pair of ``curves``; returns (chart, {pair: data})."""
    for chart in charts or chart_sequence():
        data = {}
        for a, b in combinations(range(len(curves)), 2):
            ok = _chart_ok(chart, curves[a].poly, curves[b].poly)
            if ok is None:
                break
            data[(a, b)] = ok
        else:
            return chart, data
    raise ArrangementError("no chart is admissible for all pairs")


# combinatorics ----------------------------------------------------------------

@dataclass
class Arrangement:
    components: list

    def __post_init__(self):
        polys = [c.poly for c in self.components]
        for a, b in combinations(range(len(polys)), 2):
            if self.components[a].proportional_to(self.components[b]):
                raise ArrangementError(f"components {self.components[a].label} and "
                                       f"{self.components[b].label} coincide")

    def by_label(self, label: str) -> PlaneCurve:
        for c in self.components:
            if c.label == label:
                return c
        raise ArrangementError(f"no component labelled {label!r}")


@dataclass
class CombReport:
    clauses: dict = field(default_factory=dict)
    profiles: list = field(default_factory=list)
    chart: Chart | None = None

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    @property
    def verdict(self) -> str:
        if self.passed:
            return "Comb(C)"
        failed = [k for k, v in self.clauses.items() if not v]
        return "deviation: " + ", ".join(failed)


def _is_square_of_linear(r: UniPoly) -> UniPoly | None:
    dec = squarefree_decomposition(r)
    if len(dec) == 1 and dec[0][1] == 2 and dec[0][0].degree == 1:
        return dec[0][0]
    return None


def _squarefree_of_degree(r: UniPoly, n: int) -> bool:
    dec = squarefree_decomposition(r)
    return r.degree == n and all(m == 1 for _, m in dec)


def _unit_ideal(polys) -> bool:
    gb = groebner(polys, LexOrder("x", "t"))
    return gb.is_unit_ideal()


def verify_comb(arr: Arrangement) -> CombReport:
    """Check the combinatorial type: conics C1, C2, C3 and a line L as labelled."""
    try:
        C1, C2, C3, L = (arr.by_label(s) for s in ("C1", "C2", "C3", "L"))
    except ArrangementError as exc:
        raise ArrangementError(f"mislabelled arrangement: {exc}") from None
    rep = CombReport()
    cl = rep.clauses
    cl["C1, C2, C3 smooth conics"] = all(c.is_smooth_conic() for c in (C1, C2, C3))
    cl["L is a line"] = L.degree == 1
    if not (cl["C1, C2, C3 smooth conics"] and cl["L is a line"]):
        return rep
    curves = [C1, C2, C3, L]
    chart, data = common_chart(curves)
    rep.chart = chart
    r = {pair: d[2] for pair, d in data.items()}
    for pair, (fs, gs, rr) in data.items():
        rep.profiles.append(_profile_in_chart(curves[pair[0]], curves[pair[1]], chart, rr, (fs, gs)))
    cl["Bezout accounting"] = all(p.total == p.bezout for p in rep.profiles)

    r12 = r[(0, 1)]
    cl["C1.C2 four transversal points"] = _squarefree_of_degree(r12, 4)

    t1, t2, t3 = (chart.transform(c.poly) for c in (C1, C2, C3))
    r123 = _eliminant_of(t1, t2, t3)
    cl["C3 through exactly two of C1.C2"] = r123 is not None and _squarefree_of_degree(r123, 2)
    for k, label in ((0, "C1"), (1, "C2")):
        ok = False
        if cl["C3 through exactly two of C1.C2"]:
            q, rem = divmod(r[(k, 2)], r123)
            ell = _is_square_of_linear(q) if not rem else None
            ok = ell is not None and poly_gcd(ell, r123).degree == 0
        cl[f"C3 tangent to {label} away from C1.C2"] = ok
    cl["L tangent to C1"] = _is_square_of_linear(r[(0, 3)]) is not None
    cl["L tangent to C2"] = _is_square_of_linear(r[(1, 3)]) is not None
    cl["L transversal to C3"] = _squarefree_of_degree(r[(2, 3)], 2)
    tl = chart.transform(L.poly)
    cl["L avoids the other intersection points"] = all(
        _unit_ideal([tl, a, b]) for a, b in ((t1, t2), (t1, t3), (t2, t3)))
    return rep


def _eliminant_of(*polys):
    gb = groebner(list(polys), LexOrder("x", "t"))
    uni = [g for g in gb.elements if g.degree("x") == 0]
    if not uni:
        return None
    return uni[0].to_uni("t")


# families -----------------------------------------------------------------------

@dataclass(frozen=True)
class DegenerateSet:
    """Parameter values to avoid: explicit rationals plus roots of listed polynomials."""

    param: str
    values: frozenset
    polynomials: tuple

    def contains(self, value) -> bool:
        value = Fraction(value)
        return value in self.values or any(not p(value) for p in self.polynomials)

    def __str__(self):
        parts = []
        if self.values:
            parts.append(f"{self.param} in {{" + ", ".join(str(v) for v in sorted(self.values)) + "}")
        parts += [f"{p} = 0" for p in self.polynomials]
        return " or ".join(parts)

    def witnessed(self, locus) -> dict:
        """For each listed value and polynomial, whether it meets the computed ``locus``."""
        out = {}
        for v in sorted(self.values):
            out[str(v)] = any(not q(v) for q in locus)
        for p in self.polynomials:
            out[f"{p} = 0"] = any(poly_gcd(q, p).degree > 0 for q in locus)
        return out


class Family:
    def __init__(self, name: str, param: str, text: str, degenerate: DegenerateSet, kind: str = ""):
        from .algebra.parse import parse_poly

        self.name = name
        self.param = param
        self.text = text
        self.poly = parse_poly(text, (param,) + PLANE_VARS)
        self.degenerate = degenerate
        self.kind = kind

    def __call__(self, value, allow_degenerate: bool = False) -> PlaneCurve:
        value = Fraction(value)
        if not allow_degenerate and self.degenerate.contains(value):
            raise ArrangementError(f"{self.name} is degenerate at {self.param} = {value}")
        p = self.poly.subs({self.param: value}).in_vars(PLANE_VARS)
        curve = PlaneCurve(p, f"{self.name}({value})")
        if not allow_degenerate and curve.degree == 2 and not curve.is_smooth_conic():
            raise ArrangementError(f"{self.name} is singular at {self.param} = {value}")
        return curve

    def _coefficient(self, i: int, j: int) -> UniPoly:
        """Coefficient of t^i x^j as a polynomial in the parameter."""
        terms = {}
        for e, c in self.poly.terms.items():
            if e[1:] == (i, j):
                terms[e[0]] = c
        if not terms:
            return UniPoly.zero(self.param)
        return UniPoly([terms.get(k, Fraction(0)) for k in range(max(terms) + 1)], self.param)

    def singular_locus(self) -> UniPoly:
        """Squarefree polynomial whose roots are the parameters of singular members.

        For conics this is the determinant of the symmetric matrix; for lines,
        the parameters where both linear coefficients vanish.
        """
        deg = max(sum(e[1:]) for e in self.poly.terms)
        c = self._coefficient
        if deg == 1:
            return squarefree_part(poly_gcd(c(1, 0), c(0, 1)))
        half = Fraction(1, 2)
        m = [[c(2, 0), c(1, 1) * half, c(1, 0) * half],
             [c(1, 1) * half, c(0, 2), c(0, 1) * half],
             [c(1, 0) * half, c(0, 1) * half, c(0, 0)]]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det.is_zero():
            raise ArrangementError(f"every member of {self.name} is singular")
        return squarefree_part(det)

    def uncovered_singularities(self) -> UniPoly:
        """Part of the singular locus not accounted for by the listed degenerate set."""
        rest = self.singular_locus()
        X = UniPoly.gen(self.param)
        for v in self.degenerate.values:
            while rest.degree > 0 and not rest(v):
                rest = rest.exact_div(X - v)
        for p in self.degenerate.polynomials:
            g = poly_gcd(rest, p)
            if g.degree > 0:
                rest = rest.exact_div(g)
        return rest.monic()


def _in_param(r: MultiPoly, param: str, var: str) -> UniPoly:
    K = FunctionField(param)
    cs = r.coeffs_in(var)
    return UniPoly([K(cs[k].to_uni(param)) if k in cs else K.zero for k in range(max(cs) + 1)], var, K)


def _pair_locus(f: MultiPoly, g: MultiPoly, param: str) -> list:
    """Parameter polynomials where the intersection pattern of f and g can change.

    The eliminant of f, g is split into squarefree parts over Q(param); the
    pattern is stable away from the zeros of its leading coefficient, of each
    part's discriminant and of the resultants between parts.
    """
    var, r = "t", None
    if f.degree("x") > 0 and g.degree("x") > 0:
        r = resultant(f, g, "x")
    if r is None or r.degree("t") <= 0:
        var = "x"
        r = resultant(f, g, "t")
    if r.is_zero() or r.degree(var) <= 0:
        return []
    R = _in_param(r, param, var)
    parts = [h for h, _ in squarefree_decomposition(R)]
    vals = [R.lc]
    vals += [uni_resultant(h, h.derivative()) for h in parts if h.degree > 1]
    vals += [uni_resultant(h, k) for h, k in combinations(parts, 2)]
    out = []
    for v in vals:
        out += [v.num, v.den]
    return out


def degeneracy_locus(members, param: str) -> list:
    """Squarefree polynomials in ``param`` containing every value where the arrangement degenerates.

    ``members`` are Families or fixed PlaneCurves; the locus collects singular
    members and the pairwise changes found by ``_pair_locus``. The result is a
    superset of the true bad set; it is meant for checking that a listed
    exceptional value is genuinely exceptional.
    """
    polys, locus = [], []
    for m in members:
        if isinstance(m, Family):
            polys.append(m.poly)
            locus.append(m.singular_locus())
        else:
            polys.append(m.poly.in_vars((param,) + PLANE_VARS))
    for f, g in combinations(polys, 2):
        locus += _pair_locus(f, g, param)
    return [squarefree_part(q).monic() for q in locus if not q.is_zero() and q.degree > 0]


def table1_check(families: dict, bitangents: dict, conics: dict, printed: dict, params=(-2, -1, 0, 1)):
    """Compare the line and conic families at special parameters with named curves.

    ``bitangents`` and ``conics`` map names to PlaneCurves; ``printed`` holds the
    expected cell labels ``printed[row][b]``.
    """
    rows = sorted(k for k in printed if k != "D3b")
    report = {"columns": {}, "set_equality": True, "conic_match": True, "mismatches": []}
    found = {}
    for b in params:
        col = {}
        for row in rows:
            curve = families[row](b, allow_degenerate=True)
            col[row] = next((n for n, L in bitangents.items() if curve.proportional_to(L)), None)
        d = families["D3b"](b, allow_degenerate=True)
        dname = next((n for n, C in conics.items() if d.proportional_to(C)), None)
        col["D3b"] = dname
        set_ok = sorted(filter(None, (col[r] for r in rows))) == sorted(bitangents)
        report["set_equality"] &= set_ok
        report["conic_match"] &= dname is not None
        report["columns"][b] = {"cells": col, "set_equality": set_ok}
        found[b] = col
        for row in rows + ["D3b"]:
            exp = printed[row][str(b)] if str(b) in printed[row] else printed[row][b]
            if col[row] != exp:
                report["mismatches"].append((row, b, exp, col[row]))
    # the relabelling of the bitangents that best explains the printed table
    names = sorted(bitangents)
    best = None
    for perm in permutations(names):
        ren = dict(zip(names, perm))
        bad = [(row, b) for b in params for row in rows
               if ren[found[b][row]] != (printed[row][str(b)] if str(b) in printed[row] else printed[row][b])]
        if best is None or len(bad) < len(best[1]):
            best = (ren, bad)
    report["best_relabelling"] = {"mapping": best[0], "remaining_mismatches": best[1]}
    return report
