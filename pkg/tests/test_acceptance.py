"""End-to-end acceptance checks, one test per criterion.

Each test is tagged with ``pytest.mark.criterion(n, title)``; the conftest hook
prints a PASS/FAIL line per criterion at the end of the run.
"""

import itertools
import random
from fractions import Fraction

import pytest

from zariski.algebra import MultiPoly, parse_poly, print_poly
from zariski.arrangement import table1_check, verify_comb
from zariski.data import (combination_points, expected_points, load_arrangement, load_curve, load_families,
                          load_lattice, load_presentation, load_script)
from zariski.elliptic import (O, DivisorError, SemiReducedDivisor, add_points, curve_from_point,
                              linear_combination, mumford_basis, mumford_of_divisor, mumford_via_groebner, negate)
from zariski.fixtures import load_fixture
from zariski.fpgroup import abelianize, determinant, is_target_form, matmul, smith_normal_form, verify_simplification
from zariski.groebner import LexOrder, groebner, spoly_criterion_holds
from zariski.heightlattice import height, section_intersection, splitting_type_via_lattice
from zariski.plane import PlaneCurve
from zariski.reproduce import family_loci
from zariski.splitting import SPLIT_ORDER, parse_basis, primitive_form, splitting_type_via_groebner

OTHERS = ("Q1", "Q2", "Q3", "Q4")


@pytest.mark.criterion(1, "construction of the sections and their curves")
def test_criterion_1_construction():
    doc = load_fixture("paper-Q")
    curve, pts = load_curve(doc)
    basis = [pts[n] for n in doc["basis"]]
    expected = expected_points(doc)
    got = {}
    for name, coeffs in doc["combos"].items():
        got[name] = linear_combination(curve, basis, coeffs)
        assert got[name] == expected[name], name
    assert set(got) == {"Q0", "Q0'", "Q1", "Q2", "Q3", "Q4"}
    for label, (pname, text) in doc["curves"].items():
        assert curve_from_point(got[pname], label) == PlaneCurve.parse(text, label), label
    assert len(doc["curves"]) == 6


@pytest.mark.criterion(2, "splitting types from reduced Groebner bases")
def test_criterion_2_splitting_via_groebner():
    doc = load_fixture("paper-splitting")
    pts = combination_points(doc["curve"])
    dims = {}
    for i, other in doc["others"].items():
        res = splitting_type_via_groebner(pts[doc["base"]], pts[other], doc["base_sign"])
        for key in "+-":
            assert primitive_form(res.bases[key].elements) == primitive_form(parse_basis(doc["printed"][i][key]))
        dims[i] = (res.dims, tuple(res.type))
    assert dims == {"1": ((0, 2), (0, 2)), "2": ((0, 2), (0, 2)),
                    "3": ((1, 1), (1, 1)), "4": ((1, 1), (1, 1))}


@pytest.mark.criterion(3, "splitting types from the height pairing")
def test_criterion_3_splitting_via_lattice():
    fx = load_lattice()
    pts = combination_points()
    heights = [height(fx.basis, fx.combos["Q0"], fx.combos[o]) for o in OTHERS]
    inters = [section_intersection(fx.basis, fx.fibers, "Q0", o, fx.combos, fx.sO) for o in OTHERS]
    assert heights == [1, 1, 0, 0]
    assert inters == [0, 0, 1, 1]
    for o in OTHERS:
        assert splitting_type_via_lattice(fx, o) == tuple(splitting_type_via_groebner(pts["Q0"], pts[o]).type)


def _relabel(*curves):
    from zariski.arrangement import Arrangement

    return Arrangement([PlaneCurve(c.poly, lab) for c, lab in zip(curves, ("C1", "C2", "C3", "L"))])


def _comb_ok(arr):
    rep = verify_comb(arr)
    assert rep.clauses["Bezout accounting"]
    assert all(p.total == p.bezout for p in rep.profiles)
    return rep.passed


@pytest.mark.criterion(4, "combinatorial type of the instances and family samples")
def test_criterion_4_combinatorics():
    for i in range(1, 5):
        assert _comb_ok(load_arrangement(f"paper-C{i}")), i
    doc = load_fixture("symmetric-Q")
    fams, conics, bitangents, _ = load_families(doc)
    for a in doc["samples"]["a"]:
        for fam in ("C3a", "C3pa"):
            for L in bitangents.values():
                assert _comb_ok(_relabel(conics["C1"], conics["C2"], fams[fam](a), L)), (fam, a, L.label)
    for b in doc["samples"]["b"]:
        for i in range(1, 5):
            arr = _relabel(conics["C1"], fams["C2b"](b), fams["D3b"](b), fams[f"L{i}b"](b))
            assert _comb_ok(arr), (b, i)


@pytest.mark.criterion(5, "special members and exceptional parameters of the families")
def test_criterion_5_table_and_families():
    fams, conics, bitangents, table = load_families()
    printed = {k: v for k, v in table.items() if k != "params"}
    rep = table1_check(fams, bitangents, conics, printed, (-2, -1, 0, 1))
    assert rep["set_equality"]
    for b in (-2, -1, 0, 1):
        cells = rep["columns"][b]["cells"]
        assert sorted(cells[r] for r in ("L1b", "L2b", "L3b", "L4b")) == ["L1", "L2", "L3", "L4"]
        assert cells["D3b"] == printed["D3b"][str(b)]
        assert conics[cells["D3b"]].proportional_to(fams["D3b"](b, allow_degenerate=True))
    # the b = 0 column is a permutation of the printed one, reported rather than hidden
    zero = {row: (exp, got) for row, b, exp, got in rep["mismatches"] if b == 0}
    assert zero == {"L1b": ("L1", "L3"), "L2b": ("L2", "L4"), "L3b": ("L3", "L1"), "L4b": ("L4", "L2")}
    for name, locus in family_loci(fams, conics, bitangents).items():
        witnessed = fams[name].degenerate.witnessed(locus)
        assert all(witnessed.values()), (name, witnessed)


@pytest.mark.criterion(6, "fundamental group presentations")
def test_criterion_6_fundamental_groups():
    for name in ("C1", "C3"):
        assert abelianize(load_presentation(f"pi1-{name}")) == (3, [])
        p, moves = load_script(f"pi1-{name}-script")
        res = verify_simplification(p, moves)
        assert res.passed, res.error
        assert is_target_form(res.presentation)
        assert [s.step for s in res.steps] == list(range(1, len(moves) + 1))


# criterion 7: property suites -----------------------------------------------------------

def _group_axioms(curve, pts):
    S = [O] + list(pts.values()) + [negate(curve, P) for P in pts.values() if P.y != 0]
    memo = {}

    def add(P, Q):
        if (P, Q) not in memo:
            memo[P, Q] = add_points(curve, P, Q)
        return memo[P, Q]

    for P in S:
        assert add(P, O) == P and add(P, negate(curve, P)) == O
    for P, Q in itertools.product(S, repeat=2):
        assert add(P, Q) == add(Q, P) and curve.on_curve(add(P, Q))
    for P, Q, R in itertools.product(S, repeat=3):
        assert add(add(P, Q), R) == add(P, add(Q, R))


def _mumford_routes(curve, pts, rng, count):
    names = ("P12", "P23", "P31")
    pool = [linear_combination(curve, [pts[n] for n in names], cs, T)
            for cs in itertools.product((-1, 0, 1), repeat=3) for T in (None, pts["T"])]
    pool = [P for P in pool if not P.is_infinity]
    disc = curve.discriminant()
    bases, checked = [], 0
    while checked < count:
        t0 = Fraction(rng.randint(-60, 60), rng.randint(1, 6))
        if not disc(t0) or any(not P.x.den(t0) for P in pool):
            continue
        E = curve.specialize(t0)
        P, Q = (curve.specialize_point(rng.choice(pool), t0) for _ in range(2))
        try:
            d = SemiReducedDivisor([(P, 1), (Q, 1)])
        except DivisorError:
            continue
        gb = mumford_via_groebner(E, d)
        assert mumford_basis(mumford_of_divisor(E, d)).elements == gb.elements
        bases.append(gb)
        checked += 1
    return bases


def _random_poly(rng, vars):
    p = MultiPoly.zero(vars)
    for _ in range(rng.randint(0, 5)):
        m = MultiPoly.constant(Fraction(rng.randint(-50, 50), rng.randint(1, 12)), vars)
        for v in vars:
            m = m * MultiPoly.gen(v, vars) ** rng.randint(0, 3)
        p = p + m
    return p


def _snf_checks(rng, count):
    for _ in range(count):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        res = smith_normal_form(A)
        assert matmul(matmul(res.U, A), res.V) == res.D
        assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
        assert all(res.D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
        diag = res.diagonal
        assert all(d >= 0 for d in diag)
        for d1, d2 in zip(diag, diag[1:]):
            assert d2 == 0 if d1 == 0 else d2 % d1 == 0


@pytest.mark.criterion(7, "property suites")
def test_criterion_7_property_suites():
    rng = random.Random(7)
    curve, pts = load_curve("paper-Q")
    _group_axioms(curve, pts)

    bases = _mumford_routes(curve, pts, rng, 100)
    qp = combination_points()
    for o in OTHERS:
        bases += splitting_type_via_groebner(qp["Q0"], qp[o]).bases.values()
    for i in range(1, 5):
        for s in "+-":
            bases.append(groebner(parse_basis(load_fixture(f"paper-I{i}{s}")["generators"]), SPLIT_ORDER))
    for _ in range(40):
        gens = [_random_poly(rng, ("x", "y")) for _ in range(rng.randint(1, 3))]
        if any(not g.is_zero() for g in gens):
            bases.append(groebner(gens, LexOrder("x", "y")))
    assert len(bases) >= 100
    assert all(spoly_criterion_holds(gb) for gb in bases)

    _snf_checks(rng, 100)

    vars = ("t", "x")
    for _ in range(1000):
        p = _random_poly(rng, vars)
        assert parse_poly(print_poly(p), vars) == p
