from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zariski.data import load_lattice
from zariski.heightlattice import (
    FiberConfig,
    LatticeBasis,
    LatticeError,
    SectionCombo,
    contribution,
    height,
    lattice_from_data,
    section_intersection,
    splitting_type_via_lattice,
)


@pytest.fixture(scope="module")
def fx():
    return load_lattice()


def test_contribution_values():
    assert contribution(2, 1, 1) == Fraction(1, 2)
    assert contribution(2, 0, 1) == 0
    assert contribution(3, 1, 2) == Fraction(1, 3)
    assert contribution(3, 2, 2) == Fraction(2, 3)
    with pytest.raises(LatticeError):
        contribution(2, 2, 0)
    with pytest.raises(LatticeError):
        contribution(0, 0, 0)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_contribution_symmetric_and_bounded(args):
    n, i, j = args
    c = contribution(n, i, j)
    assert c == contribution(n, j, i)
    assert 0 <= c <= Fraction(n, 4)
    # diagonal entries are the local heights i(n-i)/n
    assert contribution(n, i, i) == Fraction(i * (n - i), n)


@pytest.mark.parametrize("other,h,m,typ", [("Q1", 1, 0, (0, 2)), ("Q2", 1, 0, (0, 2)),
                                           ("Q3", 0, 1, (1, 1)), ("Q4", 0, 1, (1, 1))])
def test_heights_and_intersections(fx, other, h, m, typ):
    assert height(fx.basis, fx.combos["Q0"], fx.combos[other]) == h
    assert section_intersection(fx.basis, fx.fibers, "Q0", other, fx.combos, fx.sO) == m
    assert splitting_type_via_lattice(fx, other) == typ


def test_self_height(fx):
    assert height(fx.basis, fx.combos["Q0"], fx.combos["Q0"]) == 1


coeff = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))


@given(coeff, coeff, coeff, st.integers(-3, 3))
def test_height_is_symmetric_bilinear(fx, a, b, c, k):
    B = fx.basis
    A, Bc, C = SectionCombo(a), SectionCombo(b), SectionCombo(c)
    assert height(B, A, Bc) == height(B, Bc, A)
    ab = SectionCombo(tuple(x + k * y for x, y in zip(a, b)))
    assert height(B, ab, C) == height(B, A, C) + k * height(B, Bc, C)


def test_basis_validation():
    with pytest.raises(LatticeError):
        LatticeBasis(("a", "b"), ((1, 0), (1, 1)))
    with pytest.raises(LatticeError):
        LatticeBasis(("a",), ((1, 0),))
    with pytest.raises(LatticeError):
        LatticeBasis(("a",), ((1,),), chi=0)


def test_fiber_validation():
    with pytest.raises(LatticeError):
        FiberConfig({"v": 0}, {})
    with pytest.raises(LatticeError):
        FiberConfig({"v": 2}, {"s": {"v": 2}})
    with pytest.raises(LatticeError):
        FiberConfig({"v": 2}, {"s": {"w": 0}})
    with pytest.raises(LatticeError):
        FiberConfig({"v": 2}, {}).component("s", "v")


def test_non_integral_intersection_is_rejected():
    basis = LatticeBasis(("P",), ((Fraction(1, 2),),), {"A": 0, "B": 0})
    fibers = FiberConfig({"v": 2}, {"A": {"v": 0}, "B": {"v": 0}})
    combos = {"A": SectionCombo((1,)), "B": SectionCombo((1,))}
    with pytest.raises(LatticeError):
        section_intersection(basis, fibers, "A", "B", combos)


def test_fixture_round_trip(fx):
    from zariski.fixtures import load_fixture

    assert lattice_from_data(load_fixture("paper-MW")) == fx
    assert fx.others == ("Q1", "Q2", "Q3", "Q4")
