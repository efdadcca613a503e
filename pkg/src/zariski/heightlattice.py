"""Height pairing bookkeeping on a Mordell-Weil lattice with I_n fibers.

The surface data (the Gram matrix, s.O, fiber incidences) is taken as input;
this module only does the arithmetic that turns heights into intersection
numbers of sections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class LatticeError(ValueError):
    """Inconsistent lattice or fiber data."""


@dataclass(frozen=True)
class SectionCombo:
    coeffs: tuple
    torsion: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))


@dataclass(frozen=True)
class LatticeBasis:
    names: tuple
    gram: tuple
    sO: dict = field(default_factory=dict, compare=False)
    chi: int = 1

    def __post_init__(self):
        gram = tuple(tuple(Fraction(v) for v in row) for row in self.gram)
        n = len(self.names)
        if len(gram) != n or any(len(row) != n for row in gram):
            raise LatticeError(f"Gram matrix must be {n}x{n}")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix is not symmetric")
        if int(self.chi) != self.chi or self.chi < 1:
            raise LatticeError("chi must be a positive integer")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class FiberConfig:
    """Fibers ``{id: n}`` of type I_n and the component each section meets."""

    fibers: dict
    incidence: dict

    def __post_init__(self):
        for fid, n in self.fibers.items():
            if n < 1:
                raise LatticeError(f"fiber {fid}: I_{n} is not a valid type")
        for sec, comps in self.incidence.items():
            for fid, i in comps.items():
                if fid not in self.fibers:
                    raise LatticeError(f"section {sec}: unknown fiber {fid}")
                if not 0 <= i < self.fibers[fid]:
                    raise LatticeError(f"section {sec}: component {i} out of range at fiber {fid}")

    def component(self, section: str, fid) -> int:
        try:
            return self.incidence[section][fid]
        except KeyError:
            raise LatticeError(f"no incidence data for {section} at fiber {fid}") from None


def height(basis: LatticeBasis, c1: SectionCombo, c2: SectionCombo) -> Fraction:
    """Bilinear extension of the Gram matrix; torsion summands contribute nothing."""
    if len(c1.coeffs) != basis.rank or len(c2.coeffs) != basis.rank:
        raise LatticeError("combination length does not match the basis")
    return sum((c1.coeffs[i] * basis.gram[i][j] * c2.coeffs[j]
                for i in range(basis.rank) for j in range(basis.rank)), Fraction(0))


def contribution(n: int, i: int, j: int) -> Fraction:
    """Local correction at an I_n fiber for sections meeting components i and j."""
    if n < 1:
        raise LatticeError(f"I_{n} is not a fiber type")
    for k in (i, j):
        if not 0 <= k < n:
            raise LatticeError(f"component index {k} out of range for I_{n}")
    if i == 0 or j == 0:
        return Fraction(0)
    lo, hi = min(i, j), max(i, j)
    return Fraction(lo * (n - hi), n)


def section_intersection(basis: LatticeBasis, fibers: FiberConfig, s1: str, s2: str,
                         combos: dict, sO: dict | None = None) -> int:
    """s1.s2 from chi + s1.O + s2.O - <s1, s2> - sum of Contr."""
    sO = basis.sO if sO is None else sO
    try:
        o1, o2 = sO[s1], sO[s2]
    except KeyError as exc:
        raise LatticeError(f"missing s.O for {exc.args[0]}") from None
    contr = sum((contribution(n, fibers.component(s1, fid), fibers.component(s2, fid))
                 for fid, n in fibers.fibers.items()), Fraction(0))
    value = basis.chi + o1 + o2 - height(basis, combos[s1], combos[s2]) - contr
    if value.denominator != 1 or value < 0:
        raise LatticeError(f"{s1}.{s2} = {value} is not a nonnegative integer")
    return int(value)


@dataclass(frozen=True)
class LatticeFixture:
    basis: LatticeBasis
    fibers: FiberConfig
    combos: dict
    sO: dict
    base: str
    others: tuple
    total: int = 2


def splitting_type_via_lattice(fx: LatticeFixture, other: str) -> tuple:
    m = section_intersection(fx.basis, fx.fibers, fx.base, other, fx.combos, fx.sO)
    if m > fx.total:
        raise LatticeError(f"{fx.base}.{other} = {m} exceeds the intersection number {fx.total}")
    return tuple(sorted((m, fx.total - m)))


def lattice_from_data(data: dict) -> LatticeFixture:
    """Build a fixture from its JSON form."""
    names = tuple(data["basis"])
    basis = LatticeBasis(names, tuple(tuple(Fraction(v) for v in row) for row in data["gram"]),
                         chi=data.get("chi", 1))
    fibers = {k: int(v) for k, v in data["fibers"].items()}
    sections = data["sections"]
    combos = {k: SectionCombo(v["coeffs"], v.get("torsion", False)) for k, v in sections.items()}
    sO = {k: int(v["sO"]) for k, v in sections.items()}
    incidence = {k: {f: int(i) for f, i in v["incidence"].items()} for k, v in sections.items()}
    return LatticeFixture(LatticeBasis(names, basis.gram, sO, basis.chi),
                          FiberConfig(fibers, incidence), combos, sO,
                          data["base"], tuple(data["others"]), int(data.get("total", 2)))
