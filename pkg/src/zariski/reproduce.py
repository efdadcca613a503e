"""Replay the worked example end to end and diff against the stored expected values."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.unipoly import rational_roots
from .arrangement import Arrangement, ArrangementError, degeneracy_locus, verify_comb, table1_check
from .data import (combination_points, expected_points, load_arrangement, load_curve, load_families,
                   load_lattice, load_script)
from .elliptic import curve_from_point
from .fixtures import load_fixture
from .fpgroup import abelianize, verify_simplification
from .heightlattice import height, section_intersection, splitting_type_via_lattice
from .plane import PlaneCurve
from .splitting import primitive_form, parse_basis, splitting_type_via_groebner

SCOPES = ("construction", "families", "splitting", "lattice", "pi1")

PASS, FAIL, NOTE = "PASS", "FAIL", "NOTE"


@dataclass(frozen=True)
class Check:
    id: str
    ref: str
    expected: str
    computed: str
    verdict: str

    def as_dict(self):
        return {"id": self.id, "ref": self.ref, "expected": self.expected,
                "computed": self.computed, "verdict": self.verdict}


@dataclass
class ReproReport:
    scope: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.verdict != FAIL for c in self.checks)

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    def add(self, id, ref, expected, computed, verdict=None):
        expected, computed = str(expected), str(computed)
        if verdict is None:
            verdict = PASS if expected == computed else FAIL
        self.checks.append(Check(id, ref, expected, computed, verdict))


def _construction(rep: ReproReport):
    doc = load_fixture("paper-Q")
    got = combination_points(doc)
    exp = expected_points(doc)
    for name in doc["combos"]:
        rep.add(f"point {name}", "construction", exp[name], got[name])
    for label, (pname, text) in doc["curves"].items():
        expected = PlaneCurve.parse(text, label)
        rep.add(f"curve {label}", "construction", expected, curve_from_point(got[pname], label))


def _splitting(rep: ReproReport):
    doc = load_fixture("paper-splitting")
    pts = combination_points(doc["curve"])
    base = pts[doc["base"]]
    types = {}
    for i, other in doc["others"].items():
        res = splitting_type_via_groebner(base, pts[other], doc.get("base_sign", 1))
        for key in ("+", "-"):
            printed = "{" + ", ".join(primitive_form(parse_basis(doc["printed"][i][key]))) + "}"
            computed = "{" + ", ".join(primitive_form(res.bases[key].elements)) + "}"
            rep.add(f"basis G{i}{key}", "splitting", printed, computed)
        rep.add(f"dimensions I{i}+/-", "splitting", tuple(doc["dims"][i]), res.dims)
        rep.add(f"type C3,L{i}", "splitting", tuple(doc["types"][i]), tuple(res.type))
        types[other] = tuple(res.type)
    fx = load_lattice()
    lattice_types = {o: splitting_type_via_lattice(fx, o) for o in fx.others}
    rep.add("route agreement", "splitting", lattice_types, types)


def _lattice(rep: ReproReport):
    doc = load_fixture("paper-MW")
    fx = load_lattice(doc)
    exp = doc["expected"]
    for other in fx.others:
        rep.add(f"height {fx.base},{other}", "lattice", Fraction(exp["heights"][other]),
                height(fx.basis, fx.combos[fx.base], fx.combos[other]))
        rep.add(f"intersection {fx.base},{other}", "lattice", exp["intersections"][other],
                section_intersection(fx.basis, fx.fibers, fx.base, other, fx.combos, fx.sO))
        rep.add(f"type {fx.base},{other}", "lattice", tuple(exp["types"][other]),
                splitting_type_via_lattice(fx, other))


def _relabel(*curves):
    return Arrangement([PlaneCurve(c.poly, lab) for c, lab in zip(curves, ("C1", "C2", "C3", "L"))])


def _families(rep: ReproReport):
    for i in range(1, 5):
        r = verify_comb(load_arrangement(f"paper-C{i}"))
        rep.add(f"comb paper-C{i}", "combinatorics", "Comb(C)", r.verdict)
    doc = load_fixture("symmetric-Q")
    fams, conics, bitangents, table = load_families(doc)
    for a in doc["samples"]["a"]:
        for fam in ("C3a", "C3pa"):
            for L in bitangents.values():
                r = verify_comb(_relabel(conics["C1"], conics["C2"], fams[fam](a), L))
                rep.add(f"comb {fam}({a}) + {L.label}", "families", "Comb(C)", r.verdict)
    for b in doc["samples"]["b"]:
        for i in range(1, 5):
            r = verify_comb(_relabel(conics["C1"], fams["C2b"](b), fams["D3b"](b), fams[f"L{i}b"](b)))
            rep.add(f"comb C2b({b}) + D3b({b}) + L{i}b({b})", "families", "Comb(C)", r.verdict)

    printed = {k: v for k, v in table.items() if k != "params"}
    report = table1_check(fams, bitangents, conics, printed, tuple(table["params"]))
    names = ", ".join(sorted(bitangents))
    for b, col in report["columns"].items():
        found = ", ".join(sorted(filter(None, (col["cells"][r] for r in printed if r != "D3b"))))
        rep.add(f"table lines b={b}", "families", names, found)
        rep.add(f"table D3b b={b}", "families", printed["D3b"][str(b)], col["cells"]["D3b"])
    cells = "; ".join(f"{row}({b}): printed {exp}, found {got}" for row, b, exp, got in report["mismatches"])
    rep.add("table cell labels", "families", "as printed", cells or "as printed",
            PASS if not report["mismatches"] else NOTE)

    for name, locus in family_loci(fams, conics, bitangents).items():
        fam = fams[name]
        seen = fam.degenerate.witnessed(locus)
        missing = [k for k, ok in seen.items() if not ok]
        rep.add(f"degenerate set {name}", "families", fam.degenerate,
                fam.degenerate if not missing else "unwitnessed: " + ", ".join(missing))
        rest = fam.uncovered_singularities()
        rep.add(f"singular members of {name} outside the degenerate set", "families", "1", rest,
                PASS if rest.degree == 0 else NOTE)
    extra = exceptional_values(fams, conics, bitangents)
    text = "; ".join(f"{k}: " + ", ".join(str(v) for v in vs) for k, vs in extra.items())
    rep.add("unlisted exceptional parameters", "families", "none", text or "none", PASS if not extra else NOTE)


def family_loci(fams, conics, bitangents) -> dict:
    """Computed degeneracy locus for each family, pooled over the arrangements it enters."""
    loci = {}
    for name in ("C3a", "C3pa"):
        loci[name] = [q for L in bitangents.values()
                      for q in degeneracy_locus([conics["C1"], conics["C2"], fams[name], L], "a")]
    pooled = []
    for i in range(1, 5):
        loc = degeneracy_locus([conics["C1"], fams["C2b"], fams["D3b"], fams[f"L{i}b"]], "b")
        loci[f"L{i}b"] = loc
        pooled += loc
    loci["C2b"] = loci["D3b"] = pooled
    return loci


def _exceptional(members, locus, param_members):
    """Rational values in ``locus`` outside every listed set where the arrangement breaks."""
    found = []
    for v in sorted(set().union(*(rational_roots(q) for q in locus))):
        if any(m.degenerate.contains(v) for m in param_members):
            continue
        try:
            arr = _relabel(*[m(v) if hasattr(m, "degenerate") else m for m in members])
        except ArrangementError:
            found.append(v)
            continue
        if not verify_comb(arr).passed:
            found.append(v)
    return found


def exceptional_values(fams, conics, bitangents) -> dict:
    """Unlisted rational parameters where a family member breaks the combinatorial type."""
    out = {}
    for name in ("C3a", "C3pa"):
        for L in bitangents.values():
            members = [conics["C1"], conics["C2"], fams[name], L]
            vals = _exceptional(members, degeneracy_locus(members, "a"), [fams[name]])
            if vals:
                out[f"{name} + {L.label}"] = vals
    for i in range(1, 5):
        members = [conics["C1"], fams["C2b"], fams["D3b"], fams[f"L{i}b"]]
        vals = _exceptional(members, degeneracy_locus(members, "b"), members[1:])
        if vals:
            out[f"C2b + D3b + L{i}b"] = vals
    return out


def _pi1(rep: ReproReport):
    for name in ("C1", "C3"):
        p, moves = load_script(f"pi1-{name}-script")
        rank, torsion = abelianize(p)
        rep.add(f"abelianization {name}", "pi1", "Z^3", f"Z^{rank}" + "".join(f" + Z/{d}" for d in torsion))
        res = verify_simplification(p, moves)
        rep.add(f"script {name}", "pi1", "PASS", res.verdict if res.passed else f"{res.verdict}: {res.error}")


_RUNNERS = {"construction": _construction, "families": _families, "splitting": _splitting,
            "lattice": _lattice, "pi1": _pi1}


def reproduce(scope: str = "all") -> ReproReport:
    if scope != "all" and scope not in _RUNNERS:
        raise ValueError(f"unknown scope {scope!r}")
    rep = ReproReport(scope)
    for name in SCOPES if scope == "all" else (scope,):
        _RUNNERS[name](rep)
    return rep
