"""Turn fixture documents into library objects."""

from __future__ import annotations

from fractions import Fraction

from .algebra.parse import parse_poly
from .arrangement import Arrangement, DegenerateSet, Family
from .elliptic import CurvePoint, WeierstrassCurve, linear_combination
from .fixtures import FixtureError, load_fixture
from .fpgroup import Presentation
from .heightlattice import lattice_from_data
from .plane import PlaneCurve


def _doc(source, kind: str) -> dict:
    doc = load_fixture(source) if isinstance(source, str) else source
    if doc.get("kind") != kind:
        raise FixtureError(f"expected a {kind!r} fixture, got {doc.get('kind')!r}")
    return doc


def load_curve(source="paper-Q"):
    """(curve, named points) from a curve fixture."""
    doc = _doc(source, "curve")
    curve = WeierstrassCurve.parse(doc["F"], doc.get("param", "t"), doc.get("var", "x"))
    points = {name: curve.point(x, y) for name, (x, y) in doc["points"].items()}
    return curve, points


def combination_points(source="paper-Q") -> dict:
    """Each named combination of the basis points, computed with the group law."""
    doc = _doc(source, "curve")
    curve, points = load_curve(doc)
    basis = [points[n] for n in doc["basis"]]
    return {name: linear_combination(curve, basis, coeffs) for name, coeffs in doc["combos"].items()}


def expected_points(source="paper-Q") -> dict:
    doc = _doc(source, "curve")
    curve, _ = load_curve(doc)
    return {name: CurvePoint(curve.coerce(x), curve.coerce(y)) for name, (x, y) in doc["expected"].items()}


def load_arrangement(source) -> Arrangement:
    doc = _doc(source, "arrangement")
    comps = [PlaneCurve.parse(c["poly"], c["label"], c.get("kind", "")) for c in doc["components"]]
    return Arrangement(comps)


def load_families(source="symmetric-Q"):
    """(families, conics, bitangents, table) from a family fixture."""
    doc = _doc(source, "families")
    fams = {}
    for name, f in doc["families"].items():
        param = f["param"]
        deg = f["degenerate"]
        dset = DegenerateSet(param, frozenset(Fraction(v) for v in deg["values"]),
                             tuple(parse_poly(p, (param,)).to_uni(param) for p in deg["polynomials"]))
        fams[name] = Family(name, param, f["text"], dset)
    conics = {k: PlaneCurve.parse(v, k) for k, v in doc["conics"].items()}
    bitangents = {k: PlaneCurve.parse(v, k) for k, v in doc["bitangents"].items()}
    for label, (fam, value) in doc.get("special_conics", {}).items():
        conics[label] = fams[fam](value)
    return fams, conics, bitangents, doc["table"]


def load_lattice(source="paper-MW"):
    return lattice_from_data(_doc(source, "lattice"))


def load_presentation(source) -> Presentation:
    doc = _doc(source, "presentation")
    return Presentation.from_strings(doc["generators"], [(r["label"], r["relation"]) for r in doc["relators"]])


def load_script(source) -> tuple:
    """(presentation, moves) for a simplification script fixture."""
    doc = _doc(source, "script")
    return load_presentation(doc["presentation"]), doc["moves"]
