"""Command-line front end.

Exit codes: 0 success, 1 a check or verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra.parse import ParseError, parse_poly
from .arrangement import ArrangementError, verify_comb
from .data import (combination_points, load_arrangement, load_curve, load_families, load_lattice,
                   load_presentation)
from .elliptic import (CurveError, CurvePoint, DivisorError, SemiReducedDivisor, add_points,
                       mumford_of_divisor, mumford_via_groebner, multiply)
from .fixtures import FixtureError, load_fixture
from .fpgroup import TietzeError, WordSyntaxError, abelianize, verify_simplification
from .groebner import LexOrder, groebner, quotient_dimension
from .heightlattice import LatticeError, height, section_intersection, splitting_type_via_lattice
from .reproduce import SCOPES, reproduce
from .splitting import SplittingError, primitive_form, splitting_type_via_groebner

SCHEMA = "zariski.report/1"


class UsageError(Exception):
    pass


def _emit(args, command: str, text_lines, result: dict, ok: bool = True) -> int:
    if args.format == "structured":
        doc = {"schema": SCHEMA, "command": command, "status": "ok" if ok else "fail", "result": result}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return 0 if ok else 1


# add / mumford ---------------------------------------------------------------------

_TERM = re.compile(r"^(?:(\d+)\*)?(.+)$")


def _named_point(curve, points, token: str) -> CurvePoint:
    token = token.strip()
    if token == "O":
        return CurvePoint()
    if token.startswith("("):
        inner = token[1:-1] if token.endswith(")") else None
        if inner is None or inner.count(",") != 1:
            raise UsageError(f"bad point literal {token!r}")
        x, y = inner.split(",")
        return curve.point(x.strip(), y.strip())
    if token not in points:
        raise UsageError(f"unknown point {token!r}; known: {', '.join(sorted(points))}")
    return points[token]


def _curve_and_points(args):
    doc = load_fixture(args.fixture or "paper-Q")
    curve, points = load_curve(doc)
    if "combos" in doc:
        for name, P in combination_points(doc).items():
            points.setdefault(name, P)
    return curve, points


def _sum_expression(curve, points, tokens):
    """Evaluate ``P [+|- P]...`` where each P may carry an integer multiplier ``k*``."""
    text = " ".join(tokens)
    parts = re.split(r"\s+([+-])\s+", " " + text.strip()) if text.strip() else []
    if not parts:
        raise UsageError("no points given")
    first = parts[0].strip()
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:].strip()
    items = [(sign, first)] + [(1 if op == "+" else -1, tok) for op, tok in zip(parts[1::2], parts[2::2])]
    total = CurvePoint()
    for s, tok in items:
        m = _TERM.match(tok.strip())
        k = int(m.group(1)) if m.group(1) else 1
        P = _named_point(curve, points, m.group(2))
        total = add_points(curve, total, multiply(curve, s * k, P))
    return total


def cmd_add(args) -> int:
    curve, points = _curve_and_points(args)
    R = _sum_expression(curve, points, args.points)
    result = {"point": "O" if R.is_infinity else {"x": str(R.x), "y": str(R.y)}}
    return _emit(args, "add", [str(R)], result)


def cmd_mumford(args) -> int:
    curve, points = _curve_and_points(args)
    pts = [_named_point(curve, points, tok) for tok in args.points]
    d = SemiReducedDivisor([(P, 1) for P in pts])
    pair = mumford_of_divisor(curve, d)
    lines = [f"u = {pair.u}", f"v = {pair.v}"]
    result = {"u": str(pair.u), "v": str(pair.v)}
    if args.groebner:
        gb = mumford_via_groebner(curve, d)
        lines.append(f"groebner {gb.order} = {gb}")
        result["groebner"] = [str(g) for g in gb]
    return _emit(args, "mumford", lines, result)


# groebner --------------------------------------------------------------------------

def _parse_order(spec: str, ring) -> LexOrder:
    names = [s for s in re.split(r"[\s,>]+", spec.strip()) if s]
    try:
        order = LexOrder(*names)
        order.key(ring)
        return order
    except ValueError as exc:
        raise UsageError(f"bad order {spec!r}: {exc}") from None


def cmd_groebner(args) -> int:
    if args.gens:
        ring = tuple(v for v in re.split(r"[\s,]+", args.vars) if v)
        texts = args.gens
        order_spec = args.order or ",".join(reversed(ring))
    else:
        doc = load_fixture(args.ideal or args.fixture or "")
        if doc.get("kind") != "ideal":
            raise UsageError("expected an ideal fixture")
        ring = tuple(doc["vars"])
        texts = doc["generators"]
        order_spec = args.order or ",".join(doc["order"])
    order = _parse_order(order_spec, ring)
    gens = [parse_poly(s, ring) for s in texts]
    gb = groebner(gens, order)
    dim = quotient_dimension(gb)
    elems = primitive_form(gb.elements) if args.primitive else [str(g) for g in gb]
    lines = [f"order {order}"] + [f"  {g}" for g in elems] + [f"dimension {dim}"]
    return _emit(args, "groebner", lines, {"order": list(order.variables), "basis": elems,
                                           "dimension": str(dim)})


# split / lattice ---------------------------------------------------------------------

def cmd_split(args) -> int:
    doc = load_fixture(args.fixture or "paper-splitting")
    pts = combination_points(doc["curve"])
    base = pts[doc["base"]]
    which = args.lines or list(doc["others"])
    lines, result, ok = [], {}, True
    for i in which:
        if i not in doc["others"]:
            raise UsageError(f"unknown line index {i}")
        res = splitting_type_via_groebner(base, pts[doc["others"][i]], doc.get("base_sign", 1))
        entry = {"dims": list(res.dims), "type": list(res.type),
                 "bases": {k: primitive_form(gb.elements) for k, gb in res.bases.items()}}
        if "types" in doc:
            ok &= list(res.type) == doc["types"][i]
        result[i] = entry
        lines.append(f"L{i}: dims {res.dims}, splitting type {res.type}")
        for k in ("+", "-"):
            lines.append(f"  G{i}{k} = {{" + ", ".join(entry["bases"][k]) + "}")
    return _emit(args, "split", lines, result, ok)


def cmd_lattice(args) -> int:
    fx = load_lattice(args.fixture or "paper-MW")
    lines, result = [], {}
    for other in fx.others:
        h = height(fx.basis, fx.combos[fx.base], fx.combos[other])
        s = section_intersection(fx.basis, fx.fibers, fx.base, other, fx.combos, fx.sO)
        m = splitting_type_via_lattice(fx, other)
        result[other] = {"height": str(h), "intersection": s, "type": list(m)}
        lines.append(f"<{fx.base}, {other}> = {h}; s.s = {s}; splitting type {m}")
    return _emit(args, "lattice", lines, result)


# comb / family -------------------------------------------------------------------------

def cmd_comb(args) -> int:
    arr = load_arrangement(args.arrangement or args.fixture or "paper-C1")
    rep = verify_comb(arr)
    lines = [f"[{'ok' if v else 'FAIL'}] {k}" for k, v in rep.clauses.items()]
    lines += [p.summary() for p in rep.profiles]
    lines.append(f"verdict: {rep.verdict}")
    result = {"clauses": rep.clauses, "profiles": [p.summary() for p in rep.profiles],
              "verdict": rep.verdict}
    return _emit(args, "comb", lines, result, rep.passed)


def cmd_family(args) -> int:
    fams, _, _, _ = load_families(args.fixture or "symmetric-Q")
    if args.name not in fams:
        raise UsageError(f"unknown family {args.name!r}; known: {', '.join(fams)}")
    fam = fams[args.name]
    if args.value is None:
        text = str(fam.degenerate)
        return _emit(args, "family", [f"{fam.name}: degenerate when {text}"],
                     {"family": fam.name, "degenerate": text})
    curve = fam(Fraction(args.value), allow_degenerate=args.allow_degenerate)
    return _emit(args, "family", [str(curve)], {"family": fam.name, "param": args.value,
                                                 "curve": str(curve)})


# pi1 -----------------------------------------------------------------------------------

def cmd_pi1(args) -> int:
    doc = load_fixture(args.presentation or args.fixture or "pi1-C1-script")
    if doc.get("kind") == "script":
        p, moves = load_presentation(doc["presentation"]), doc["moves"]
    else:
        p, moves = load_presentation(doc), None
    rank, torsion = abelianize(p)
    lines = [f"abelianization: rank {rank}, invariant factors {torsion}"]
    result = {"rank": rank, "invariant_factors": torsion}
    ok = True
    if moves is not None:
        res = verify_simplification(p, moves)
        for st in res.steps:
            lines.append(f"  {st.step:3d}. {st.detail} [{st.certificates} certified]")
        lines.append(str(res.presentation))
        lines.append(f"verdict: {res.verdict}" + (f" ({res.error})" if res.error else ""))
        result.update(verdict=res.verdict, final=str(res.presentation), error=res.error)
        ok = res.passed
    return _emit(args, "pi1", lines, result, ok)


# reproduce -----------------------------------------------------------------------------

def cmd_reproduce(args) -> int:
    rep = reproduce(args.scope)
    lines = [f"[{c.verdict}] {c.id}: {c.computed}" + ("" if c.verdict == "PASS" else f" (expected {c.expected})")
             for c in rep.checks]
    lines.append(f"{sum(c.verdict == 'PASS' for c in rep.checks)}/{len(rep.checks)} passed; "
                 f"overall {rep.verdict}")
    result = {"scope": rep.scope, "checks": [c.as_dict() for c in rep.checks], "verdict": rep.verdict}
    return _emit(args, "reproduce", lines, result, rep.passed)


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the command name; the copy on each
    # subcommand must not overwrite a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)
    common.add_argument("--fixture", default=argparse.SUPPRESS, help="fixture name or path to a JSON file")

    parser = argparse.ArgumentParser(prog="zariski",
                                     description="Exact computations for conic-line arrangements.")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--fixture", help="fixture name or path to a JSON file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("add", parents=[common], help="add points on the elliptic curve")
    p.add_argument("points", nargs="+", help="expression such as 'P12 + P31' or '2*P12 - P23'")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("mumford", parents=[common], help="Mumford pair of a divisor")
    p.add_argument("points", nargs="+")
    p.add_argument("--groebner", action="store_true", help="also compute the Groebner basis route")
    p.set_defaults(func=cmd_mumford)

    p = sub.add_parser("groebner", parents=[common], help="reduced lex basis and quotient dimension")
    p.add_argument("ideal", nargs="?", help="ideal fixture name or path")
    p.add_argument("--order", help="variables from highest to lowest, e.g. 'x>y>t'")
    p.add_argument("--gens", nargs="+", help="generators given inline")
    p.add_argument("--vars", default="t,x,y", help="ring variables for --gens")
    p.add_argument("--primitive", action="store_true", help="print integer primitive forms")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("split", parents=[common], help="splitting types by Groebner bases")
    p.add_argument("lines", nargs="*")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("lattice", parents=[common], help="splitting types by the height pairing")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("comb", parents=[common], help="verify the combinatorial type")
    p.add_argument("arrangement", nargs="?")
    p.set_defaults(func=cmd_comb)

    p = sub.add_parser("family", parents=[common], help="evaluate a deformation family")
    p.add_argument("name")
    p.add_argument("value", nargs="?")
    p.add_argument("--allow-degenerate", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("pi1", parents=[common], help="abelianize and replay a simplification script")
    p.add_argument("presentation", nargs="?")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("reproduce", parents=[common], help="replay the worked example")
    p.add_argument("scope", nargs="?", default="all", choices=("all",) + SCOPES)
    p.set_defaults(func=cmd_reproduce)
    return parser


_INPUT_ERRORS = (UsageError, ParseError, FixtureError, CurveError, DivisorError, ArrangementError,
                 LatticeError, SplittingError, TietzeError, WordSyntaxError, ValueError, KeyError)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"zariski {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
