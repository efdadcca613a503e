"""Words in a free group, relation syntax, and relator templates."""

from __future__ import annotations

import re

Word = tuple  # of (generator, +1 | -1)


def free_reduce(w) -> Word:
    out = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse(w) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def mul(*words) -> Word:
    out = ()
    for w in words:
        out = out + tuple(w)
    return free_reduce(out)


def power(w, n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return free_reduce(tuple(w) * n)


def conjugate(w, by) -> Word:
    """by . w . by^-1"""
    return mul(by, w, inverse(by))


def commutator(u, v) -> Word:
    """[u, v] = u v u^-1 v^-1"""
    return mul(u, v, inverse(u), inverse(v))


def tangency_word(u, v) -> Word:
    """{u, v} = u v u v u^-1 v^-1 u^-1 v^-1"""
    return mul(u, v, u, v, inverse(u), inverse(v), inverse(u), inverse(v))


def cyclic_reduce(w) -> Word:
    w = free_reduce(w)
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return w


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))] or [w]


def canonical_cyclic(w) -> Word:
    """Representative of w up to cyclic permutation and inversion."""
    w = cyclic_reduce(w)
    cands = rotations(w) + rotations(cyclic_reduce(inverse(w)))
    return min(cands, key=lambda c: [(g, -e) for g, e in c])


def same_relator(u, v) -> bool:
    return canonical_cyclic(u) == canonical_cyclic(v)


def exponent_sums(w, generators) -> list:
    idx = {g: i for i, g in enumerate(generators)}
    row = [0] * len(generators)
    for g, e in w:
        row[idx[g]] += e
    return row


def generators_of(w) -> set:
    return {g for g, _ in w}


def format_word(w) -> str:
    if not w:
        return "e"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


# relation syntax ---------------------------------------------------------------

class WordSyntaxError(ValueError):
    pass


_TOK = re.compile(r"\s*(\^-1|\^\(?-?\d+\)?|[\[\]{}(),=]|[A-Za-z_][A-Za-z_0-9']*)")


def _tokens(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m:
            raise WordSyntaxError(f"cannot read {text[pos:]!r} at position {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _WordParser:
    def __init__(self, text, generators):
        self.toks = _tokens(text)
        self.i = 0
        self.gens = None if generators is None else set(generators)
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise WordSyntaxError(f"expected {expect or 'a token'} in {self.text!r}, found {tok!r}")
        self.i += 1
        return tok

    def relation(self):
        lhs = self.expr()
        if self.peek() == "=":
            self.take()
            rhs = self.expr()
            lhs = mul(lhs, inverse(rhs))
        if self.peek() is not None:
            raise WordSyntaxError(f"trailing {self.peek()!r} in {self.text!r}")
        return lhs

    def expr(self):
        w = ()
        while self.peek() not in (None, "]", "}", ")", ",", "="):
            w = mul(w, self.item())
        return w

    def _power(self, w):
        tok = self.peek()
        if tok is not None and tok.startswith("^"):
            self.take()
            n = int(tok[1:].strip("()"))
            return power(w, n)
        return w

    def item(self):
        tok = self.take()
        if tok in ("[", "{"):
            u = self.expr()
            self.take(",")
            v = self.expr()
            self.take("]" if tok == "[" else "}")
            return self._power(commutator(u, v) if tok == "[" else tangency_word(u, v))
        if tok == "(":
            u = self.expr()
            self.take(")")
            return self._power(u)
        if tok == "e":
            return ()
        if not re.match(r"[A-Za-z_]", tok):
            raise WordSyntaxError(f"unexpected {tok!r} in {self.text!r}")
        if self.gens is not None and tok not in self.gens:
            raise WordSyntaxError(f"unknown generator {tok!r} in {self.text!r}")
        return self._power(((tok, 1),))


def parse_word(text: str, generators=None) -> Word:
    """Parse a word or relation; ``u = v`` gives ``u v^-1``, brackets expand as above."""
    return _WordParser(text, generators).relation()


# relator templates -------------------------------------------------------------

def relator_template(kind: str, *args):
    """Relators attached to a singularity type; arguments are words."""
    args = [tuple(a) for a in args]
    arity = {"branch": 2, "node": 2, "tangency": 2, "triple": 3}
    if kind in arity and len(args) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} arguments, got {len(args)}")
    if kind == "branch":
        return [mul(args[0], inverse(args[1]))]
    if kind == "node":
        return [commutator(args[0], args[1])]
    if kind == "tangency":
        return [tangency_word(args[0], args[1])]
    if kind == "triple":
        a, b, c = args
        abc = mul(a, b, c)
        return [mul(abc, inverse(mul(c, a, b))), mul(abc, inverse(mul(b, c, a)))]
    if kind == "projective":
        if not args:
            raise ValueError("projective relation needs at least one generator")
        return [mul(*args)]
    raise ValueError(f"unknown template kind {kind!r}")
