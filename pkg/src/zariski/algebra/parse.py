"""Text front end for polynomials.

Grammar (whitespace ignored)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := factor ('*'? factor)*
    factor:= number | ident ['^' uint] | '(' expr ')' ['^' uint]
    number:= uint ['/' uint]

Identifiers must be among the declared variables.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import QQ
from .multipoly import MultiPoly
from .ratfunc import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(.))")


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownVariableError(ParseError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"unknown variable {name!r}", pos)
        self.name = name


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text, variables, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = tuple(variables)
        self.field = field

    @property
    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        sign = 1
        if self.peek[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _starts_factor(self):
        return self.peek[0] in ("num", "id", "(")

    def term(self):
        if not self._starts_factor():
            tok = self.peek
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected a term, found {found}", tok[2])
        acc = self.factor()
        while True:
            if self.peek[0] == "*":
                self.take()
                acc = acc * self.factor()
            elif self._starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def _exponent(self):
        if self.peek[0] == "^":
            self.take()
            return self.take("num")[1]
        return 1

    def factor(self):
        kind, val, pos = self.peek
        if kind == "num":
            self.take()
            c = Fraction(val)
            if self.peek[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                c = Fraction(val, den[1])
            return MultiPoly.constant(c, self.vars, self.field)
        if kind == "id":
            self.take()
            if val not in self.vars:
                raise UnknownVariableError(val, pos)
            return MultiPoly.gen(val, self.vars, self.field) ** self._exponent()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner ** self._exponent()
        raise ParseError("expected a number, variable or '('", pos)


def parse_poly(text: str, variables, field=QQ) -> MultiPoly:
    """Parse ``text`` into a polynomial in ``variables`` with exact coefficients."""
    return _Parser(text, variables, field).parse()


def print_poly(p: MultiPoly) -> str:
    return str(p)


def parse_ratfunc(text: str, var: str = "t") -> RationalFunction:
    """Parse a polynomial or a quotient ``(A)/(B)`` into an element of Q(var)."""
    text = text.strip()
    depth = 0
    split = None
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0 and k > 0 and text[k - 1] == ")":
            split = k
    if split is None:
        return RationalFunction(parse_poly(text, (var,)).to_uni(var))
    num = parse_poly(text[:split], (var,)).to_uni(var)
    den = parse_poly(text[split + 1:], (var,)).to_uni(var)
    if den.is_zero():
        raise ParseError("zero denominator", split + 1)
    return RationalFunction(num, den)
