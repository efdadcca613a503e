"""Finite presentations, abelianization and Tietze eliminations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .snf import smith_normal_form
from .words import exponent_sums, format_word, free_reduce, generators_of, inverse, parse_word


class TietzeError(ValueError):
    pass


@dataclass(frozen=True)
class Relator:
    label: str
    word: tuple

    def __str__(self):
        return f"({self.label}) {format_word(self.word)}"


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple
    definitions: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            extra = generators_of(r.word) - gens
            if extra:
                raise TietzeError(f"relator {r.label} uses undeclared generators {sorted(extra)}")

    @classmethod
    def from_strings(cls, generators, relators) -> "Presentation":
        """``relators`` is a sequence of (label, relation text) pairs."""
        gens = tuple(generators)
        return cls(gens, tuple(Relator(lab, parse_word(txt, gens)) for lab, txt in relators))

    def relator(self, label: str) -> Relator:
        for r in self.relators:
            if r.label == label:
                return r
        raise TietzeError(f"no relator labelled {label!r}")

    def index(self, label: str) -> int:
        for i, r in enumerate(self.relators):
            if r.label == label:
                return i
        raise TietzeError(f"no relator labelled {label!r}")

    def __str__(self):
        lines = ["< " + ", ".join(self.generators) + " |"]
        lines += [f"  {r}" for r in self.relators]
        lines.append(">")
        return "\n".join(lines)


def abelianization_matrix(p: Presentation):
    return [exponent_sums(r.word, p.generators) for r in p.relators]


def abelianize(p: Presentation):
    """(rank, invariant factors > 1) of the abelianized group."""
    n = len(p.generators)
    A = abelianization_matrix(p)
    if not A:
        return n, []
    diag = [d for d in smith_normal_form(A).diagonal if d]
    return n - len(diag), [d for d in diag if d > 1]


def substitute(w, gen: str, replacement) -> tuple:
    out = []
    inv = inverse(replacement)
    for g, e in w:
        if g == gen:
            out.extend(replacement if e == 1 else inv)
        else:
            out.append((g, e))
    return free_reduce(out)


def solve_for(w, gen: str):
    """Word equal to ``gen`` in the group where ``w`` = 1; gen must occur exactly once."""
    hits = [i for i, (g, _) in enumerate(w) if g == gen]
    if len(hits) != 1:
        raise TietzeError(f"{gen} occurs {len(hits)} times in {format_word(w)}; need exactly one")
    i = hits[0]
    u, e, v = w[:i], w[i][1], w[i + 1:]
    # u g v = 1  =>  g = u^-1 v^-1 ;  u g^-1 v = 1  =>  g = v u
    if e == 1:
        return free_reduce(inverse(u) + inverse(v))
    return free_reduce(tuple(v) + tuple(u))


def tietze_eliminate(p: Presentation, gen: str, label: str) -> Presentation:
    if gen not in p.generators:
        raise TietzeError(f"unknown generator {gen}")
    rel = p.relator(label)
    word = solve_for(rel.word, gen)
    gens = tuple(g for g in p.generators if g != gen)
    rels = tuple(Relator(r.label, substitute(r.word, gen, word)) for r in p.relators if r.label != label)
    defs = {k: substitute(v, gen, word) for k, v in p.definitions.items()}
    defs[gen] = word
    # a generator that was re-introduced is its own definition; drop it
    defs = {k: v for k, v in defs.items() if v != ((k, 1),)}
    return Presentation(gens, rels, defs)
